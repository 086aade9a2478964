#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcat/experiments.hpp"

namespace pcat {

enum class Format { json, csv, markdown };

inline Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "markdown" || s == "md") return Format::markdown;
  throw std::invalid_argument("unknown format '" + s + "'");
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Everything a verb produces. body carries the JSON report; table is what
/// csv and markdown show. No timings or paths go in, so equal configs give
/// byte-identical output.
struct Report {
  std::string command;
  Status status = Status::pass;
  nlohmann::json body = nlohmann::json::object();
  Table table;
  std::vector<std::string> notes;
};

inline int exit_code(Status s) {
  switch (s) {
    case Status::pass:
    case Status::exploratory: return 0;
    case Status::mismatch: return 1;
    case Status::inconclusive: return 2;
  }
  return 1;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

inline void render(std::ostream& os, const Report& r, Format f) {
  switch (f) {
    case Format::json: {
      nlohmann::json j = r.body;
      j["command"] = r.command;
      j["status"] = to_string(r.status);
      os << j.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < r.table.columns.size(); ++i)
        os << (i ? "," : "") << detail::csv_field(r.table.columns[i]);
      os << '\n';
      for (const auto& row : r.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_field(row[i]);
        os << '\n';
      }
      break;
    }
    case Format::markdown: {
      os << "## " << r.command << ": " << to_string(r.status) << "\n\n";
      for (const auto& n : r.notes) os << "- " << n << '\n';
      if (!r.notes.empty()) os << '\n';
      if (r.table.columns.empty()) break;
      os << '|';
      for (const auto& c : r.table.columns) os << ' ' << detail::md_cell(c) << " |";
      os << "\n|";
      for (std::size_t i = 0; i < r.table.columns.size(); ++i) os << "---|";
      os << '\n';
      for (const auto& row : r.table.rows) {
        os << '|';
        for (const auto& c : row) os << ' ' << detail::md_cell(c) << " |";
        os << '\n';
      }
      break;
    }
  }
}

inline std::string render(const Report& r, Format f) {
  std::ostringstream os;
  render(os, r, f);
  return os.str();
}

// Builders shared by the closure verbs.

inline nlohmann::json dims_json(const std::map<Signature, std::size_t>& dims) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [s, d] : dims) j[s.to_string()] = d;
  return j;
}

inline nlohmann::json mismatches_json(const std::vector<DimMismatch>& ms) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& m : ms) j.push_back({{"signature", m.signature.to_string()}, {"found", m.found}, {"expected", m.expected}});
  return j;
}

/// Rows k, l, dim[, reference] in signature order.
inline Table dims_table(const std::map<Signature, std::size_t>& dims,
                        const std::map<Signature, std::size_t>* reference = nullptr,
                        const std::string& dim_name = "dim", const std::string& ref_name = "reference") {
  Table t;
  t.columns = {"k", "l", dim_name};
  if (reference) t.columns.push_back(ref_name);
  for (const auto& [s, d] : dims) {
    std::vector<std::string> row{std::to_string(s.in), std::to_string(s.out), std::to_string(d)};
    if (reference) {
      auto it = reference->find(s);
      row.push_back(it == reference->end() ? "" : std::to_string(it->second));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Report closure_report(const std::string& command, const ClosureResult& c,
                             const std::map<Signature, std::size_t>* reference) {
  Report r;
  r.command = command;
  r.body["mode"] = to_string(c.mode);
  r.body["n"] = c.dim;
  r.body["max_legs"] = c.max_legs;
  r.body["slack"] = c.slack;
  r.body["dims"] = dims_json(c.dims());
  r.body["saturated"] = c.saturated;
  r.body["iterations"] = c.iterations;
  std::vector<DimMismatch> ms;
  if (reference) {
    r.body["reference_dims"] = dims_json(*reference);
    ms = compare_dims(c.dims(), *reference);
  } else {
    r.body["reference_dims"] = nullptr;
  }
  r.body["mismatches"] = mismatches_json(ms);
  r.table = dims_table(c.dims(), reference);
  r.notes.push_back(std::string("mode ") + to_string(c.mode) + ", n = " + std::to_string(c.dim) +
                    ", max legs " + std::to_string(c.max_legs) + ", slack " + std::to_string(c.slack));
  r.notes.push_back(c.saturated ? "saturated after " + std::to_string(c.iterations) + " rounds"
                                : "NOT saturated: dims are lower bounds");
  if (!c.saturated)
    r.status = Status::inconclusive;
  else
    r.status = ms.empty() ? Status::pass : Status::mismatch;
  return r;
}

inline Report theorem_t_report(const TheoremTReport& t) {
  Report r = closure_report("theorem-t", t.closure, &t.reference);
  r.body["preset"] = to_string(t.preset);
  r.body["lemma"] = {{"sandwich_checked", t.lemma.sandwich_checked},
                     {"sandwich_failed", t.lemma.sandwich_failed},
                     {"half_rotation_checked", t.lemma.half_rotation_checked},
                     {"half_rotation_failed", t.lemma.half_rotation_failed}};
  if (t.strictly_smaller) r.body["strictly_smaller"] = *t.strictly_smaller;
  r.notes.insert(r.notes.begin(), "preset " + to_string(t.preset));
  r.notes.push_back("id (x) T (x) id membership: " + std::to_string(t.lemma.sandwich_checked - t.lemma.sandwich_failed) +
                    "/" + std::to_string(t.lemma.sandwich_checked));
  r.notes.push_back("half-rotation invariance: " +
                    std::to_string(t.lemma.half_rotation_checked - t.lemma.half_rotation_failed) + "/" +
                    std::to_string(t.lemma.half_rotation_checked));
  if (t.strictly_smaller)
    r.notes.push_back(*t.strictly_smaller ? "closure is strictly smaller than the even part"
                                          : "closure reaches the even part within the bound");
  r.status = t.status;
  return r;
}

inline Report twisted_report(const TwistedReport& t) {
  Report r;
  r.command = "twisted";
  r.body["mode"] = "projective";
  r.body["n"] = t.n;
  r.body["max_legs"] = t.twisted.max_legs;
  r.body["slack"] = t.twisted.slack;
  r.body["dims"] = dims_json(t.twisted.dims());
  r.body["reference_dims"] = dims_json(t.untwisted.dims());
  r.body["saturated"] = t.twisted.saturated && t.untwisted.saturated;
  r.body["mismatches"] = mismatches_json(t.mismatches);
  const auto ref = t.untwisted.dims();
  r.table = dims_table(t.twisted.dims(), &ref, "twisted", "untwisted");
  r.notes.push_back("n = " + std::to_string(t.n) + ", twisted pair and crossing against the untwisted ones");
  r.status = t.status;
  return r;
}

inline Report pu_po_report(const PuPoReport& p) {
  Report r;
  r.command = "pu-po";
  r.body["n"] = p.n;
  r.body["combinatorial_ok"] = p.combinatorial_ok;
  r.body["spans_ok"] = p.spans_ok;
  nlohmann::json rows = nlohmann::json::array();
  r.table.columns = {"k", "l", "pairings", "compatible", "colored_rank", "uncolored_rank"};
  for (const auto& row : p.rows) {
    nlohmann::json j{{"signature", row.signature.to_string()},
                     {"pairings", row.pairings},
                     {"compatible", row.compatible}};
    j["colored_rank"] = row.colored_rank ? nlohmann::json(*row.colored_rank) : nlohmann::json(nullptr);
    j["uncolored_rank"] = row.uncolored_rank ? nlohmann::json(*row.uncolored_rank) : nlohmann::json(nullptr);
    rows.push_back(j);
    r.table.rows.push_back({std::to_string(row.signature.in), std::to_string(row.signature.out),
                            std::to_string(row.pairings), std::to_string(row.compatible),
                            row.colored_rank ? std::to_string(*row.colored_rank) : "",
                            row.uncolored_rank ? std::to_string(*row.uncolored_rank) : ""});
  }
  r.body["rows"] = rows;
  r.status = p.status;
  return r;
}

namespace detail {
inline std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}
}  // namespace detail

inline Report classical_report(const ClassicalReport& c) {
  Report r;
  r.command = "classical-check";
  r.body["n"] = c.n;
  r.body["samples"] = c.samples;
  r.body["seed"] = c.seed;
  r.body["tol"] = c.tol;
  // deviations are printed in fixed scientific form so reports stay byte-stable
  r.body["max_deviation"] = {{"symmetry", detail::sci(c.worst.symmetry)},
                             {"trace", detail::sci(c.worst.trace)},
                             {"contraction", detail::sci(c.worst.contraction)},
                             {"orthogonality", detail::sci(c.worst.orthogonality)},
                             {"intertwiner", detail::sci(c.intertwiner_residual)}};
  nlohmann::json ic = nlohmann::json::object();
  for (const auto& [d, ok] : c.icrosspart) ic[std::to_string(d)] = ok;
  r.body["crossing_factorization"] = ic;
  r.table.columns = {"check", "value"};
  r.table.rows = {{"symmetry", detail::sci(c.worst.symmetry)},
                  {"trace", detail::sci(c.worst.trace)},
                  {"contraction", detail::sci(c.worst.contraction)},
                  {"orthogonality", detail::sci(c.worst.orthogonality)},
                  {"intertwiner", detail::sci(c.intertwiner_residual)}};
  for (const auto& [d, ok] : c.icrosspart)
    r.table.rows.push_back({"crossing factorization N=" + std::to_string(d), ok ? "exact" : "fails"});
  r.notes.push_back(std::to_string(c.samples) + " samples of O(" + std::to_string(c.n) + "), seed " +
                    std::to_string(c.seed) + ", tolerance " + detail::sci(c.tol));
  r.status = c.status;
  return r;
}

}  // namespace pcat
