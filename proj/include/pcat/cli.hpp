#pragma once

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "pcat/cache.hpp"
#include "pcat/checks.hpp"
#include "pcat/report.hpp"

namespace pcat {

/// One invocation of the command-line tool.
struct RunConfig {
  std::string command;
  int n = 2;
  int max_legs = 6;
  int slack = 2;
  std::string preset = "o-plus";
  std::string mode = "projective";  // closure only
  std::uint64_t seed = 7;
  double tolerance = 1e-9;
  int samples = 100;
  std::optional<std::filesystem::path> cache_dir;
  Format format = Format::json;
  // enumerate / dims / gram / fatten-verify
  std::optional<int> k;
  std::optional<int> l;
  bool pairings = false;
  bool catalan_table = false;
  bool homomorphism = false;
  bool expect_independent = false;
  int max_points = 0;  // 0: verb default
  bool clear = false;  // cache
};

/// Usage errors: bad flag values or combinations. The tool exits with 64.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw UsageError(what);
}

inline Closer make_closer(const RunConfig& c, std::ostream& err) {
  if (!c.cache_dir) return {};
  const auto dir = *c.cache_dir;
  return [dir, &err](const GeneratorSet& g, int max_legs, int slack) {
    auto r = close_cached(g, max_legs, slack, dir);
    const char* what = r.outcome == CacheOutcome::hit ? "hit" : r.outcome == CacheOutcome::corrupt ? "corrupt, recomputed" : "miss";
    err << "cache " << what << ": " << r.file.string() << '\n';
    return std::move(r.result);
  };
}

inline std::string signature_list(const std::vector<Signature>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.to_string();
  return s;
}

inline Report run_enumerate(const RunConfig& c) {
  Report r;
  r.command = "enumerate";
  if (c.catalan_table) {
    const int max_k = c.max_points > 0 ? c.max_points : 8;
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    r.table.columns = {"k", "nc_pairings_0_2k", "nc_partitions_0_k", "catalan"};
    for (const auto& row : catalan_table(max_k)) {
      ok = ok && row.nc_pairings == row.catalan && row.nc_partitions == row.catalan;
      rows.push_back({{"k", row.k}, {"nc_pairings", row.nc_pairings}, {"nc_partitions", row.nc_partitions},
                      {"catalan", row.catalan}});
      r.table.rows.push_back({std::to_string(row.k), std::to_string(row.nc_pairings),
                              std::to_string(row.nc_partitions), std::to_string(row.catalan)});
    }
    r.body["catalan_table"] = rows;
    r.status = ok ? Status::pass : Status::mismatch;
    return r;
  }
  require(c.k && c.l, "enumerate needs --k and --l (or --catalan-table)");
  require(*c.k >= 0 && *c.l >= 0, "--k and --l must be non-negative");
  const auto parts = c.pairings ? enumerate_nc_pairings(*c.k, *c.l) : enumerate_nc_partitions(*c.k, *c.l);
  r.body["k"] = *c.k;
  r.body["l"] = *c.l;
  r.body["pairings"] = c.pairings;
  r.body["count"] = parts.size();
  nlohmann::json list = nlohmann::json::array();
  r.table.columns = {"index", "partition"};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    list.push_back(serialize(parts[i]));
    r.table.rows.push_back({std::to_string(i), serialize(parts[i])});
  }
  r.body["partitions"] = list;
  r.notes.push_back(std::to_string(parts.size()) + (c.pairings ? " noncrossing pairings" : " noncrossing partitions"));
  return r;
}

inline Report run_dims(const RunConfig& c) {
  Report r;
  r.command = "dims";
  require(c.n >= 1, "--n must be >= 1");
  if (c.homomorphism) {
    const int pts = c.max_points > 0 ? c.max_points : 6;
    const auto h = realization_homomorphism(c.n, pts);
    r.body = {{"n", c.n}, {"max_points", pts}, {"compositions", h.compositions}, {"tensors", h.tensors},
              {"adjoints", h.adjoints}, {"failures", h.failures}};
    r.table.columns = {"check", "cases"};
    r.table.rows = {{"compose", std::to_string(h.compositions)},
                    {"tensor", std::to_string(h.tensors)},
                    {"adjoint", std::to_string(h.adjoints)},
                    {"failures", std::to_string(h.failures.size())}};
    r.status = h.ok() ? Status::pass : Status::mismatch;
    return r;
  }
  const int pts = c.max_points > 0 ? c.max_points : c.max_legs;
  const auto rows = realized_ranks(c.n, pts, c.pairings);
  nlohmann::json counts = nlohmann::json::object(), ranks = nlohmann::json::object();
  r.table.columns = {"k", "l", "count", "rank"};
  std::vector<Signature> dependent;
  for (const auto& row : rows) {
    if (c.k && row.signature.in != *c.k) continue;
    if (c.l && row.signature.out != *c.l) continue;
    counts[row.signature.to_string()] = row.count;
    ranks[row.signature.to_string()] = row.rank;
    if (row.rank != row.count) dependent.push_back(row.signature);
    r.table.rows.push_back({std::to_string(row.signature.in), std::to_string(row.signature.out),
                            std::to_string(row.count), std::to_string(row.rank)});
  }
  r.body["n"] = c.n;
  r.body["pairings"] = c.pairings;
  r.body["counts"] = counts;
  r.body["dims"] = ranks;
  r.notes.push_back(std::string("realized ") + (c.pairings ? "NC pairings" : "NC partitions") + " at N = " +
                    std::to_string(c.n));
  if (c.expect_independent) {
    r.body["dependent"] = signature_list(dependent);
    r.status = dependent.empty() ? Status::pass : Status::mismatch;
  }
  return r;
}

inline Report run_gram(const RunConfig& c) {
  require(c.n >= 1, "--n must be >= 1");
  const int pts = c.max_points > 0 ? c.max_points : 5;
  Report r;
  r.command = "gram";
  r.table.columns = {"k", "l", "partitions", "gram_equal", "rank_n2", "rank_outlines_n"};
  nlohmann::json rows = nlohmann::json::array();
  bool ok = true;
  for (const auto& row : gram_sweep(c.n, pts)) {
    if (c.k && row.signature.in != *c.k) continue;
    if (c.l && row.signature.out != *c.l) continue;
    ok = ok && row.equal && row.rank_partitions == row.rank_outlines;
    rows.push_back({{"signature", row.signature.to_string()}, {"partitions", row.partitions},
                    {"equal", row.equal}, {"rank_partitions", row.rank_partitions},
                    {"rank_outlines", row.rank_outlines}});
    r.table.rows.push_back({std::to_string(row.signature.in), std::to_string(row.signature.out),
                            std::to_string(row.partitions), row.equal ? "yes" : "no",
                            std::to_string(row.rank_partitions), std::to_string(row.rank_outlines)});
  }
  r.body["n"] = c.n;
  r.body["max_points"] = pts;
  r.body["rows"] = rows;
  r.notes.push_back("NC partitions at N = " + std::to_string(c.n * c.n) + " against scaled outlines at n = " +
                    std::to_string(c.n));
  r.status = ok ? Status::pass : Status::mismatch;
  return r;
}

inline Report run_fatten_verify(const RunConfig& c) {
  const int pts = c.max_points > 0 ? c.max_points : 5;
  const auto v = fatten_verify(pts, 8);
  Report r;
  r.command = "fatten-verify";
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : v.failures)
    failures.push_back({{"kind", f.kind}, {"p", f.p}, {"q", f.q}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  r.body["cases"] = v.cases;
  r.body["round_trips"] = v.round_trips;
  r.body["contraction_cases"] = v.contraction_cases;
  r.body["failures"] = failures;
  r.table.columns = {"check", "value"};
  r.table.rows = {{"cases", std::to_string(v.cases)}, {"round trips", std::to_string(v.round_trips)}};
  for (int i = 0; i < 4; ++i)
    r.table.rows.push_back({"contraction case " + std::to_string(i + 1), std::to_string(v.contraction_cases[i])});
  r.table.rows.push_back({"failures", std::to_string(v.failures.size())});
  r.status = v.ok() ? Status::pass : Status::mismatch;
  return r;
}

inline ReferenceKind reference_for(Preset p, Mode m) {
  switch (p) {
    case Preset::o: return ReferenceKind::pairings;
    case Preset::s_plus: return m == Mode::plain ? ReferenceKind::nc_partitions : ReferenceKind::nc_partitions_squared;
    default: return ReferenceKind::nc_pairings;
  }
}

inline Report run_closure(const RunConfig& c, std::ostream& err) {
  require(c.mode == "plain" || c.mode == "projective", "--mode must be plain or projective");
  const Mode mode = c.mode == "plain" ? Mode::plain : Mode::projective;
  const Preset preset = preset_from_string(c.preset);
  require(mode == Mode::plain || c.max_legs % 2 == 0, "--max-legs must be even in projective mode");
  const auto gens = mode == Mode::plain ? plain_generators(preset, c.n) : projective_generators(preset, c.n);
  const auto result = detail::run_closer(make_closer(c, err), gens, c.max_legs, c.slack);
  // the twisted and bare presets have no independent reference
  std::optional<std::map<Signature, std::size_t>> ref;
  if (preset != Preset::o_minus && preset != Preset::o_plus_bare)
    ref = reference_dims(reference_for(preset, mode), c.n, c.max_legs, mode);
  Report r = closure_report("closure", result, ref ? &*ref : nullptr);
  r.body["preset"] = c.preset;
  return r;
}

}  // namespace detail

/// Runs one verb; writes the report to out and diagnostics to err. Returns
/// the exit status (0 pass, 1 mismatch, 2 inconclusive). Throws UsageError
/// on bad configuration.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  using namespace detail;
  require(c.n >= 1, "--n must be >= 1");
  require(c.slack >= 0, "--slack must be >= 0");
  require(c.tolerance > 0, "--tol must be positive");
  Report r;
  try {
    if (c.command == "enumerate") {
      r = run_enumerate(c);
    } else if (c.command == "dims") {
      r = run_dims(c);
    } else if (c.command == "gram") {
      r = run_gram(c);
    } else if (c.command == "fatten-verify") {
      r = run_fatten_verify(c);
    } else if (c.command == "closure") {
      r = run_closure(c, err);
    } else if (c.command == "theorem-t") {
      require(c.max_legs % 2 == 0, "--max-legs must be even for theorem-t");
      r = theorem_t_report(verify_theorem_T(c.n, preset_from_string(c.preset), c.max_legs, c.slack,
                                            make_closer(c, err)));
    } else if (c.command == "pu-po") {
      require(c.n >= 2, "pu-po needs --n >= 2");
      r = pu_po_report(verify_pu_po(c.n, c.max_legs, c.max_points > 0 ? c.max_points : 12));
    } else if (c.command == "twisted") {
      require(c.max_legs % 2 == 0, "--max-legs must be even for twisted");
      r = twisted_report(compare_twisted(c.n, c.max_legs, c.slack, make_closer(c, err)));
    } else if (c.command == "classical-check") {
      r = classical_report(classical_check(c.n, c.samples, c.seed, c.tolerance));
    } else if (c.command == "cache") {
      require(c.cache_dir.has_value(), "cache needs --cache-dir or PCAT_CACHE_DIR");
      r.command = "cache";
      r.table.columns = {"entry", "bytes"};
      nlohmann::json entries = nlohmann::json::array();
      std::vector<std::filesystem::path> files;
      std::error_code ec;
      if (std::filesystem::is_directory(*c.cache_dir, ec))
        for (const auto& e : std::filesystem::directory_iterator(*c.cache_dir))
          if (e.path().extension() == ".pcat") files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        const auto size = std::filesystem::file_size(f, ec);
        entries.push_back({{"entry", f.filename().string()}, {"bytes", size}});
        r.table.rows.push_back({f.filename().string(), std::to_string(size)});
        if (c.clear) std::filesystem::remove(f, ec);
      }
      r.body["entries"] = entries;
      r.body["cleared"] = c.clear;
      r.body["engine"] = kEngineVersion;
    } else {
      throw UsageError("unknown command '" + c.command + "'");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    // validation and shape errors from the library are caused by flag values
    throw UsageError(e.what());
  }
  render(out, r, c.format);
  return exit_code(r.status);
}

}  // namespace pcat
