// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Independent expectations come from support/oracles.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "pcat/checks.hpp"
#include "pcat/experiments.hpp"
#include "support/oracles.hpp"

using namespace pcat;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.ok = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %2d %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<int> labels(const SetPartition& p) {
  return oracle::labels_of(p.blocks(), p.size());
}

}  // namespace

int main() {
  criterion(1, "enumeration counts", 10, [] {
    const std::uint64_t expect[] = {1, 2, 5, 14, 42, 132, 429, 1430};
    for (int k = 1; k <= 8; ++k) {
      const auto pairs = enumerate_nc_pairings(0, 2 * k).size();
      const auto parts = enumerate_nc_partitions(0, k).size();
      if (pairs != expect[k - 1] || pairs != oracle::count_noncrossing_matchings(2 * k))
        return Outcome{false, "NCPair(0," + std::to_string(2 * k) + ") = " + std::to_string(pairs)};
      if (parts != oracle::catalan(k) || parts != oracle::count_noncrossing(0, k, false))
        return Outcome{false, "NCPart(0," + std::to_string(k) + ") = " + std::to_string(parts)};
    }
    return Outcome{true, "k = 1..8 match Catalan and brute force"};
  });

  criterion(2, "realization homomorphism", 0, [] {
    std::size_t checked = 0;
    for (int N : {2, 3}) {
      const auto h = realization_homomorphism(N, 6);
      checked += h.compositions + h.tensors + h.adjoints;
      if (!h.ok()) return Outcome{false, "N = " + std::to_string(N) + ": " + h.failures.front()};
    }
    return Outcome{true, std::to_string(checked) + " identities at N = 2, 3 up to 6 points"};
  });

  criterion(3, "independence thresholds", 0, [] {
    for (int N : {2, 3})
      for (int k = 1; k <= 4; ++k) {
        const auto ps = enumerate_nc_pairings(0, 2 * k);
        std::vector<SparseOperator> ops;
        std::vector<std::vector<int>> ls;
        for (const auto& p : ps) {
          ops.push_back(realize(p, N));
          ls.push_back(labels(p));
        }
        const auto r = span_dimension(ops);
        if (r != oracle::catalan(k) || oracle::rank(oracle::delta_rows(ls, N)) != r)
          return Outcome{false, "pairings N = " + std::to_string(N) + " k = " + std::to_string(k)};
      }
    for (int k = 1; k <= 3; ++k) {
      std::vector<SparseOperator> ops;
      std::vector<std::vector<int>> ls;
      for (const auto& p : enumerate_nc_partitions(0, k)) {
        ops.push_back(realize(p, 4));
        ls.push_back(labels(p));
      }
      const auto r = span_dimension(ops);
      if (r != oracle::catalan(k) || oracle::rank(oracle::delta_rows(ls, 4)) != r)
        return Outcome{false, "partitions N = 4 k = " + std::to_string(k)};
    }
    return Outcome{true, "pairings N = 2, 3 k <= 4; partitions N = 4 k <= 3"};
  });

  criterion(4, "outline functor", 300, [] {
    const auto v = fatten_verify(5, 8);
    std::string d = std::to_string(v.round_trips) + " round trips, " + std::to_string(v.cases) +
                    " functor cases, contractions";
    for (auto c : v.contraction_cases) d += " " + std::to_string(c);
    if (!v.failures.empty()) d += "; first failure " + v.failures.front().kind + " " + v.failures.front().p;
    return Outcome{v.ok(), d};
  });

  criterion(5, "Gram equivalence", 0, [] {
    std::size_t sigs = 0;
    for (int n : {2, 3}) {
      for (const auto& row : gram_sweep(n, 5)) {
        ++sigs;
        if (!row.equal) return Outcome{false, "n = " + std::to_string(n) + " at " + row.signature.to_string()};
      }
    }
    // partition side against the brute-force inner product at n^2 = 4
    for (int total = 0; total <= 4; ++total)
      for (int k = 0; k <= total; ++k) {
        const auto parts = enumerate_nc_partitions(k, total - k);
        const auto g = gram_matrix(parts, 4);
        for (std::size_t i = 0; i < parts.size(); ++i)
          for (std::size_t j = 0; j < parts.size(); ++j)
            if (g[i][j] != oracle::inner_product(labels(parts[i]), labels(parts[j]), 4))
              return Outcome{false, "Gram entry at " + Signature{k, total - k}.to_string()};
      }
    return Outcome{true, std::to_string(sigs) + " signatures at n = 2, 3"};
  });

  TheoremTReport t2, t3;
  criterion(6, "projective generation", 600, [&] {
    t2 = verify_theorem_T(2, Preset::o_plus, 8);
    t3 = verify_theorem_T(3, Preset::o_plus, 6);
    const bool ok = t2.closure.saturated && t3.closure.saturated && t2.mismatches.empty() && t3.mismatches.empty();
    return Outcome{ok, "n = 2 to 8 legs: " + to_string(t2.status) + ", n = 3 to 6 legs: " + to_string(t3.status) +
                           ", dim (0,8) = " + std::to_string(t2.closure.dim_of({0, 8}))};
  });

  criterion(7, "half-rotation invariance", 0, [&] {
    std::size_t checked = 0, failed = 0;
    for (const auto* t : {&t2, &t3}) {
      if (t->closure.spaces.empty()) return Outcome{false, "no closure available"};
      const auto duality = realize(SetPartition::pair(), t->n);
      for (const auto& [s, basis] : t->closure.spaces) {
        if (s.in != 0 || s.out < 2) continue;
        for (const auto& e : basis.elements()) {
          ++checked;
          if (!basis.contains(half_rotate(e, duality))) ++failed;
        }
      }
    }
    return Outcome{checked > 0 && failed == 0, std::to_string(checked - failed) + "/" + std::to_string(checked) +
                                                   " basis elements"};
  });

  criterion(8, "colored and uncolored pairings", 0, [] {
    const auto r = verify_pu_po(2, 8, 12);
    return Outcome{r.status == Status::pass, std::string("colors ") + (r.combinatorial_ok ? "ok" : "fail") +
                                                 ", spans " + (r.spans_ok ? "ok" : "fail")};
  });

  criterion(9, "classical check", 0, [] {
    const auto c = classical_check(3, 100, 7, 1e-9);
    const bool ident = icrosspart_identity(2) && icrosspart_identity(3);
    char buf[160];
    std::snprintf(buf, sizeof buf, "worst deviation %.2e, intertwiner %.2e, crossing identity %s",
                  std::max({c.worst.symmetry, c.worst.trace, c.worst.contraction, c.worst.orthogonality}),
                  c.intertwiner_residual, ident ? "exact" : "fails");
    return Outcome{c.status == Status::pass && ident, buf};
  });

  criterion(10, "twisted comparison", 0, [] {
    const auto r = compare_twisted(2, 6);
    std::string d = to_string(r.status) + ", dims";
    for (const auto& [s, v] : r.twisted.dims()) d += " " + s.to_string() + "=" + std::to_string(v);
    return Outcome{r.status == Status::pass, d};
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
