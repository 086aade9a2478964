#pragma once

// Exhaustive property sweeps behind the enumerate, dims, gram and
// fatten-verify verbs.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pcat/enumerate.hpp"
#include "pcat/fattening.hpp"
#include "pcat/gram.hpp"
#include "pcat/linalg.hpp"
#include "pcat/realize.hpp"
#include "pcat/echelon.hpp"

namespace pcat {

inline std::uint64_t catalan(int k) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= k; ++m)
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  return c[k];
}

/// All NC partitions (or pairings) with at most max_points points, every
/// signature.
inline std::vector<SetPartition> all_noncrossing(int max_points, bool pairings_only) {
  std::vector<SetPartition> out;
  for (int total = 0; total <= max_points; ++total)
    for (int k = 0; k <= total; ++k) {
      auto v = pairings_only ? enumerate_nc_pairings(k, total - k) : enumerate_nc_partitions(k, total - k);
      out.insert(out.end(), v.begin(), v.end());
    }
  return out;
}

struct CountRow {
  int k = 0;
  std::uint64_t nc_pairings = 0;    // |NCPair(0,2k)|
  std::uint64_t nc_partitions = 0;  // |NCPart(0,k)|
  std::uint64_t catalan = 0;
};

inline std::vector<CountRow> catalan_table(int max_k) {
  std::vector<CountRow> rows;
  for (int k = 1; k <= max_k; ++k)
    rows.push_back({k, enumerate_nc_pairings(0, 2 * k).size(), enumerate_nc_partitions(0, k).size(), catalan(k)});
  return rows;
}

struct HomomorphismReport {
  int n = 0;
  int max_points = 0;
  std::size_t compositions = 0;
  std::size_t tensors = 0;
  std::size_t adjoints = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// realize(q) realize(p) == n^loops realize(q.p), realize(p (x) q) ==
/// realize(p) (x) realize(q) and realize(p*) == realize(p)^T for all NC
/// partitions with at most max_points points (compositions: each factor,
/// tensors: the product).
inline HomomorphismReport realization_homomorphism(int n, int max_points) {
  if (n < 1) throw ValidationError("homomorphism check needs n >= 1");
  HomomorphismReport rep;
  rep.n = n;
  rep.max_points = max_points;
  const auto parts = all_noncrossing(max_points, false);
  std::vector<SparseOperator> ops;
  ops.reserve(parts.size());
  for (const auto& p : parts) ops.push_back(realize(p, n));
  std::map<int, std::vector<std::size_t>> by_upper;
  for (std::size_t i = 0; i < parts.size(); ++i) by_upper[parts[i].upper_count()].push_back(i);

  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    ++rep.adjoints;
    if (realize(involute(p), n) != adjoint_op(ops[i])) rep.failures.push_back("adjoint " + serialize(p));
    for (std::size_t j : by_upper[p.lower_count()]) {
      const auto& q = parts[j];
      ++rep.compositions;
      const auto c = compose(q, p);
      const auto expect = realize(c.partition, n).scaled(integer_power(n, c.loops));
      if (compose_ops(ops[j], ops[i]) != expect)
        rep.failures.push_back("compose " + serialize(q) + " after " + serialize(p));
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (p.size() + parts[j].size() > max_points) continue;
      ++rep.tensors;
      if (tensor_ops(ops[i], ops[j]) != realize(tensor(p, parts[j]), n))
        rep.failures.push_back("tensor " + serialize(p) + " with " + serialize(parts[j]));
    }
  }
  return rep;
}

struct FattenFailure {
  std::string kind;
  std::string p;
  std::string q;
  std::string lhs;
  std::string rhs;
};

struct FattenVerifyReport {
  std::size_t cases = 0;
  std::size_t round_trips = 0;
  std::array<std::size_t, 4> contraction_cases{};  // by ContractionCase - 1
  std::vector<FattenFailure> failures;

  bool covers_all_contractions() const {
    for (auto c : contraction_cases)
      if (c == 0) return false;
    return true;
  }
  bool ok() const { return failures.empty() && covers_all_contractions(); }
};

/// Round trip on every NC partition with at most roundtrip_points points and
/// on every NC pairing of doubled shape; functoriality over all NC partitions
/// with at most functor_points points (compositions pair every composable
/// p, q; tensors require the product to stay within the bound); and the
/// functor check against every neighbouring-point cap, sorted into the four
/// contraction cases.
inline FattenVerifyReport fatten_verify(int functor_points = 5, int roundtrip_points = 8) {
  FattenVerifyReport rep;
  auto fail = [&](std::string kind, const SetPartition* p, const SetPartition* q, std::string lhs,
                  std::string rhs) {
    rep.failures.push_back({std::move(kind), p ? serialize(*p) : "", q ? serialize(*q) : "", std::move(lhs),
                            std::move(rhs)});
  };

  for (const auto& p : all_noncrossing(roundtrip_points, false)) {
    ++rep.round_trips;
    const auto f = fatten(p);
    if (unfatten(f.pairing) != p) fail("round-trip", &p, nullptr, serialize(f.pairing), serialize(p));
  }
  for (int total = 0; total <= roundtrip_points; ++total)
    for (int k = 0; k <= total; ++k)
      for (const auto& w : enumerate_nc_pairings(2 * k, 2 * (total - k))) {
        ++rep.round_trips;
        const auto p = unfatten(w);
        if (fatten(p).pairing != w) fail("round-trip", &w, nullptr, serialize(fatten(p).pairing), serialize(w));
      }

  const auto parts = all_noncrossing(functor_points, false);
  std::map<int, std::vector<const SetPartition*>> by_upper;
  for (const auto& p : parts) by_upper[p.upper_count()].push_back(&p);
  for (const auto& p : parts) {
    ++rep.cases;
    if (auto c = functor_check_involution(p); !c.ok) fail("involution", &p, nullptr, c.lhs, c.rhs);
    for (const SetPartition* q : by_upper[p.lower_count()]) {
      ++rep.cases;
      if (auto c = functor_check_compose(*q, p); !c.ok) fail("compose", &p, q, c.lhs, c.rhs);
    }
    for (const auto& q : parts) {
      if (p.size() + q.size() > functor_points) continue;
      ++rep.cases;
      if (auto c = functor_check_tensor(p, q); !c.ok) fail("tensor", &p, &q, c.lhs, c.rhs);
    }
    for (int i = 1; i < p.lower_count(); ++i) {
      ++rep.cases;
      const auto kind = classify_contraction(p, i);
      ++rep.contraction_cases[static_cast<int>(kind) - 1];
      const auto cap = contraction_cap(p.lower_count(), i);
      if (auto c = functor_check_compose(cap, p); !c.ok)
        fail("contraction " + std::to_string(static_cast<int>(kind)), &p, &cap, c.lhs, c.rhs);
    }
  }
  return rep;
}

struct GramRow {
  Signature signature;
  std::size_t partitions = 0;
  bool equal = false;
  std::size_t rank_partitions = 0;  // span at n^2
  std::size_t rank_outlines = 0;    // span of outlines at n
};

/// Gram comparison for every signature with at most max_points points.
inline std::vector<GramRow> gram_sweep(int n, int max_points) {
  std::vector<GramRow> rows;
  for (int total = 0; total <= max_points; ++total)
    for (int k = 0; k <= total; ++k) {
      const auto parts = enumerate_nc_partitions(k, total - k);
      GramRow row;
      row.signature = {k, total - k};
      row.partitions = parts.size();
      const auto cmp = compare_gram(parts, n);
      row.equal = cmp.equal;
      row.rank_partitions = rank(cmp.partitions);
      row.rank_outlines = rank(cmp.outlines);
      rows.push_back(row);
    }
  return rows;
}

struct RankRow {
  Signature signature;
  std::size_t count = 0;
  std::size_t rank = 0;
};

/// Rank of the realized NC partitions (or pairings) per signature with at
/// most max_points points.
inline std::vector<RankRow> realized_ranks(int n, int max_points, bool pairings_only) {
  std::vector<RankRow> rows;
  for (int total = 0; total <= max_points; ++total)
    for (int k = 0; k <= total; ++k) {
      if (pairings_only && total % 2) continue;
      const auto parts =
          pairings_only ? enumerate_nc_pairings(k, total - k) : enumerate_nc_partitions(k, total - k);
      std::vector<SparseOperator> ops;
      for (const auto& p : parts) ops.push_back(realize(p, n));
      rows.push_back({{k, total - k}, parts.size(), span_dimension(ops)});
    }
  return rows;
}

}  // namespace pcat
