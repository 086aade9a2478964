#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "pcat/combination.hpp"
#include "pcat/gram.hpp"
#include "pcat/half_power.hpp"
#include "pcat/partition.hpp"
#include "pcat/text_format.hpp"

namespace pcat {

/// Outline of a noncrossing partition: a noncrossing pairing on doubled
/// points together with the scalar prod_b n^(1 - |b|/2).
struct FattenResult {
  SetPartition pairing;
  HalfPowerScalar scalar;
};

namespace detail {

// Each point is doubled into two copies. "first" is the copy met first along
// the boundary cyclic order, so for an upper point it is the left copy and for
// a lower point the right one.
inline int first_copy(const SetPartition& p, int point) {
  const int k = p.upper_count();
  if (point <= k) return 2 * point - 1;
  return 2 * k + 2 * (point - k);
}
inline int second_copy(const SetPartition& p, int point) {
  const int k = p.upper_count();
  if (point <= k) return 2 * point;
  return 2 * k + 2 * (point - k) - 1;
}

}  // namespace detail

inline FattenResult fatten(const SetPartition& p) {
  if (!is_noncrossing(p)) throw ValidationError("fatten: partition is crossing");
  std::vector<SetPartition::Block> pairs;
  int half_exponent = 0;
  for (const auto& block : p.blocks()) {
    std::vector<int> cyclic = block;
    std::sort(cyclic.begin(), cyclic.end(), [&](int a, int b) {
      return p.boundary_position(a) < p.boundary_position(b);
    });
    const std::size_t m = cyclic.size();
    for (std::size_t j = 0; j + 1 < m; ++j)
      pairs.push_back({detail::second_copy(p, cyclic[j]), detail::first_copy(p, cyclic[j + 1])});
    pairs.push_back({detail::first_copy(p, cyclic.front()), detail::second_copy(p, cyclic.back())});
    half_exponent += 2 - static_cast<int>(m);
  }
  return {SetPartition::from_blocks(std::move(pairs), 2 * p.upper_count(), 2 * p.lower_count()),
          HalfPowerScalar::power(half_exponent)};
}

/// Inverse of the outline map on noncrossing pairings of doubled rows.
inline SetPartition unfatten(const SetPartition& w) {
  if (w.upper_count() % 2 != 0 || w.lower_count() % 2 != 0)
    throw ValidationError("unfatten: rows must have an even number of points");
  if (!w.is_pairing()) throw ValidationError("unfatten: not a pairing");
  if (!is_noncrossing(w)) throw ValidationError("unfatten: pairing is crossing");
  const int k = w.upper_count() / 2, l = w.lower_count() / 2;
  auto original = [&](int x) {
    if (x <= 2 * k) return (x + 1) / 2;
    return k + (x - 2 * k + 1) / 2;
  };
  detail::UnionFind uf(k + l);
  for (const auto& b : w.blocks()) uf.unite(original(b[0]) - 1, original(b[1]) - 1);
  std::vector<int> labels(static_cast<std::size_t>(k + l));
  for (int i = 0; i < k + l; ++i) labels[i] = uf.find(i);
  auto p = SetPartition::from_labels(labels, k, l);
  if (!is_noncrossing(p) || fatten(p).pairing != w.without_colors())
    throw ValidationError("unfatten: pairing is not an outline");
  return p;
}

/// Linear extension of the scaled outline map.
inline DiagramCombination fatten(const DiagramCombination& c) {
  DiagramCombination out(2 * c.upper_count(), 2 * c.lower_count());
  for (const auto& [p, s] : c.terms()) {
    auto f = fatten(p);
    out.add(f.pairing, s * f.scalar);
  }
  return out;
}

/// Outcome of a functoriality check; lhs/rhs are printable forms of both
/// sides for failure reports.
struct FunctorCheck {
  bool ok = false;
  std::string lhs;
  std::string rhs;
};

namespace detail {
inline std::string term(const HalfPowerScalar& s, const SetPartition& p) {
  return s.to_string() + " * {" + serialize(p) + "}";
}
}  // namespace detail

/// F(q) F(p) == F(q.p) with loop value n^2 in the partition category and n on
/// the pairing side; scalars stay formal.
inline FunctorCheck functor_check_compose(const SetPartition& q, const SetPartition& p) {
  const auto fq = fatten(q), fp = fatten(p);
  const auto paired = compose(fq.pairing, fp.pairing);
  const auto lhs_scalar = fq.scalar * fp.scalar * HalfPowerScalar::power(2 * paired.loops);
  const auto direct = compose(q, p);
  const auto fr = fatten(direct.partition);
  const auto rhs_scalar = HalfPowerScalar::power(4 * direct.loops) * fr.scalar;
  FunctorCheck out;
  out.ok = paired.partition == fr.pairing && lhs_scalar == rhs_scalar;
  out.lhs = detail::term(lhs_scalar, paired.partition);
  out.rhs = detail::term(rhs_scalar, fr.pairing);
  return out;
}

inline FunctorCheck functor_check_tensor(const SetPartition& p, const SetPartition& q) {
  const auto whole = fatten(tensor(p, q));
  const auto fp = fatten(p), fq = fatten(q);
  const auto parts = tensor(fp.pairing, fq.pairing);
  const auto scalar = fp.scalar * fq.scalar;
  return {whole.pairing == parts && whole.scalar == scalar, detail::term(whole.scalar, whole.pairing),
          detail::term(scalar, parts)};
}

inline FunctorCheck functor_check_involution(const SetPartition& p) {
  const auto a = fatten(involute(p.without_colors()));
  const auto f = fatten(p);
  const auto b = involute(f.pairing);
  return {a.pairing == b && a.scalar == f.scalar, detail::term(a.scalar, a.pairing),
          detail::term(f.scalar, b)};
}

/// The four ways two neighbouring lower points can sit in a partition.
enum class ContractionCase {
  pair_block = 1,       // the two points form a block of size two
  two_singletons = 2,   // both are singletons
  inside_block = 3,     // both lie in one block of size > 2
  two_blocks = 4,       // different blocks of sizes a, b with ab > 1
};

inline ContractionCase classify_contraction(const SetPartition& p, int lower_index) {
  if (lower_index < 1 || lower_index >= p.lower_count())
    throw ValidationError("contraction position out of range");
  const int x = p.upper_count() + lower_index;
  const int bx = p.block_of(x), by = p.block_of(x + 1);
  const auto sx = p.blocks()[bx].size(), sy = p.blocks()[by].size();
  if (bx == by) return sx == 2 ? ContractionCase::pair_block : ContractionCase::inside_block;
  if (sx == 1 && sy == 1) return ContractionCase::two_singletons;
  return ContractionCase::two_blocks;
}

/// Cap placed under lower points lower_index, lower_index + 1.
inline SetPartition contraction_cap(int lower_count, int lower_index) {
  return tensor(tensor(SetPartition::identity(lower_index - 1), involute(SetPartition::pair())),
                SetPartition::identity(lower_count - lower_index - 1));
}

/// Gram matrix of the partitions at dimension n^2 against the Gram matrix of
/// their scaled outlines at dimension n.
struct GramComparison {
  bool equal = false;
  RationalMatrix partitions;  // at n^2
  RationalMatrix outlines;    // at n, scalars included
};

inline GramComparison compare_gram(const std::vector<SetPartition>& parts, int n) {
  if (n < 1) throw ValidationError("gram comparison needs n >= 1");
  GramComparison out;
  out.partitions = gram_matrix(parts, n * n);
  std::vector<FattenResult> fat;
  std::vector<SetPartition> pairings;
  for (const auto& p : parts) {
    fat.push_back(fatten(p));
    pairings.push_back(fat.back().pairing);
  }
  const auto raw = gram_matrix(pairings, n);
  out.outlines = raw;
  out.equal = true;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const auto s = (fat[i].scalar * fat[j].scalar).evaluate(n);
      if (s.times_sqrt_n) {
        out.equal = false;
        continue;
      }
      out.outlines[i][j] = s.rational * raw[i][j];
      if (out.outlines[i][j] != out.partitions[i][j]) out.equal = false;
    }
  return out;
}

inline bool gram_preservation(const std::vector<SetPartition>& parts, int n) {
  return compare_gram(parts, n).equal;
}

}  // namespace pcat
