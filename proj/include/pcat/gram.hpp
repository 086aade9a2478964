#pragma once

#include <vector>

#include "pcat/linalg.hpp"
#include "pcat/partition.hpp"
#include "pcat/realize.hpp"

namespace pcat {

/// Number of blocks of the join of p and q (finest partition coarser than
/// both). The shapes must agree.
inline std::size_t join_block_count(const SetPartition& p, const SetPartition& q) {
  if (p.upper_count() != q.upper_count() || p.lower_count() != q.lower_count())
    throw SignatureError("join: signatures differ");
  const int n = p.size();
  detail::UnionFind uf(n);
  for (const auto* r : {&p, &q})
    for (const auto& b : r->blocks())
      for (std::size_t i = 1; i < b.size(); ++i) uf.unite(b[0] - 1, b[i] - 1);
  std::size_t roots = 0;
  for (int i = 0; i < n; ++i) roots += uf.find(i) == i;
  return roots;
}

inline Rational integer_power(int base, std::size_t exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return Rational(r);
}

/// Gram matrix <T_p, T_q> at dimension N via the join count N^#blocks(p v q).
inline RationalMatrix gram_matrix(const std::vector<SetPartition>& parts, int dim) {
  RationalMatrix g(parts.size(), std::vector<Rational>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i; j < parts.size(); ++j)
      g[i][j] = g[j][i] = integer_power(dim, join_block_count(parts[i], parts[j]));
  return g;
}

/// Same matrix from realized operators; the ground truth for the join formula.
inline RationalMatrix gram_matrix_entrywise(const std::vector<SetPartition>& parts, int dim) {
  std::vector<SparseOperator> ops;
  ops.reserve(parts.size());
  for (const auto& p : parts) ops.push_back(realize(p, dim));
  RationalMatrix g(parts.size(), std::vector<Rational>(parts.size()));
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i; j < ops.size(); ++j) g[i][j] = g[j][i] = inner_product(ops[i], ops[j]);
  return g;
}

}  // namespace pcat
