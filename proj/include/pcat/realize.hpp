#pragma once

#include <vector>

#include "pcat/partition.hpp"
#include "pcat/sparse_operator.hpp"

namespace pcat {

/// Kronecker-delta operator of a partition: upper points are inputs, lower
/// points outputs, and an entry is 1 iff all legs of each block carry the
/// same index. There are N^(#blocks) nonzeros.
inline SparseOperator realize(const SetPartition& p, int dim) {
  using Key = SparseOperator::Key;
  SparseOperator shape(dim, p.upper_count(), p.lower_count());
  const std::size_t nb = p.block_count();
  std::vector<Key> out_weight(nb, 0), in_weight(nb, 0);
  {
    Key w = 1;
    for (int i = 1; i <= p.upper_count(); ++i, w *= static_cast<Key>(dim))
      in_weight[p.block_of(i)] += w;
    w = 1;
    for (int j = 1; j <= p.lower_count(); ++j, w *= static_cast<Key>(dim))
      out_weight[p.block_of(p.upper_count() + j)] += w;
  }
  std::vector<SparseOperator::Entry> entries;
  std::vector<int> value(nb, 0);
  while (true) {
    Key out = 0, in = 0;
    for (std::size_t b = 0; b < nb; ++b) {
      out += out_weight[b] * static_cast<Key>(value[b]);
      in += in_weight[b] * static_cast<Key>(value[b]);
    }
    entries.push_back({shape.key(out, in), Rational(1)});
    std::size_t b = 0;
    while (b < nb && ++value[b] == dim) value[b++] = 0;
    if (b == nb) break;
  }
  return SparseOperator::from_entries(dim, p.upper_count(), p.lower_count(), std::move(entries));
}

/// Twisted crossing of the anticommutative orthogonal group:
/// [T]^{ij}_{kl} = -delta_il delta_jk + 2 delta_ijkl.
inline SparseOperator realize_twisted_cross(int dim) {
  SparseOperator shape(dim, 2, 2);
  std::vector<SparseOperator::Entry> entries;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const int out[2] = {i, j};
      const int in[2] = {j, i};
      entries.push_back({shape.key(shape.encode(out), shape.encode(in)), Rational(i == j ? 1 : -1)});
    }
  return SparseOperator::from_entries(dim, 2, 2, std::move(entries));
}

/// Twisted duality; coincides with the untwisted pairing.
inline SparseOperator realize_twisted_pair(int dim) { return realize(SetPartition::pair(), dim); }

}  // namespace pcat
