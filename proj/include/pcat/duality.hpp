#pragma once

#include <vector>

#include "pcat/linalg.hpp"
#include "pcat/sparse_operator.hpp"

namespace pcat {

/// Duality vector R in (C^N)^{(x)2} with R^{ij} = F_i^j.
inline SparseOperator duality_from_matrix(const RationalMatrix& f) {
  const int n = static_cast<int>(f.size());
  if (n == 0) throw ValidationError("duality matrix is empty");
  for (const auto& row : f)
    if (static_cast<int>(row.size()) != n) throw ValidationError("duality matrix is not square");
  if (!is_invertible(f)) throw ValidationError("duality matrix is singular");
  SparseOperator shape(n, 0, 2);
  std::vector<SparseOperator::Entry> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (f[i][j] == 0) continue;
      const int idx[2] = {i, j};
      entries.push_back({shape.key(shape.encode(idx), 0), f[i][j]});
    }
  return SparseOperator::from_entries(n, 0, 2, std::move(entries));
}

struct ConjugateCheck {
  bool passes = false;
  /// Loop value R* R.
  Rational multiple;
  /// True when the snake (R* (x) id)(id (x) R) is a scalar multiple of id.
  bool self_conjugate = false;
  Rational snake_scalar;
};

/// Rigidity test for a (0,2) duality R. The snake (R* (x) id)(id (x) R) is an
/// N x N matrix M; a conjugate partner solving both conjugate equations
/// exists iff M is invertible. `multiple` reports the loop value R*R.
inline ConjugateCheck check_conjugate_equations(const SparseOperator& r) {
  if (r.in_legs() != 0 || r.out_legs() != 2) throw SignatureError("duality must be a (0,2) operator");
  const int n = r.dim();
  const auto id = SparseOperator::identity(n, 1);
  const auto rs = adjoint_op(r);
  const auto snake = compose_ops(tensor_ops(rs, id), tensor_ops(id, r));
  RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (const auto& e : snake.entries()) m[snake.out_code(e.key)][snake.in_code(e.key)] = e.value;
  ConjugateCheck out;
  out.passes = is_invertible(m);
  out.multiple = compose_ops(rs, r).at_key(0);
  const Rational diag = m[0][0];
  bool scalar = diag != 0;
  for (int i = 0; i < n && scalar; ++i)
    for (int j = 0; j < n && scalar; ++j) scalar = m[i][j] == (i == j ? diag : Rational(0));
  out.self_conjugate = scalar;
  if (scalar) out.snake_scalar = diag;
  return out;
}

}  // namespace pcat
