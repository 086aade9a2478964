#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "pcat/errors.hpp"
#include "pcat/sparse_operator.hpp"

namespace pcat {

/// Row-major dense real matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) throw SignatureError("dense multiply: shape mismatch");
  DenseMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double x = a(i, k);
      if (x == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

/// Kronecker product with the little-endian leg convention of
/// SparseOperator: a acts on the less significant legs.
inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t ia = 0; ia < a.rows; ++ia)
    for (std::size_t ja = 0; ja < a.cols; ++ja)
      for (std::size_t ib = 0; ib < b.rows; ++ib)
        for (std::size_t jb = 0; jb < b.cols; ++jb)
          c(ia + a.rows * ib, ja + a.cols * jb) = a(ia, ja) * b(ib, jb);
  return c;
}

inline DenseMatrix tensor_power(const DenseMatrix& a, int legs) {
  DenseMatrix out = DenseMatrix::identity(1);
  for (int i = 0; i < legs; ++i) out = kron(out, a);
  return out;
}

inline DenseMatrix to_dense(const SparseOperator& op) {
  DenseMatrix m(static_cast<std::size_t>(op.out_size()), static_cast<std::size_t>(op.in_size()));
  for (const auto& e : op.entries()) m(op.out_code(e.key), op.in_code(e.key)) = e.value.get_d();
  return m;
}

inline double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw SignatureError("shape mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) d = std::max(d, std::abs(a.data[i] - b.data[i]));
  return d;
}

/// Seeded sample of O(n): Gaussian matrix from std::mt19937_64 through
/// Box-Muller (53-bit uniforms), then modified Gram-Schmidt on the columns.
/// Every step is spelled out so a seed gives the same matrix on every
/// platform.
inline DenseMatrix random_orthogonal(int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("random_orthogonal needs n >= 1");
  std::mt19937_64 gen(seed);
  auto uniform = [&] { return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53; };
  const auto dim = static_cast<std::size_t>(n);
  DenseMatrix g(dim, dim);
  for (std::size_t idx = 0; idx < g.data.size(); idx += 2) {
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double t = 2.0 * std::numbers::pi * uniform();
    g.data[idx] = r * std::cos(t);
    if (idx + 1 < g.data.size()) g.data[idx + 1] = r * std::sin(t);
  }
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      double dot = 0.0;
      for (std::size_t r = 0; r < dim; ++r) dot += g(r, c) * g(r, prev);
      for (std::size_t r = 0; r < dim; ++r) g(r, c) -= dot * g(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += g(r, c) * g(r, c);
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) g(r, c) /= norm;
  }
  return g;
}

/// Largest deviation in each relation family satisfied by B = A (x) A for
/// orthogonal A.
struct PoRelationReport {
  double symmetry = 0.0;     // B^{ik}_{jl} = B^{ki}_{lj}
  double trace = 0.0;        // sum_k B^{ij}_{kk} = delta_ij
  double contraction = 0.0;  // sum_k B^{ai}_{bk} B^{jc}_{kd} = delta_ij B^{ac}_{bd}
  double orthogonality = 0.0;
  bool passes = false;
};

inline PoRelationReport po_relation_check(const DenseMatrix& a, double tol) {
  if (a.rows != a.cols) throw SignatureError("po_relation_check needs a square matrix");
  const std::size_t n = a.rows;
  PoRelationReport rep;
  const DenseMatrix ata = multiply(a, [&] {
    DenseMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = a(j, i);
    return t;
  }());
  rep.orthogonality = max_abs_difference(ata, DenseMatrix::identity(n));

  // B^{ik}_{jl} = A_ij A_kl
  auto b = [&](std::size_t i, std::size_t k, std::size_t j, std::size_t l) { return a(i, j) * a(k, l); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          rep.symmetry = std::max(rep.symmetry, std::abs(b(i, k, j, l) - b(k, i, l, j)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += b(i, j, k, k);
      rep.trace = std::max(rep.trace, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  for (std::size_t aa = 0; aa < n; ++aa)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t bb = 0; bb < n; ++bb)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d) {
              double s = 0.0;
              for (std::size_t k = 0; k < n; ++k) s += b(aa, i, bb, k) * b(j, c, k, d);
              const double rhs = i == j ? b(aa, c, bb, d) : 0.0;
              rep.contraction = std::max(rep.contraction, std::abs(s - rhs));
            }
  rep.passes = rep.orthogonality <= tol && rep.symmetry <= tol && rep.trace <= tol &&
               rep.contraction <= tol;
  return rep;
}

/// max |T A^{(x)in} - A^{(x)out} T| for a realized operator T.
inline double intertwiner_residual(const SparseOperator& t, const DenseMatrix& a) {
  const DenseMatrix dt = to_dense(t);
  return max_abs_difference(multiply(dt, tensor_power(a, t.in_legs())),
                            multiply(tensor_power(a, t.out_legs()), dt));
}

}  // namespace pcat
