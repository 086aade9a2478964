#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "pcat/sparse_operator.hpp"

namespace pcat {

/// (in legs, out legs) of a hom-space.
struct Signature {
  int in = 0;
  int out = 0;

  int legs() const noexcept { return in + out; }
  auto operator<=>(const Signature&) const = default;
  std::string to_string() const { return std::to_string(in) + "," + std::to_string(out); }
};

inline Signature signature_of(const SparseOperator& op) { return {op.in_legs(), op.out_legs()}; }

/// Reduced row-echelon basis of a space of operators with a fixed shape.
///
/// The pivot of an element is its smallest coordinate key, normalized to 1,
/// and no pivot appears in any other element. The basis depends only on the
/// order of insertions.
class HomSpaceBasis {
 public:
  HomSpaceBasis() = default;
  HomSpaceBasis(int dim, int in_legs, int out_legs) : dim_(dim), sig_{in_legs, out_legs} {}

  int dim() const noexcept { return dim_; }
  Signature signature() const noexcept { return sig_; }
  std::size_t dimension() const noexcept { return elements_.size(); }
  const std::vector<SparseOperator>& elements() const noexcept { return elements_; }

  std::vector<SparseOperator::Key> pivots() const {
    std::vector<SparseOperator::Key> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_) out.push_back(e.entries().front().key);
    return out;
  }

  SparseOperator reduce(const SparseOperator& v) const {
    check_shape(v);
    SparseOperator r = v;
    for (const auto& e : elements_) {
      if (r.is_zero()) break;
      const Rational c = r.at_key(e.entries().front().key);
      if (c != 0) r = r.axpy(-c, e);
    }
    return r;
  }

  bool contains(const SparseOperator& v) const { return reduce(v).is_zero(); }

  /// Adds v to the span; returns true when the dimension grows.
  bool insert(const SparseOperator& v) {
    SparseOperator r = reduce(v);
    if (r.is_zero()) return false;
    const Rational lead = r.entries().front().value;
    if (lead != 1) r = r.scaled(1 / lead);
    const auto pivot = r.entries().front().key;
    for (auto& e : elements_) {
      const Rational c = e.at_key(pivot);
      if (c != 0) e = e.axpy(-c, r);
    }
    auto pos = std::lower_bound(elements_.begin(), elements_.end(), pivot,
                                [](const SparseOperator& e, SparseOperator::Key k) {
                                  return e.entries().front().key < k;
                                });
    elements_.insert(pos, std::move(r));
    return true;
  }

  /// Rebuilds from stored reduced elements without re-running elimination.
  static HomSpaceBasis from_reduced(int dim, Signature sig, std::vector<SparseOperator> elements) {
    HomSpaceBasis b(dim, sig.in, sig.out);
    for (const auto& e : elements) {
      b.check_shape(e);
      if (e.is_zero() || e.entries().front().value != 1)
        throw ValidationError("stored basis element is not normalized");
    }
    std::sort(elements.begin(), elements.end(), [](const auto& x, const auto& y) {
      return x.entries().front().key < y.entries().front().key;
    });
    b.elements_ = std::move(elements);
    auto piv = b.pivots();
    for (std::size_t i = 0; i < b.elements_.size(); ++i)
      for (std::size_t j = 0; j < b.elements_.size(); ++j)
        if (i != j && b.elements_[i].at_key(piv[j]) != 0)
          throw ValidationError("stored basis is not reduced");
    return b;
  }

 private:
  void check_shape(const SparseOperator& v) const {
    if (v.dim() != dim_ || v.in_legs() != sig_.in || v.out_legs() != sig_.out)
      throw SignatureError("operator shape (" + std::to_string(v.in_legs()) + "," +
                           std::to_string(v.out_legs()) + ") does not match basis (" +
                           sig_.to_string() + ")");
  }

  int dim_ = 1;
  Signature sig_;
  std::vector<SparseOperator> elements_;
};

inline HomSpaceBasis echelon_basis(const std::vector<SparseOperator>& ops) {
  if (ops.empty()) return {};
  HomSpaceBasis b(ops.front().dim(), ops.front().in_legs(), ops.front().out_legs());
  for (const auto& op : ops) b.insert(op);
  return b;
}

/// Rank of a family of operators sharing one shape.
inline std::size_t span_dimension(const std::vector<SparseOperator>& ops) {
  return echelon_basis(ops).dimension();
}

inline bool membership(const SparseOperator& t, const HomSpaceBasis& basis) {
  return basis.contains(t);
}

}  // namespace pcat
