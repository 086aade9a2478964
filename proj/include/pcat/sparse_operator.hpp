#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcat/errors.hpp"
#include "pcat/rational.hpp"

namespace pcat {

/// Exact sparse linear map (C^N)^{(x)in} -> (C^N)^{(x)out}.
///
/// A multi-index (i_1, ..., i_m) over {0..N-1} is encoded little-endian,
/// code = sum_t i_t N^(t-1), so the first leg is least significant. An
/// entry is keyed by out_code * N^in + in_code; entries are kept sorted by
/// key, which orders coordinates by (out_code, in_code).
class SparseOperator {
 public:
  using Key = std::uint64_t;
  struct Entry {
    Key key;
    Rational value;
  };

  SparseOperator() : SparseOperator(1, 0, 0) {}
  SparseOperator(int dim, int in_legs, int out_legs)
      : dim_(dim), in_legs_(in_legs), out_legs_(out_legs) {
    if (dim < 1) throw ValidationError("operator dimension must be >= 1");
    if (in_legs < 0 || out_legs < 0) throw ValidationError("negative leg count");
    in_size_ = checked_power(dim, in_legs);
    out_size_ = checked_power(dim, out_legs);
    if (in_size_ > std::numeric_limits<Key>::max() / out_size_)
      throw ValidationError("operator index space does not fit in 64 bits");
  }

  /// Sorts, merges duplicate keys and drops zeros.
  static SparseOperator from_entries(int dim, int in_legs, int out_legs, std::vector<Entry> entries) {
    SparseOperator op(dim, in_legs, out_legs);
    const Key limit = op.in_size_ * op.out_size_;
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.key < b.key; });
    for (auto& e : entries) {
      if (e.key >= limit) throw ValidationError("operator entry index out of range");
      if (!op.entries_.empty() && op.entries_.back().key == e.key) {
        op.entries_.back().value += e.value;
        if (op.entries_.back().value == 0) op.entries_.pop_back();
      } else if (e.value != 0) {
        op.entries_.push_back(std::move(e));
      }
    }
    return op;
  }

  static SparseOperator identity(int dim, int legs) {
    SparseOperator op(dim, legs, legs);
    op.entries_.reserve(op.in_size_);
    for (Key i = 0; i < op.in_size_; ++i) op.entries_.push_back({i * op.in_size_ + i, Rational(1)});
    return op;
  }

  static SparseOperator scalar(const Rational& value, int dim = 1) {
    SparseOperator op(dim, 0, 0);
    if (value != 0) op.entries_.push_back({0, value});
    return op;
  }

  int dim() const noexcept { return dim_; }
  int in_legs() const noexcept { return in_legs_; }
  int out_legs() const noexcept { return out_legs_; }
  int legs() const noexcept { return in_legs_ + out_legs_; }
  Key in_size() const noexcept { return in_size_; }
  Key out_size() const noexcept { return out_size_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  Key key(Key out_code, Key in_code) const noexcept { return out_code * in_size_ + in_code; }
  Key out_code(Key key) const noexcept { return key / in_size_; }
  Key in_code(Key key) const noexcept { return key % in_size_; }

  Key encode(std::span<const int> tuple) const { return encode(tuple, dim_); }
  static Key encode(std::span<const int> tuple, int dim) {
    Key code = 0;
    for (std::size_t t = tuple.size(); t-- > 0;) {
      if (tuple[t] < 0 || tuple[t] >= dim) throw ValidationError("multi-index value out of range");
      code = code * static_cast<Key>(dim) + static_cast<Key>(tuple[t]);
    }
    return code;
  }
  static std::vector<int> decode(Key code, int legs, int dim) {
    std::vector<int> tuple(static_cast<std::size_t>(legs));
    for (int t = 0; t < legs; ++t) {
      tuple[t] = static_cast<int>(code % static_cast<Key>(dim));
      code /= static_cast<Key>(dim);
    }
    return tuple;
  }

  Rational at_key(Key k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, Key x) { return e.key < x; });
    if (it != entries_.end() && it->key == k) return it->value;
    return Rational(0);
  }
  Rational at(std::span<const int> out, std::span<const int> in) const {
    if (static_cast<int>(out.size()) != out_legs_ || static_cast<int>(in.size()) != in_legs_)
      throw SignatureError("multi-index length does not match the operator legs");
    return at_key(key(encode(out), encode(in)));
  }

  bool same_shape(const SparseOperator& o) const noexcept {
    return dim_ == o.dim_ && in_legs_ == o.in_legs_ && out_legs_ == o.out_legs_;
  }

  bool operator==(const SparseOperator& o) const {
    if (!same_shape(o) || entries_.size() != o.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].key != o.entries_[i].key || entries_[i].value != o.entries_[i].value)
        return false;
    return true;
  }

  SparseOperator scaled(const Rational& c) const {
    SparseOperator out(dim_, in_legs_, out_legs_);
    if (c == 0) return out;
    out.entries_.reserve(entries_.size());
    for (const auto& e : entries_) out.entries_.push_back({e.key, e.value * c});
    return out;
  }

  /// this + c * other
  SparseOperator axpy(const Rational& c, const SparseOperator& other) const {
    require_same_shape(other);
    SparseOperator out(dim_, in_legs_, out_legs_);
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->key < b->key)) {
        out.entries_.push_back(*a++);
      } else if (a == entries_.end() || b->key < a->key) {
        out.entries_.push_back({b->key, c * b->value});
        ++b;
      } else {
        Rational v = a->value + c * b->value;
        if (v != 0) out.entries_.push_back({a->key, std::move(v)});
        ++a;
        ++b;
      }
    }
    return out;
  }

  SparseOperator operator+(const SparseOperator& o) const { return axpy(Rational(1), o); }
  SparseOperator operator-(const SparseOperator& o) const { return axpy(Rational(-1), o); }

  /// Content hash over keys and exact values; equal operators hash equally.
  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t x) {
      for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xffU;
        h *= 1099511628211ULL;
      }
    };
    mix(static_cast<std::uint64_t>(dim_));
    mix(static_cast<std::uint64_t>(in_legs_));
    mix(static_cast<std::uint64_t>(out_legs_));
    for (const auto& e : entries_) {
      mix(e.key);
      mix(mpz_get_ui(e.value.get_num_mpz_t()) ^ (static_cast<std::uint64_t>(mpz_sgn(e.value.get_num_mpz_t())) << 63));
      mix(mpz_get_ui(e.value.get_den_mpz_t()));
    }
    return h;
  }

  void require_same_shape(const SparseOperator& o) const {
    if (!same_shape(o)) throw SignatureError("operators have different shapes");
  }

 private:
  static Key checked_power(int base, int exp) {
    Key r = 1;
    for (int i = 0; i < exp; ++i) {
      if (r > std::numeric_limits<Key>::max() / static_cast<Key>(base))
        throw ValidationError("operator index space does not fit in 64 bits");
      r *= static_cast<Key>(base);
    }
    return r;
  }

  int dim_;
  int in_legs_;
  int out_legs_;
  Key in_size_ = 1;
  Key out_size_ = 1;
  std::vector<Entry> entries_;

  friend SparseOperator compose_ops(const SparseOperator&, const SparseOperator&);
  friend SparseOperator tensor_ops(const SparseOperator&, const SparseOperator&);
};

/// s after t.
inline SparseOperator compose_ops(const SparseOperator& s, const SparseOperator& t) {
  if (s.dim() != t.dim()) throw SignatureError("compose_ops: dimensions differ");
  if (s.in_legs() != t.out_legs())
    throw SignatureError("compose_ops: " + std::to_string(s.in_legs()) + " inputs vs " +
                         std::to_string(t.out_legs()) + " outputs");
  using Key = SparseOperator::Key;
  std::vector<SparseOperator::Entry> acc;
  const auto& te = t.entries();
  // t's entries are grouped by their out code, which is s's in code.
  for (const auto& se : s.entries()) {
    const Key out = s.out_code(se.key);
    const Key mid = s.in_code(se.key);
    auto lo = std::lower_bound(te.begin(), te.end(), mid * t.in_size(),
                               [](const SparseOperator::Entry& e, Key x) { return e.key < x; });
    for (auto it = lo; it != te.end() && t.out_code(it->key) == mid; ++it)
      acc.push_back({out * t.in_size() + t.in_code(it->key), se.value * it->value});
  }
  return SparseOperator::from_entries(s.dim(), t.in_legs(), s.out_legs(), std::move(acc));
}

/// s (x) t: s acts on the leading legs of each row.
inline SparseOperator tensor_ops(const SparseOperator& s, const SparseOperator& t) {
  if (s.dim() != t.dim()) throw SignatureError("tensor_ops: dimensions differ");
  SparseOperator out(s.dim(), s.in_legs() + t.in_legs(), s.out_legs() + t.out_legs());
  out.entries_.reserve(s.nnz() * t.nnz());
  for (const auto& a : s.entries()) {
    const auto ao = s.out_code(a.key), ai = s.in_code(a.key);
    for (const auto& b : t.entries()) {
      const auto o = ao + s.out_size() * t.out_code(b.key);
      const auto i = ai + s.in_size() * t.in_code(b.key);
      out.entries_.push_back({out.key(o, i), a.value * b.value});
    }
  }
  std::sort(out.entries_.begin(), out.entries_.end(),
            [](const auto& x, const auto& y) { return x.key < y.key; });
  return out;
}

/// Transpose; entries are real so no conjugation is needed.
inline SparseOperator adjoint_op(const SparseOperator& t) {
  std::vector<SparseOperator::Entry> entries;
  entries.reserve(t.nnz());
  for (const auto& e : t.entries())
    entries.push_back({t.in_code(e.key) * t.out_size() + t.out_code(e.key), e.value});
  return SparseOperator::from_entries(t.dim(), t.out_legs(), t.in_legs(), std::move(entries));
}

/// Trace pairing <S,T> = sum of entrywise products.
inline Rational inner_product(const SparseOperator& s, const SparseOperator& t) {
  s.require_same_shape(t);
  Rational sum(0);
  auto a = s.entries().begin();
  auto b = t.entries().begin();
  while (a != s.entries().end() && b != t.entries().end()) {
    if (a->key < b->key) {
      ++a;
    } else if (b->key < a->key) {
      ++b;
    } else {
      sum += a->value * b->value;
      ++a;
      ++b;
    }
  }
  return sum;
}

// File format: first line "N k l count" (k inputs, l outputs), then one line
// per entry "out_index in_index numerator denominator".

inline void write_sparse(std::ostream& os, const SparseOperator& op) {
  os << op.dim() << ' ' << op.in_legs() << ' ' << op.out_legs() << ' ' << op.nnz() << '\n';
  for (const auto& e : op.entries())
    os << op.out_code(e.key) << ' ' << op.in_code(e.key) << ' ' << e.value.get_num().get_str()
       << ' ' << e.value.get_den().get_str() << '\n';
}

inline SparseOperator read_sparse(std::istream& is) {
  int dim = 0, in = 0, out = 0;
  std::size_t count = 0;
  if (!(is >> dim >> in >> out >> count)) throw ParseError("bad sparse operator header", 0);
  SparseOperator shape(dim, in, out);
  std::vector<SparseOperator::Entry> entries;
  entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SparseOperator::Key o = 0, n = 0;
    std::string num, den;
    if (!(is >> o >> n >> num >> den)) throw ParseError("truncated sparse operator entry", i + 1);
    if (o >= shape.out_size() || n >= shape.in_size())
      throw ParseError("sparse operator index out of range", i + 1);
    Rational v;
    try {
      v = Rational(mpz_class(num), mpz_class(den));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational in sparse operator", i + 1);
    }
    if (v.get_den() == 0) throw ParseError("zero denominator", i + 1);
    v.canonicalize();
    entries.push_back({shape.key(o, n), std::move(v)});
  }
  return SparseOperator::from_entries(dim, in, out, std::move(entries));
}

inline std::string to_text(const SparseOperator& op) {
  std::ostringstream os;
  write_sparse(os, op);
  return os.str();
}

}  // namespace pcat
