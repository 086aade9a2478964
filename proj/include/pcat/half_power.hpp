#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pcat/rational.hpp"

namespace pcat {

/// Value of a HalfPowerScalar at a concrete n: rational, optionally times
/// sqrt(n) when n is not a perfect square.
struct EvaluatedScalar {
  Rational rational;
  bool times_sqrt_n = false;

  bool operator==(const EvaluatedScalar& o) const {
    if (rational == 0 && o.rational == 0) return true;
    return rational == o.rational && times_sqrt_n == o.times_sqrt_n;
  }
};

/// coefficient * n^(half_exponent / 2) for a formal dimension parameter n.
class HalfPowerScalar {
 public:
  HalfPowerScalar() = default;
  HalfPowerScalar(Rational coefficient, int half_exponent = 0)
      : coefficient_(std::move(coefficient)), half_exponent_(half_exponent) {
    normalize();
  }

  static HalfPowerScalar one() { return HalfPowerScalar(Rational(1), 0); }
  /// n^(e/2)
  static HalfPowerScalar power(int half_exponent) { return HalfPowerScalar(Rational(1), half_exponent); }

  const Rational& coefficient() const noexcept { return coefficient_; }
  int half_exponent() const noexcept { return half_exponent_; }
  bool is_zero() const { return coefficient_ == 0; }

  HalfPowerScalar operator*(const HalfPowerScalar& o) const {
    return HalfPowerScalar(coefficient_ * o.coefficient_, half_exponent_ + o.half_exponent_);
  }
  HalfPowerScalar& operator*=(const HalfPowerScalar& o) { return *this = *this * o; }

  /// Sum of two monomials; only defined when the powers agree or one side is
  /// zero.
  HalfPowerScalar operator+(const HalfPowerScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (half_exponent_ != o.half_exponent_)
      throw std::domain_error("cannot add n^(" + std::to_string(half_exponent_) + "/2) and n^(" +
                              std::to_string(o.half_exponent_) + "/2) as a single monomial");
    return HalfPowerScalar(coefficient_ + o.coefficient_, half_exponent_);
  }
  HalfPowerScalar operator-() const { return HalfPowerScalar(-coefficient_, half_exponent_); }

  bool operator==(const HalfPowerScalar& o) const {
    return coefficient_ == o.coefficient_ && half_exponent_ == o.half_exponent_;
  }

  EvaluatedScalar evaluate(std::int64_t n) const {
    if (n < 1) throw std::domain_error("evaluate needs n >= 1");
    if (is_zero()) return {Rational(0), false};
    // e = 2m + r with r in {0, 1}
    int m = half_exponent_ >= 0 ? half_exponent_ / 2 : -((-half_exponent_ + 1) / 2);
    const bool odd = (half_exponent_ - 2 * m) == 1;
    Rational value = coefficient_ * int_power(n, m);
    if (!odd) return {value, false};
    const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    for (std::int64_t r = root > 1 ? root - 1 : 0; r <= root + 1; ++r)
      if (r * r == n) return {value * r, false};
    return {value, true};
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s = coefficient_.get_str();
    if (half_exponent_ == 0) return s;
    s += "*n^";
    if (half_exponent_ % 2 == 0) return s + "(" + std::to_string(half_exponent_ / 2) + ")";
    return s + "(" + std::to_string(half_exponent_) + "/2)";
  }

 private:
  static Rational int_power(std::int64_t n, int m) {
    mpz_class base(static_cast<long>(n)), r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m < 0 ? -m : m));
    if (m >= 0) return Rational(r);
    Rational q(mpz_class(1), r);
    q.canonicalize();
    return q;
  }
  void normalize() {
    coefficient_.canonicalize();
    if (coefficient_ == 0) half_exponent_ = 0;
  }

  Rational coefficient_{0};
  int half_exponent_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const HalfPowerScalar& s) { return os << s.to_string(); }

}  // namespace pcat
