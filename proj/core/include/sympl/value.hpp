#pragma once

#include "sympl/integer.hpp"

#include <compare>
#include <string>

namespace sympl {

/// Exact nonnegative real of the form r * sqrt(s), r and s rational. Every local norm,
/// height and dilation constant over Q lives in this set. The value is held as its square,
/// so products, quotients, integer powers and comparisons are exact rational operations.
class RealValue {
 public:
  RealValue() : square_(1) {}

  static RealValue zero() { return RealValue(Rational(0)); }
  static RealValue one() { return RealValue(Rational(1)); }
  /// |r|
  static RealValue abs_of(const Rational& r) { return RealValue(Rational(r * r)); }
  /// sqrt(q) for q >= 0.
  static RealValue sqrt_of(const Rational& q);

  const Rational& square() const noexcept { return square_; }
  bool is_zero() const noexcept { return square_ == 0; }

  /// Decomposition value = rational_part * sqrt(radicand) with an integral radicand whose
  /// square factors over small primes have been pulled out.
  Rational rational_part() const;
  Rational radicand() const;

  RealValue& operator*=(const RealValue& o) {
    square_ *= o.square_;
    return *this;
  }
  RealValue& operator/=(const RealValue& o);
  friend RealValue operator*(RealValue a, const RealValue& b) { return a *= b; }
  friend RealValue operator/(RealValue a, const RealValue& b) { return a /= b; }
  RealValue pow(long exp) const;
  RealValue inverse() const;
  /// Exact square root; DomainError when it leaves the r*sqrt(s) form.
  RealValue sqrt() const;

  friend bool operator==(const RealValue& a, const RealValue& b) { return a.square_ == b.square_; }
  friend std::strong_ordering operator<=>(const RealValue& a, const RealValue& b) {
    int c = cmp(a.square_, b.square_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Natural log (display only); -inf for zero.
  double log() const;
  double approx() const;
  std::string to_string() const;

 private:
  explicit RealValue(Rational square) : square_(std::move(square)) {}
  Rational square_;
};

/// Exact value e^m (or 0) over F_p(t), m a rational log-exponent. Local absolute values and
/// heights have integral m; only the sqrt(|det A|) inside c'(A) produces half-integers.
class ExpValue {
 public:
  ExpValue() = default;

  static ExpValue zero() {
    ExpValue v;
    v.zero_ = true;
    return v;
  }
  static ExpValue one() { return ExpValue(); }
  static ExpValue exp(const Rational& m) {
    ExpValue v;
    v.log_ = m;
    return v;
  }

  bool is_zero() const noexcept { return zero_; }
  /// DomainError for zero.
  const Rational& log_exponent() const;

  ExpValue& operator*=(const ExpValue& o);
  ExpValue& operator/=(const ExpValue& o);
  friend ExpValue operator*(ExpValue a, const ExpValue& b) { return a *= b; }
  friend ExpValue operator/(ExpValue a, const ExpValue& b) { return a /= b; }
  ExpValue pow(long exp) const;
  ExpValue inverse() const;
  ExpValue sqrt() const;

  friend bool operator==(const ExpValue& a, const ExpValue& b) {
    return a.zero_ == b.zero_ && (a.zero_ || a.log_ == b.log_);
  }
  friend std::strong_ordering operator<=>(const ExpValue& a, const ExpValue& b);

  double log() const;
  double approx() const;
  std::string to_string() const;

 private:
  Rational log_{0};
  bool zero_ = false;
};

}  // namespace sympl
