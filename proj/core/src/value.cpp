#include "sympl/value.hpp"

#include "sympl/error.hpp"

#include <cmath>

namespace sympl {

RealValue RealValue::sqrt_of(const Rational& q) {
  if (q < 0) throw DomainError("square root of a negative rational");
  return RealValue(q);
}

namespace {

/// Splits a positive integer n as f^2 * m, pulling out prime squares below a small bound.
void split_square(const Integer& n, Integer& f, Integer& m) {
  f = 1;
  m = n;
  if (auto r = exact_sqrt(Rational(m))) {
    f = r->get_num();
    m = 1;
    return;
  }
  for (unsigned long p = 2; p < 2000; ++p) {
    const unsigned long pp = p * p;
    if (m < pp) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), pp)) {
      m /= pp;
      f *= p;
    }
  }
  if (auto r = exact_sqrt(Rational(m))) {
    f *= r->get_num();
    m = 1;
  }
}

}  // namespace

Rational RealValue::rational_part() const {
  if (is_zero()) return 0;
  // square = a/b = (a*b) / b^2
  Integer f, m;
  split_square(square_.get_num() * square_.get_den(), f, m);
  Rational r(f, square_.get_den());
  r.canonicalize();
  return r;
}

Rational RealValue::radicand() const {
  if (is_zero()) return 1;
  Integer f, m;
  split_square(square_.get_num() * square_.get_den(), f, m);
  return Rational(m);
}

RealValue& RealValue::operator/=(const RealValue& o) {
  if (o.is_zero()) throw DomainError("division by a zero value");
  square_ /= o.square_;
  return *this;
}

RealValue RealValue::pow(long exp) const { return RealValue(sympl::pow(square_, exp)); }

RealValue RealValue::inverse() const {
  if (is_zero()) throw DomainError("inverse of a zero value");
  return RealValue(Rational(1 / square_));
}

RealValue RealValue::sqrt() const {
  auto r = exact_sqrt(square_);
  if (!r) throw DomainError("square root leaves the r*sqrt(s) form: " + to_string());
  return RealValue(*r);
}

double RealValue::log() const { return 0.5 * log_approx(square_); }

double RealValue::approx() const { return std::exp(log()); }

std::string RealValue::to_string() const {
  if (is_zero()) return "0";
  Rational r = rational_part(), s = radicand();
  if (s == 1) return sympl::to_string(r);
  if (r == 1) return "sqrt(" + sympl::to_string(s) + ")";
  return sympl::to_string(r) + "*sqrt(" + sympl::to_string(s) + ")";
}

const Rational& ExpValue::log_exponent() const {
  if (zero_) throw DomainError("log-exponent of zero");
  return log_;
}

ExpValue& ExpValue::operator*=(const ExpValue& o) {
  if (zero_ || o.zero_) {
    zero_ = true;
    log_ = 0;
  } else {
    log_ += o.log_;
  }
  return *this;
}

ExpValue& ExpValue::operator/=(const ExpValue& o) {
  if (o.zero_) throw DomainError("division by a zero value");
  if (!zero_) log_ -= o.log_;
  return *this;
}

ExpValue ExpValue::pow(long exp) const {
  if (zero_) {
    if (exp < 0) throw DomainError("negative power of zero");
    return exp == 0 ? one() : zero();
  }
  return ExpValue::exp(log_ * exp);
}

ExpValue ExpValue::inverse() const {
  if (zero_) throw DomainError("inverse of a zero value");
  return ExpValue::exp(-log_);
}

ExpValue ExpValue::sqrt() const {
  if (zero_) return zero();
  return ExpValue::exp(log_ / 2);
}

std::strong_ordering operator<=>(const ExpValue& a, const ExpValue& b) {
  if (a.zero_ || b.zero_) {
    if (a.zero_ && b.zero_) return std::strong_ordering::equal;
    return a.zero_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = cmp(a.log_, b.log_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

double ExpValue::log() const { return zero_ ? -INFINITY : log_.get_d(); }

double ExpValue::approx() const { return std::exp(log()); }

std::string ExpValue::to_string() const {
  if (zero_) return "0";
  return "e^" + sympl::to_string(log_);
}

}  // namespace sympl
