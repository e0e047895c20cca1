#pragma once

#include "sympl/poly.hpp"

#include <string>
#include <string_view>

namespace sympl {

/// Element of F_p(t): numerator/denominator in lowest terms, denominator monic.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(std::uint32_t p) : num_(p), den_(Poly::constant(p, 1)) {}
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc constant(std::uint32_t p, std::int64_t c) { return RatFunc(Poly::constant(p, c)); }

  std::uint32_t modulus() const noexcept { return num_.modulus(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  /// deg(num) - deg(den); the zero element has no degree (DomainError).
  int degree() const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc inverse() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  std::string to_string() const;
  /// Accepts "poly" or "(poly)/(poly)" (parentheses optional around single terms).
  static RatFunc parse(std::uint32_t p, std::string_view text);

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace sympl
