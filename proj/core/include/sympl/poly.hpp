#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sympl {

/// Dense univariate polynomial over F_p in the variable t. Coefficients are stored
/// little-endian (index i holds the coefficient of t^i) with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::uint32_t p);
  Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static Poly constant(std::uint32_t p, std::int64_t c);
  static Poly monomial(std::uint32_t p, std::uint32_t c, int degree);
  static Poly t(std::uint32_t p) { return monomial(p, 1, 1); }

  std::uint32_t modulus() const noexcept { return p_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  std::uint32_t coeff(int i) const noexcept {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
  }
  std::uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly scaled(std::uint32_t c) const;
  Poly shifted(int k) const;  ///< multiplication by t^k, k >= 0

  /// Euclidean division; throws DomainError on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  bool divides(const Poly& a) const;

  friend bool operator==(const Poly& a, const Poly& b) = default;
  /// Orders by degree, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  std::string to_string() const;
  static Poly parse(std::uint32_t p, std::string_view text);

 private:
  void trim();
  void check_same(const Poly& o) const;

  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> c_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& a, unsigned exp);

/// ord_P(a) for a != 0 and P of positive degree.
int valuation(const Poly& a, const Poly& prime);

bool is_irreducible(const Poly& f);
/// Monic irreducible factors with multiplicities, by trial division over increasing degree.
/// Throws ScaleError when the search space p^(deg/2) exceeds the desk-scale limit.
std::vector<std::pair<Poly, int>> factor_poly(const Poly& f);

}  // namespace sympl
