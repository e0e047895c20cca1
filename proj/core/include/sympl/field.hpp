#pragma once

#include "sympl/integer.hpp"
#include "sympl/poly.hpp"
#include "sympl/ratfunc.hpp"
#include "sympl/value.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sympl {

/// Place of Q: the archimedean place or a rational prime.
class RationalPlace {
 public:
  static RationalPlace archimedean() { return RationalPlace(); }
  /// InvalidPlace unless p is prime.
  static RationalPlace prime(const Integer& p);

  bool is_archimedean() const noexcept { return p_ == 0; }
  /// 0 for the archimedean place.
  const Integer& prime() const noexcept { return p_; }

  friend bool operator==(const RationalPlace& a, const RationalPlace& b) { return a.p_ == b.p_; }
  /// The archimedean place sorts first, then primes ascending.
  friend std::strong_ordering operator<=>(const RationalPlace& a, const RationalPlace& b) {
    int c = cmp(a.p_, b.p_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return is_archimedean() ? "inf" : p_.get_str(); }

 private:
  RationalPlace() = default;
  Integer p_{0};
};

/// Place of F_p(t): the infinite place (valuation -deg) or a monic irreducible polynomial.
class FunctionPlace {
 public:
  static FunctionPlace infinite(std::uint32_t p) { return FunctionPlace(p); }
  /// InvalidPlace unless P is irreducible; P is stored monic.
  static FunctionPlace polynomial(const Poly& P);

  bool is_infinite() const noexcept { return !poly_.has_value(); }
  /// Only valid for finite places.
  const Poly& poly() const { return *poly_; }
  std::uint32_t modulus() const noexcept { return p_; }

  friend bool operator==(const FunctionPlace& a, const FunctionPlace& b) = default;
  /// The infinite place sorts first, then polynomials by degree and coefficients.
  friend std::strong_ordering operator<=>(const FunctionPlace& a, const FunctionPlace& b);

  std::string to_string() const { return is_infinite() ? "inf" : poly_->to_string(); }

 private:
  explicit FunctionPlace(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
  std::optional<Poly> poly_;
};

/// Ground field K = Q. Ring = Z.
struct Rationals {
  using Element = Rational;
  using Ring = Integer;
  using Place = RationalPlace;
  using Value = RealValue;

  static constexpr bool kArchimedean = true;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  void check(const Element&) const {}
  /// Cost estimate used for pivot choice (bit size).
  std::size_t size_hint(const Element& a) const;

  Place infinite_place() const { return Place::archimedean(); }
  bool is_infinite(const Place& v) const { return v.is_archimedean(); }
  void check(const Place&) const {}

  /// |a|_v; Value::zero() for a = 0.
  Value abs(const Place& v, const Element& a) const;
  /// Sup norm at primes, Euclidean norm at the archimedean place.
  Value norm(const Place& v, std::span<const Element> x) const;
  /// ord_v(a) at a finite place.
  int valuation(const Place& v, const Element& a) const;
  /// Nonzero c such that c * x is a primitive integral vector (x not all zero).
  Element primitive_scale(std::span<const Element> x) const;
  /// Places where some nonzero entry has |.|_v != 1, plus the archimedean place.
  std::vector<Place> support(std::span<const Element> x) const;

  Ring ring_zero() const { return 0; }
  Ring ring_one() const { return 1; }
  Ring uniformizer(const Place& v) const { return v.prime(); }
  Ring denominator(const Element& a) const { return a.get_den(); }
  Element from_ring(const Ring& r) const { return Element(r); }
  /// DomainError if a is not integral.
  Ring to_ring(const Element& a) const;

  std::string name() const { return "Q"; }
  Element parse(std::string_view text) const { return parse_rational(text); }
  std::string format(const Element& a) const { return sympl::to_string(a); }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// Ground field K = F_p(t). Ring = F_p[t].
struct FunctionField {
  using Element = RatFunc;
  using Ring = Poly;
  using Place = FunctionPlace;
  using Value = ExpValue;

  static constexpr bool kArchimedean = false;

  explicit FunctionField(std::uint32_t characteristic);

  std::uint32_t p;

  Element zero() const { return RatFunc(p); }
  Element one() const { return RatFunc::constant(p, 1); }
  Element from_int(long v) const { return RatFunc::constant(p, v); }
  Element t() const { return RatFunc(Poly::t(p)); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  /// BackendMismatch for an element of another characteristic.
  void check(const Element& a) const;
  std::size_t size_hint(const Element& a) const;

  Place infinite_place() const { return Place::infinite(p); }
  bool is_infinite(const Place& v) const { return v.is_infinite(); }
  void check(const Place& v) const;

  Value abs(const Place& v, const Element& a) const;
  /// Sup norm at every place.
  Value norm(const Place& v, std::span<const Element> x) const;
  int valuation(const Place& v, const Element& a) const;
  Element primitive_scale(std::span<const Element> x) const;
  std::vector<Place> support(std::span<const Element> x) const;

  Ring ring_zero() const { return Poly(p); }
  Ring ring_one() const { return Poly::constant(p, 1); }
  Ring uniformizer(const Place& v) const { return v.poly(); }
  Ring denominator(const Element& a) const { return a.den(); }
  Element from_ring(const Ring& r) const { return RatFunc(r); }
  Ring to_ring(const Element& a) const;

  std::string name() const { return "Fp(t)"; }
  Element parse(std::string_view text) const { return RatFunc::parse(p, text); }
  std::string format(const Element& a) const { return a.to_string(); }

  friend bool operator==(const FunctionField& a, const FunctionField& b) { return a.p == b.p; }
};

/// Runtime descriptor for the supported ground fields.
using GroundField = std::variant<Rationals, FunctionField>;

/// "q" / "Q" or "fp(t)" (with characteristic p).
GroundField make_field(std::string_view kind, std::uint32_t p = 0);
std::string field_name(const GroundField& field);

/// |a|_v with the normalizations |p|_p = 1/p, |t|_inf = e, |P|_P = e^{-deg P}.
template <class Field>
typename Field::Value abs_value(const Field& K, const typename Field::Place& v,
                                const typename Field::Element& a) {
  K.check(v);
  K.check(a);
  return K.abs(v, a);
}

/// Product of |a|_v over the support of a (always 1 for a != 0).
template <class Field>
typename Field::Value product_formula_check(const Field& K, const typename Field::Element& a);

/// Union of the supports of the listed elements; DomainError if all are zero.
template <class Field>
std::vector<typename Field::Place> support_places(const Field& K,
                                                  std::span<const typename Field::Element> elements);

}  // namespace sympl
