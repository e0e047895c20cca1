#include "sympl/field.hpp"

#include "sympl/error.hpp"

#include <algorithm>
#include <set>

namespace sympl {

RationalPlace RationalPlace::prime(const Integer& p) {
  if (!is_prime(p)) throw InvalidPlace("not a prime: " + p.get_str());
  RationalPlace v;
  v.p_ = p;
  return v;
}

FunctionPlace FunctionPlace::polynomial(const Poly& P) {
  if (!is_irreducible(P)) throw InvalidPlace("not an irreducible polynomial: " + P.to_string());
  FunctionPlace v(P.modulus());
  v.poly_ = P.monic();
  return v;
}

std::strong_ordering operator<=>(const FunctionPlace& a, const FunctionPlace& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return *a.poly_ <=> *b.poly_;
}

// ---------------------------------------------------------------- Q

std::size_t Rationals::size_hint(const Element& a) const {
  return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
}

Rationals::Value Rationals::abs(const Place& v, const Element& a) const {
  if (is_zero(a)) return Value::zero();
  if (v.is_archimedean()) return Value::abs_of(a);
  int ord = sympl::valuation(a, v.prime());
  return Value::abs_of(sympl::pow(Rational(v.prime()), -ord));
}

Rationals::Value Rationals::norm(const Place& v, std::span<const Element> x) const {
  if (v.is_archimedean()) {
    Rational sum = 0;
    for (const auto& a : x) sum += a * a;
    return Value::sqrt_of(sum);
  }
  std::optional<int> best;
  for (const auto& a : x) {
    if (is_zero(a)) continue;
    int ord = sympl::valuation(a, v.prime());
    if (!best || ord < *best) best = ord;
  }
  if (!best) return Value::zero();
  return Value::abs_of(sympl::pow(Rational(v.prime()), -*best));
}

int Rationals::valuation(const Place& v, const Element& a) const {
  if (v.is_archimedean()) throw DomainError("valuation at the archimedean place");
  return sympl::valuation(a, v.prime());
}

Rationals::Element Rationals::primitive_scale(std::span<const Element> x) const {
  Integer l = 1;
  for (const auto& a : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  Integer g = 0;
  for (const auto& a : x) {
    Integer y = a.get_num() * (l / a.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
  }
  if (g == 0) throw DomainError("primitive scaling of the zero vector");
  Rational c(l, g);
  c.canonicalize();
  return c;
}

std::vector<RationalPlace> Rationals::support(std::span<const Element> x) const {
  std::set<Integer> primes;
  bool any = false;
  for (const auto& a : x) {
    if (is_zero(a)) continue;
    any = true;
    for (const auto& [p, e] : factor_integer(a.get_num())) primes.insert(p);
    for (const auto& [p, e] : factor_integer(a.get_den())) primes.insert(p);
  }
  if (!any) throw DomainError("support of an all-zero list");
  std::vector<Place> out{Place::archimedean()};
  for (const auto& p : primes) out.push_back(Place::prime(p));
  return out;
}

Rationals::Ring Rationals::to_ring(const Element& a) const {
  if (a.get_den() != 1) throw DomainError("not an integer: " + format(a));
  return a.get_num();
}

// ---------------------------------------------------------------- F_p(t)

FunctionField::FunctionField(std::uint32_t characteristic) : p(characteristic) {
  if (!is_prime(Integer(static_cast<unsigned long>(characteristic))))
    throw DomainError("characteristic " + std::to_string(characteristic) + " is not prime");
}

void FunctionField::check(const Element& a) const {
  if (a.modulus() != p) throw BackendMismatch("element of F_" + std::to_string(a.modulus()) + "(t) used in F_" + std::to_string(p) + "(t)");
}

void FunctionField::check(const Place& v) const {
  if (v.modulus() != p) throw BackendMismatch("place of F_" + std::to_string(v.modulus()) + "(t) used in F_" + std::to_string(p) + "(t)");
}

std::size_t FunctionField::size_hint(const Element& a) const {
  return static_cast<std::size_t>(a.num().degree() + 1 + a.den().degree());
}

FunctionField::Value FunctionField::abs(const Place& v, const Element& a) const {
  if (a.is_zero()) return Value::zero();
  if (v.is_infinite()) return Value::exp(a.degree());
  return Value::exp(-v.poly().degree() * valuation(v, a));
}

FunctionField::Value FunctionField::norm(const Place& v, std::span<const Element> x) const {
  std::optional<int> best;  // largest log |x_i|_v
  for (const auto& a : x) {
    if (a.is_zero()) continue;
    int lg = v.is_infinite() ? a.degree() : -v.poly().degree() * valuation(v, a);
    if (!best || lg > *best) best = lg;
  }
  if (!best) return Value::zero();
  return Value::exp(*best);
}

int FunctionField::valuation(const Place& v, const Element& a) const {
  if (a.is_zero()) throw DomainError("valuation of zero");
  if (v.is_infinite()) return -a.degree();
  return sympl::valuation(a.num(), v.poly()) - sympl::valuation(a.den(), v.poly());
}

FunctionField::Element FunctionField::primitive_scale(std::span<const Element> x) const {
  Poly l = ring_one();
  for (const auto& a : x) {
    check(a);
    l = (l * a.den()) / gcd(l, a.den());
  }
  Poly g = ring_zero();
  for (const auto& a : x) g = gcd(g, a.num() * (l / a.den()));
  if (g.is_zero()) throw DomainError("primitive scaling of the zero vector");
  return RatFunc(l, g);
}

std::vector<FunctionPlace> FunctionField::support(std::span<const Element> x) const {
  std::set<Poly> polys;
  bool any = false;
  for (const auto& a : x) {
    check(a);
    if (a.is_zero()) continue;
    any = true;
    for (const auto& [f, e] : factor_poly(a.num())) polys.insert(f);
    for (const auto& [f, e] : factor_poly(a.den())) polys.insert(f);
  }
  if (!any) throw DomainError("support of an all-zero list");
  std::vector<Place> out{Place::infinite(p)};
  for (const auto& f : polys) out.push_back(Place::polynomial(f));
  return out;
}

FunctionField::Ring FunctionField::to_ring(const Element& a) const {
  if (!a.is_polynomial()) throw DomainError("not a polynomial: " + format(a));
  return a.num();
}

// ---------------------------------------------------------------- generic

GroundField make_field(std::string_view kind, std::uint32_t p) {
  if (kind == "q" || kind == "Q") return Rationals{};
  if (kind == "fp(t)" || kind == "Fp(t)" || kind == "fpt") {
    if (p == 0) throw UsageError("field fp(t) needs a characteristic (--p)");
    return FunctionField(p);
  }
  throw UsageError("unknown field '" + std::string(kind) + "' (expected q or fp(t))");
}

std::string field_name(const GroundField& field) {
  return std::visit(
      [](const auto& K) -> std::string {
        using F = std::decay_t<decltype(K)>;
        if constexpr (std::is_same_v<F, Rationals>) return "q";
        else return "fp(t)";
      },
      field);
}

template <class Field>
typename Field::Value product_formula_check(const Field& K, const typename Field::Element& a) {
  K.check(a);
  if (K.is_zero(a)) throw DomainError("product formula of zero");
  auto value = Field::Value::one();
  for (const auto& v : K.support(std::span<const typename Field::Element>(&a, 1))) value *= K.abs(v, a);
  return value;
}

template <class Field>
std::vector<typename Field::Place> support_places(const Field& K,
                                                  std::span<const typename Field::Element> elements) {
  return K.support(elements);
}

template RealValue product_formula_check(const Rationals&, const Rational&);
template ExpValue product_formula_check(const FunctionField&, const RatFunc&);
template std::vector<RationalPlace> support_places(const Rationals&, std::span<const Rational>);
template std::vector<FunctionPlace> support_places(const FunctionField&, std::span<const RatFunc>);

}  // namespace sympl
