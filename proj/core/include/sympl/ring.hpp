#pragma once

#include "sympl/error.hpp"
#include "sympl/integer.hpp"
#include "sympl/poly.hpp"

#include <utility>

namespace sympl {

/// Euclidean-domain primitives for the two coefficient rings Z and F_p[t].
template <class R>
struct RingOps;

template <>
struct RingOps<Integer> {
  static bool is_zero(const Integer& a) { return sgn(a) == 0; }
  /// Euclidean size comparison |a| < |b|.
  static bool smaller(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  /// Floor quotient and nonnegative remainder for b > 0.
  static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
    if (is_zero(b)) throw DomainError("integer division by zero");
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
  }
  static Integer div_exact(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  /// Unit u (and its inverse) with u * a normalized (nonnegative).
  static std::pair<Integer, Integer> normalizer(const Integer& a) {
    return sgn(a) < 0 ? std::pair<Integer, Integer>{-1, -1} : std::pair<Integer, Integer>{1, 1};
  }
  static Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
};

template <>
struct RingOps<Poly> {
  static bool is_zero(const Poly& a) { return a.is_zero(); }
  static bool smaller(const Poly& a, const Poly& b) { return a.degree() < b.degree(); }
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) { return Poly::divmod(a, b); }
  static Poly div_exact(const Poly& a, const Poly& b) { return a / b; }
  static std::pair<Poly, Poly> normalizer(const Poly& a) {
    const std::uint32_t p = a.modulus();
    if (a.is_zero()) return {Poly::constant(p, 1), Poly::constant(p, 1)};
    return {Poly::constant(p, inverse_mod(a.leading(), p)), Poly::constant(p, a.leading())};
  }
  static Poly gcd(const Poly& a, const Poly& b) { return sympl::gcd(a, b); }
};

}  // namespace sympl
