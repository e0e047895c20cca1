#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace sympl {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(const Integer& n);

/// Prime factorization of |n| (n != 0). Trial division followed by Pollard-Brent rho.
std::map<Integer, int> factor_integer(const Integer& n);

/// Exponent of p in n; n != 0, p prime.
int valuation(const Integer& n, const Integer& p);
/// ord_p of a nonzero rational.
int valuation(const Rational& q, const Integer& p);

Integer isqrt(const Integer& n);
/// sqrt(q) when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, long exp);

/// Parses "a", "-a", "a/b" (decimal). Result is canonicalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Natural logarithm approximation, usable for numbers far outside double range.
double log_approx(const Integer& n);
double log_approx(const Rational& q);

}  // namespace sympl
