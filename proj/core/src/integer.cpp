#include "sympl/integer.hpp"

#include "sympl/error.hpp"

#include <cmath>
#include <string>

namespace sympl {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = seed % n, c = (seed * 7 + 1) % n, m = 64;
  if (c == 0) c = 1;
  Integer g = 1, r = 1, q = 1, x, ys;
  auto f = [&](const Integer& v) -> Integer {
    Integer out = v * v + c;
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
    return out;
  };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = f(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Integer i = 0; i < m && i < r - k; ++i) {
        y = f(y);
        Integer d = x - y;
        q = q * abs(d);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_into(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned long seed = 2;; ++seed) {
    Integer d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace

std::map<Integer, int> factor_integer(const Integer& n) {
  if (n == 0) throw DomainError("factor_integer: zero has no factorization");
  std::map<Integer, int> out;
  Integer m = abs(n);
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    if (p * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Integer(p)];
      m /= p;
    }
  }
  if (m > 1) factor_into(m, out);
  return out;
}

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw DomainError("valuation of zero");
  Integer rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const Rational& q, const Integer& p) {
  if (q == 0) throw DomainError("valuation of zero");
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Rational r(isqrt(q.get_num()), isqrt(q.get_den()));
  r.canonicalize();
  return r;
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("negative power of zero");
    Rational inv = 1 / base;
    return pow(inv, -exp);
  }
  Rational r(pow(base.get_num(), static_cast<unsigned long>(exp)),
             pow(base.get_den(), static_cast<unsigned long>(exp)));
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& v) {
    auto b = v.find_first_not_of(" \t");
    auto e = v.find_last_not_of(" \t");
    v = (b == std::string::npos) ? std::string() : v.substr(b, e - b + 1);
  };
  strip(s);
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  strip(num);
  strip(den);
  auto valid = [](const std::string& v) {
    if (v.empty()) return false;
    std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') return false;
    return true;
  };
  if (!valid(num) || !valid(den)) throw ParseError("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& n) { return n.get_str(10); }

double log_approx(const Integer& n) {
  if (n == 0) return -INFINITY;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_approx(const Rational& q) { return log_approx(q.get_num()) - log_approx(q.get_den()); }

}  // namespace sympl
