#include "sympl/poly.hpp"

#include "sympl/error.hpp"
#include "sympl/integer.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace sympl {

namespace {

std::uint32_t reduce(std::int64_t c, std::uint32_t p) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

}  // namespace

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("inverse of zero in F_p");
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return reduce(t, p);
}

Poly::Poly(std::uint32_t p) : p_(p) {
  if (p < 2) throw DomainError("characteristic must be a prime >= 2");
}

Poly::Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw DomainError("characteristic must be a prime >= 2");
  for (auto& c : c_) c %= p_;
  trim();
}

Poly Poly::constant(std::uint32_t p, std::int64_t c) { return Poly(p, {reduce(c, p)}); }

Poly Poly::monomial(std::uint32_t p, std::uint32_t c, int degree) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return Poly(p, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (p_ != o.p_) throw BackendMismatch("polynomials over different prime fields");
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(inverse_mod(leading(), p_));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = c == 0 ? 0 : p_ - c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    std::uint32_t s = c_[i] + o.c_[i];
    c_[i] = s >= p_ ? s - p_ : s;
  }
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  check_same(o);
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p_;
  }
  c_.assign(acc.begin(), acc.end());
  trim();
  return *this;
}

Poly Poly::scaled(std::uint32_t c) const {
  Poly r = *this;
  c %= p_;
  for (auto& x : r.c_) x = mulmod(x, c, p_);
  r.trim();
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r = *this;
  r.c_.insert(r.c_.begin(), static_cast<std::size_t>(k), 0);
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly q(a.p_), r = a;
  if (a.degree() < b.degree()) return {q, r};
  const std::uint32_t p = a.p_;
  const std::uint32_t inv = inverse_mod(b.leading(), p);
  q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    std::uint32_t f = mulmod(r.leading(), inv, p);
    q.c_[static_cast<std::size_t>(shift)] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      std::size_t idx = j + static_cast<std::size_t>(shift);
      std::uint32_t sub = mulmod(f, b.c_[j], p);
      r.c_[idx] = r.c_[idx] >= sub ? r.c_[idx] - sub : r.c_[idx] + p - sub;
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

bool Poly::divides(const Poly& a) const { return divmod(a, *this).second.is_zero(); }

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.degree(); i >= 0; --i)
    if (auto c = a.coeff(i) <=> b.coeff(i); c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    std::uint32_t c = coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += 't';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly Poly::parse(std::uint32_t p, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial literal");
  Poly out(p);
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in polynomial '" + s + "'");
    }
    first = false;
    std::int64_t coef = 1;
    bool have_coef = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      Integer lit(s.substr(start, i - start), 10);
      coef = Integer(lit % static_cast<unsigned long>(p)).get_si();
      have_coef = true;
    }
    int deg = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) throw ParseError("dangling '*' in polynomial '" + s + "'");
      ++i;
      if (i >= s.size() || s[i] != 't') throw ParseError("expected 't' after '*' in '" + s + "'");
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == es) throw ParseError("missing exponent in '" + s + "'");
        deg = std::stoi(s.substr(es, i - es));
      }
    } else if (!have_coef) {
      throw ParseError("malformed polynomial term in '" + s + "'");
    }
    out += monomial(p, reduce(sign * coef, p), deg);
  }
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow(const Poly& a, unsigned exp) {
  Poly r = Poly::constant(a.modulus(), 1), base = a;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

int valuation(const Poly& a, const Poly& prime) {
  if (a.is_zero()) throw DomainError("valuation of the zero polynomial");
  if (prime.degree() < 1) throw DomainError("valuation at a constant polynomial");
  int v = 0;
  Poly r = a;
  for (;;) {
    auto [q, rem] = Poly::divmod(r, prime);
    if (!rem.is_zero()) return v;
    r = std::move(q);
    ++v;
  }
}

namespace {

constexpr double kTrialLimit = 2.0e7;

void check_scale(const Poly& f) {
  double work = std::pow(static_cast<double>(f.modulus()), f.degree() / 2);
  if (work > kTrialLimit)
    throw ScaleError("trial factorization of degree " + std::to_string(f.degree()) +
                     " over F_" + std::to_string(f.modulus()) + " exceeds desk scale");
}

/// Enumerates monic polynomials of degree d in lexicographic coefficient order.
template <class Visit>
bool for_each_monic(std::uint32_t p, int d, Visit&& visit) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1, 0);
  c.back() = 1;
  for (;;) {
    if (visit(Poly(p, c))) return true;
    int i = 0;
    while (i < d) {
      if (++c[static_cast<std::size_t>(i)] < p) break;
      c[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == d) return false;
  }
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  check_scale(f);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    bool found = for_each_monic(f.modulus(), d, [&](const Poly& g) { return g.divides(f); });
    if (found) return false;
  }
  return true;
}

std::vector<std::pair<Poly, int>> factor_poly(const Poly& f) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f.monic();
  if (rest.degree() < 1) return out;
  check_scale(rest);
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for_each_monic(f.modulus(), d, [&](const Poly& g) {
      int e = 0;
      for (;;) {
        auto [q, r] = Poly::divmod(rest, g);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++e;
      }
      if (e > 0) out.emplace_back(g, e);
      return 2 * d > rest.degree();
    });
  }
  if (rest.degree() >= 1) out.emplace_back(rest, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sympl
