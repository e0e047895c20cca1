#include "sympl/ratfunc.hpp"

#include "sympl/error.hpp"

namespace sympl {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.modulus(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.modulus() != den_.modulus()) throw BackendMismatch("numerator and denominator over different F_p");
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  const std::uint32_t p = num_.modulus();
  if (num_.is_zero()) {
    den_ = Poly::constant(p, 1);
    return;
  }
  if (den_.is_one()) return;
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (!den_.is_monic()) {
    std::uint32_t inv = inverse_mod(den_.leading(), p);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

int RatFunc::degree() const {
  if (is_zero()) throw DomainError("degree of the zero rational function");
  return num_.degree() - den_.degree();
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) {
    if (modulus() != o.modulus()) throw BackendMismatch("rational functions over different F_p");
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    if (modulus() != o.modulus()) throw BackendMismatch("rational functions over different F_p");
    *this = RatFunc(modulus());
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // cross-cancel first to keep degrees small
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  num_ = (num_ / g1) * (o.num_ / g2);
  den_ = (den_ / g2) * (o.den_ / g1);
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in F_p(t)");
  RatFunc r(den_, num_, Canonical{});
  r.normalize();
  return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc RatFunc::parse(std::uint32_t p, std::string_view text) {
  std::string s(text);
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == '/' && depth == 0) {
      if (split != std::string::npos) throw ParseError("more than one '/' in '" + s + "'");
      split = i;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
  auto unwrap = [](std::string v) {
    auto b = v.find_first_not_of(" \t");
    auto e = v.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string();
    v = v.substr(b, e - b + 1);
    if (v.size() >= 2 && v.front() == '(' && v.back() == ')') v = v.substr(1, v.size() - 2);
    return v;
  };
  if (split == std::string::npos) return RatFunc(Poly::parse(p, unwrap(s)));
  Poly num = Poly::parse(p, unwrap(s.substr(0, split)));
  Poly den = Poly::parse(p, unwrap(s.substr(split + 1)));
  if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'");
  return RatFunc(std::move(num), std::move(den));
}

}  // namespace sympl
