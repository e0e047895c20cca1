#pragma once

#include "sympl/harness.hpp"
#include "sympl/symplectic.hpp"

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace sympl::test {

inline const Rationals QQ{};
inline FunctionField fpt(std::uint32_t p) { return FunctionField(p); }

template <class Field>
Vec<Field> vec(const Field& K, std::initializer_list<const char*> entries) {
  Vec<Field> v;
  for (const char* e : entries) v.push_back(K.parse(e));
  return v;
}

/// Row-major entries.
template <class Field>
Mat<Field> mat(const Field& K, std::size_t rows, std::size_t cols, std::initializer_list<const char*> entries) {
  std::vector<typename Field::Element> data;
  for (const char* e : entries) data.push_back(K.parse(e));
  return Mat<Field>(rows, cols, std::move(data));
}

/// Matrix whose columns are the given vectors.
template <class Field>
Mat<Field> cols(const Field& K, const std::vector<Vec<Field>>& columns) {
  return Mat<Field>::from_columns(columns.front().size(), columns, K.zero());
}

template <class Field>
Mat<Field> standard_form(const Field& K, std::size_t k) {
  Mat<Field> J(2 * k, 2 * k, K.zero());
  for (std::size_t i = 0; i < k; ++i) {
    J(2 * i, 2 * i + 1) = K.one();
    J(2 * i + 1, 2 * i) = -K.one();
  }
  return J;
}

/// Canonicalized num/den (the mpq_class two-argument constructor does not reduce).
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
inline RealValue sqrt_q(long n) { return RealValue::sqrt_of(Rational(n)); }
inline RealValue rat(long num, long den = 1) { return RealValue::abs_of(frac(num, den)); }
inline ExpValue ex(long m) { return ExpValue::exp(Rational(m)); }

// Independent oracles: cofactor expansion and heights from the primitive integral representative.

template <class Field>
typename Field::Element laplace_det(const Field& K, const Mat<Field>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return K.one();
  if (n == 1) return m(0, 0);
  typename Field::Element total = K.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (K.is_zero(m(0, j))) continue;
    Mat<Field> minor(n - 1, n - 1, K.zero());
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    typename Field::Element term = m(0, j) * laplace_det(K, minor);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

template <class Field>
Vec<Field> laplace_minors(const Field& K, const Mat<Field>& X) {
  const std::size_t N = X.rows(), L = X.cols();
  Vec<Field> out;
  std::vector<std::size_t> idx(L);
  for (std::size_t i = 0; i < L; ++i) idx[i] = i;
  while (true) {
    Mat<Field> sub(L, L, K.zero());
    for (std::size_t r = 0; r < L; ++r)
      for (std::size_t c = 0; c < L; ++c) sub(r, c) = X(idx[r], c);
    out.push_back(laplace_det(K, sub));
    std::size_t i = L;
    while (i > 0 && idx[i - 1] == N - L + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < L; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// H(x) over Q: Euclidean norm of the primitive integral multiple.
inline RealValue oracle_height(const Vec<Rationals>& x) {
  Integer l = 1, g = 0;
  for (const auto& a : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den().get_mpz_t());
  std::vector<Integer> z;
  for (const auto& a : x) {
    Integer v = a.get_num() * (l / a.get_den());
    z.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational s = 0;
  for (const auto& v : z) s += Rational(Integer(v / g) * Integer(v / g));
  return RealValue::sqrt_of(s);
}

/// H(x) over F_p(t): e^(max degree of the primitive polynomial multiple).
inline ExpValue oracle_height(const FunctionField& K, const Vec<FunctionField>& x) {
  Poly l = Poly::constant(K.p, 1), g(K.p);
  for (const auto& a : x) l = l / gcd(l, a.den()) * a.den();
  std::vector<Poly> z;
  for (const auto& a : x) {
    Poly v = a.num() * (l / a.den());
    z.push_back(v);
    g = gcd(g, v);
  }
  int d = -1;
  for (const auto& v : z)
    if (!v.is_zero()) d = std::max(d, (v / g).degree());
  return ex(d);
}

}  // namespace sympl::test
