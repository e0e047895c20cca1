#include "sympl/lattice.hpp"

namespace sympl {

namespace {

template <class R>
void swap_rows(Matrix<R>& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

template <class R>
void swap_cols(Matrix<R>& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

template <class Field>
Echelon<Field> hermite_rows(const Field& K, RingMat<Field> m) {
  using R = typename Field::Ring;
  using Ops = RingOps<R>;
  const std::size_t n = m.rows();
  RingMat<Field> u = Matrix<R>::identity(n, K.ring_zero(), K.ring_one());
  RingMat<Field> uinv = u;

  // row_i -= q row_r, mirrored as col_r += q col_i on U^{-1}
  auto eliminate = [&](std::size_t i, std::size_t r, const R& q) {
    if (Ops::is_zero(q)) return;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!Ops::is_zero(m(r, j))) m(i, j) -= q * m(r, j);
    for (std::size_t j = 0; j < n; ++j)
      if (!Ops::is_zero(u(r, j))) u(i, j) -= q * u(r, j);
    for (std::size_t l = 0; l < n; ++l)
      if (!Ops::is_zero(uinv(l, i))) uinv(l, r) += q * uinv(l, i);
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < n; ++c) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i) {
        if (Ops::is_zero(m(i, c))) continue;
        if (best == n || Ops::smaller(m(i, c), m(best, c))) best = i;
      }
      if (best == n) break;
      if (best != r) {
        swap_rows(m, r, best);
        swap_rows(u, r, best);
        swap_cols(uinv, r, best);
      }
      bool done = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (Ops::is_zero(m(i, c))) continue;
        eliminate(i, r, Ops::divmod(m(i, c), m(r, c)).first);
        if (!Ops::is_zero(m(i, c))) done = false;
      }
      if (done) break;
    }
    if (Ops::is_zero(m(r, c))) continue;
    auto [unit, unit_inv] = Ops::normalizer(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= unit;
    for (std::size_t j = 0; j < n; ++j) u(r, j) *= unit;
    for (std::size_t l = 0; l < n; ++l) uinv(l, r) *= unit_inv;
    for (std::size_t i = 0; i < r; ++i)
      if (!Ops::is_zero(m(i, c))) eliminate(i, r, Ops::divmod(m(i, c), m(r, c)).first);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(u), std::move(uinv), std::move(pivots)};
}

template <class Field>
RingMat<Field> clear_column_denominators(const Field& K, const Mat<Field>& x) {
  using R = typename Field::Ring;
  using Ops = RingOps<R>;
  RingMat<Field> out(x.rows(), x.cols(), K.ring_zero());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    R d = K.ring_one();
    for (std::size_t i = 0; i < x.rows(); ++i) {
      R di = K.denominator(x(i, j));
      d = Ops::div_exact(d * di, Ops::gcd(d, di));
    }
    auto df = K.from_ring(d);
    for (std::size_t i = 0; i < x.rows(); ++i) out(i, j) = K.to_ring(x(i, j) * df);
  }
  return out;
}

template <class Field>
RingMat<Field> to_ring_matrix(const Field& K, const Mat<Field>& x) {
  RingMat<Field> out(x.rows(), x.cols(), K.ring_zero());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = K.to_ring(x(i, j));
  return out;
}

template <class Field>
Mat<Field> to_field_matrix(const Field& K, const RingMat<Field>& x) {
  Mat<Field> out(x.rows(), x.cols(), K.zero());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = K.from_ring(x(i, j));
  return out;
}

template <class Field>
Mat<Field> lattice_from_generators(const Field& K, const Mat<Field>& generators) {
  using R = typename Field::Ring;
  using Ops = RingOps<R>;
  const std::size_t n = generators.rows();
  R d = K.ring_one();
  for (const auto& a : generators.entries()) {
    R da = K.denominator(a);
    d = Ops::div_exact(d * da, Ops::gcd(d, da));
  }
  auto df = K.from_ring(d);
  Mat<Field> scaled = generators.transpose();
  for (auto& a : scaled.entries()) a *= df;
  auto ech = hermite_rows(K, to_ring_matrix(K, scaled));
  if (ech.pivots.size() != n) throw RankError("lattice generators do not have full rank");
  typename Field::Element inv_d = K.one() / df;
  Mat<Field> basis(n, n, K.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(j, i) = K.from_ring(ech.form(i, j)) * inv_d;
  return basis;
}

template <class Field>
Mat<Field> lattice_intersection(const Field& K, const Mat<Field>& b1, const Mat<Field>& b2) {
  // (L1 ∩ L2)^* = L1^* + L2^*, and a lattice with basis B has dual basis B^{-T}.
  auto d1 = inverse(K, b1).transpose();
  auto d2 = inverse(K, b2).transpose();
  auto dual = lattice_from_generators(K, hconcat(d1, d2));
  return inverse(K, dual).transpose();
}

template <class Field>
Mat<Field> lattice_section(const Field& K, const Mat<Field>& lattice, const Mat<Field>& x) {
  auto coords = multiply(K, inverse(K, lattice), x);
  return multiply(K, lattice, saturate(K, coords));
}

#define SYMPL_INSTANTIATE_LATTICE(F)                                                   \
  template Echelon<F> hermite_rows(const F&, RingMat<F>);                              \
  template RingMat<F> clear_column_denominators(const F&, const Mat<F>&);              \
  template RingMat<F> to_ring_matrix(const F&, const Mat<F>&);                         \
  template Mat<F> to_field_matrix(const F&, const RingMat<F>&);                        \
  template Mat<F> lattice_from_generators(const F&, const Mat<F>&);                    \
  template Mat<F> lattice_intersection(const F&, const Mat<F>&, const Mat<F>&);        \
  template Mat<F> lattice_section(const F&, const Mat<F>&, const Mat<F>&);

SYMPL_INSTANTIATE_LATTICE(Rationals)
SYMPL_INSTANTIATE_LATTICE(FunctionField)

}  // namespace sympl
