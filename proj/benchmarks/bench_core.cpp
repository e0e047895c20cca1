#include "sympl/harness.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace sympl;

Matrix<Rational> random_gram(std::size_t n, harness::Rng& rng) {
  auto B = harness::random_matrix(Rationals{}, n, n, 50, rng);
  for (std::size_t i = 0; i < n; ++i) B(i, i) += Rational(200);
  return multiply(Rationals{}, B.transpose(), B);
}

void BM_LllGram(benchmark::State& state) {
  harness::Rng rng(1);
  auto G = random_gram(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(lll_gram(G));
}
BENCHMARK(BM_LllGram)->DenseRange(2, 10, 4);

void BM_WeakPopov(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  harness::Rng rng(2);
  FunctionField K(3);
  auto M = harness::random_matrix(K, n, n, 6, rng);
  while (K.is_zero(determinant(K, M))) M = harness::random_matrix(K, n, n, 6, rng);
  Matrix<Poly> P(n, n, Poly(3));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) P(i, j) = M(i, j).num();
  for (auto _ : state) benchmark::DoNotOptimize(weak_popov_columns(P));
}
BENCHMARK(BM_WeakPopov)->DenseRange(2, 8, 3);

void BM_HeightSubspace(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  harness::Rng rng(3);
  Rationals K;
  auto A = harness::random_automorphism(K, n, rng);
  auto V = Subspace<Rationals>::from_basis(K, harness::random_matrix(K, n, n / 2, 10, rng));
  for (auto _ : state) benchmark::DoNotOptimize(height_subspace(K, A, V));
}
BENCHMARK(BM_HeightSubspace)->DenseRange(4, 10, 3);

template <class Field>
void symplectic_case(benchmark::State& state, const Field& K, long bound) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  harness::Rng rng(4);
  auto space = harness::generate_instance(K, 2 * k + 2, k, bound, rng);
  auto A = AdelicAutomorphism<Field>::identity(space.N);
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_basis(A, space));
}

void BM_SymplecticBasisQ(benchmark::State& state) { symplectic_case(state, Rationals{}, 10); }
BENCHMARK(BM_SymplecticBasisQ)->DenseRange(1, 4, 1)->Unit(benchmark::kMillisecond);

void BM_SymplecticBasisFpt(benchmark::State& state) { symplectic_case(state, FunctionField(5), 3); }
BENCHMARK(BM_SymplecticBasisFpt)->DenseRange(1, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
