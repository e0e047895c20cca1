#pragma once

#include "sympl/serialize.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace sympl::harness {

using io::Json;

/// std::mt19937_64 with rejection-sampled uniform integers, so corpora are reproducible from a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return static_cast<std::uint64_t>(uniform(0, den - 1)) < num; }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(xs.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  GroundField field = Rationals{};
  std::size_t N = 2;
  std::size_t k = 1;
  long bound = 10;  ///< max |numerator|, |denominator| over Q; max degree over F_p(t)
  std::uint64_t seed = 1;
};

/// Uniform scalar within the bound: a/b with |a| <= bound, 1 <= b <= bound over Q, a polynomial
/// of degree <= bound over F_p(t).
template <class Field>
typename Field::Element random_element(const Field& K, long bound, Rng& rng);
template <class Field>
typename Field::Element random_nonzero(const Field& K, long bound, Rng& rng);
template <class Field>
Mat<Field> random_matrix(const Field& K, std::size_t rows, std::size_t cols, long bound, Rng& rng);
template <class Field>
Mat<Field> random_alternating(const Field& K, std::size_t n, long bound, Rng& rng);

/// Random regular instance; GenerationError after 1000 consecutive rejected samples.
template <class Field>
SymplecticSpace<Field> generate_instance(const Field& K, std::size_t N, std::size_t k, long bound, Rng& rng);
/// DomainError unless 1 <= k, 2k <= N, bound >= 1.
io::AnySpace generate_instance(const GenParams& params);

/// Archimedean diagonal component and one p-adic diagonal component (p in {2, 3}), entries in
/// {1/3, 1/2, 2, 3}.
AdelicAutomorphism<Rationals> random_diagonal_twist(std::size_t N, Rng& rng);
/// Random invertible components at the infinite place and one finite place.
template <class Field>
AdelicAutomorphism<Field> random_automorphism(const Field& K, std::size_t N, Rng& rng);

struct SuiteConfig {
  std::string suite;
  std::size_t count = 0;  ///< 0 uses the suite default
  std::uint64_t seed = 20240601;
  unsigned threads = 0;   ///< 0: SYMPL_THREADS or hardware concurrency
};

struct SuiteReport {
  std::string suite;
  std::size_t total = 0;
  std::size_t passed = 0;
  double seconds = 0;
  /// max over instances of log(lhs) - log(rhs); display only
  double worstLogRatio = -std::numeric_limits<double>::infinity();
  std::vector<Json> records;  ///< one per check, sorted by index
  std::vector<std::string> failures;

  std::size_t failed() const noexcept { return total - passed; }
  bool ok() const noexcept { return total > 0 && passed == total; }
  Json summary() const;
};

const std::vector<std::string>& suite_names();
/// UsageError for an unknown suite.
SuiteReport run_suite(const SuiteConfig& config);
/// symplectic, theorem-bound, corollaries and siegel from a single pass over the shared corpus.
std::vector<SuiteReport> run_corpus_suites(const SuiteConfig& config);

/// Requested thread count capped by SYMPL_THREADS; at least 1.
unsigned thread_count(unsigned requested);

}  // namespace sympl::harness
