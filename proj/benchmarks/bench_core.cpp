// Microbenchmarks for the exact-arithmetic kernels and the system-level
// operations.  Sizes are indexed by the diameter d (matrices are (d+1)x(d+1)).

#include <benchmark/benchmark.h>

#include "thp/bases.hpp"
#include "thp/linalg.hpp"
#include "thp/random.hpp"
#include "thp/recognize.hpp"
#include "thp/thcore.hpp"

using namespace thp;

namespace {

FieldSpec field_for(int which) {
  return which == 0 ? FieldSpec::rationals() : FieldSpec::prime(10007);
}

Matrix random_square(std::size_t n, const FieldSpec& f, std::uint64_t seed) {
  DeterministicRng rng(seed);
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.next_scalar(f);
  }
  return m;
}

void BM_MatMul(benchmark::State& state) {
  const FieldSpec f = field_for(static_cast<int>(state.range(1)));
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix a = random_square(n, f, 11);
  Matrix b = random_square(n, f, 12);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_MatInverse(benchmark::State& state) {
  const FieldSpec f = field_for(static_cast<int>(state.range(1)));
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 13;
  Matrix a = random_square(n, f, seed);
  while (rank(a) < n) a = random_square(n, f, ++seed);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}

void BM_CharPoly(benchmark::State& state) {
  const FieldSpec f = field_for(static_cast<int>(state.range(1)));
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix a = random_square(n, f, 17);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}

void BM_BuildCanonicalSystem(benchmark::State& state) {
  const FieldSpec f = field_for(static_cast<int>(state.range(1)));
  ParameterArray p = random_parameter_array(
      static_cast<std::size_t>(state.range(0)), f, 23);
  for (auto _ : state) benchmark::DoNotOptimize(build_canonical_system(p));
}

void BM_RecognizePair(benchmark::State& state) {
  const FieldSpec f = field_for(static_cast<int>(state.range(1)));
  ParameterArray p = random_parameter_array(
      static_cast<std::size_t>(state.range(0)), f, 29);
  THSystem s = build_canonical_system(p);
  MatrixPair pair{s.A, s.A_star};
  for (auto _ : state) benchmark::DoNotOptimize(recognize_th_pair(pair));
}

void BM_TransitionStandardPair(benchmark::State& state) {
  const FieldSpec f = field_for(static_cast<int>(state.range(1)));
  ParameterArray p = random_parameter_array(
      static_cast<std::size_t>(state.range(0)), f, 31);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition_matrix(
        p, BasisKind::PhiStarStandard, BasisKind::PhiStandard));
  }
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int field = 0; field < 2; ++field) {
    for (int n : {2, 4, 8, 16}) b->Args({n, field});
  }
}

void diameters(benchmark::internal::Benchmark* b) {
  for (int field = 0; field < 2; ++field) {
    for (int d : {1, 4, 8}) b->Args({d, field});
  }
}

BENCHMARK(BM_MatMul)->Apply(sizes);
BENCHMARK(BM_MatInverse)->Apply(sizes);
BENCHMARK(BM_CharPoly)->Apply(sizes);
BENCHMARK(BM_BuildCanonicalSystem)->Apply(diameters);
BENCHMARK(BM_RecognizePair)->Apply(diameters);
BENCHMARK(BM_TransitionStandardPair)->Apply(diameters);

}  // namespace

BENCHMARK_MAIN();
