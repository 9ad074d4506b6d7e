#include <benchmark/benchmark.h>

#include "polylab/polynomial.hpp"
#include "polylab/representation.hpp"
#include "polylab/rigidity.hpp"
#include "polylab/schatten.hpp"
#include "polylab/spectral.hpp"

using namespace polylab;

static void BM_JacobiEigen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix h = random_element(TracialAlgebra::matrices(n), ElementKind::hermitian, 1).block(0);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigen(h));
}
BENCHMARK(BM_JacobiEigen)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_SchattenNorm(benchmark::State& state) {
  const TracialAlgebra a({{8, 1.0}, {4, 0.5}, {1, 3.0}});
  const Element x = random_element(a, ElementKind::general, 2);
  const double p = static_cast<double>(state.range(0)) / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(norm_p(x, p));
}
BENCHMARK(BM_SchattenNorm)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

static void BM_Evaluate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const TracialAlgebra a({{8, 1.0}, {4, 0.5}, {1, 3.0}});
  const HomPolynomial p = HomPolynomial::from_zeta(random_element(a, ElementKind::general, 3), m);
  const Element x = random_element(a, ElementKind::general, 4);
  for (auto _ : state) benchmark::DoNotOptimize(p.evaluate(x));
}
BENCHMARK(BM_Evaluate)->DenseRange(2, 4);

static void BM_Polarize(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const TracialAlgebra a({{4, 1.0}, {2, 0.5}});
  const HomPolynomial p = HomPolynomial::from_zeta(random_element(a, ElementKind::general, 5), m);
  std::vector<Element> xs;
  for (int i = 0; i < m; ++i) xs.push_back(random_element(a, ElementKind::general, 10 + i));
  for (auto _ : state) benchmark::DoNotOptimize(p.polarize(xs));
}
BENCHMARK(BM_Polarize)->DenseRange(2, 4);

static void BM_ReconstructZeta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TracialAlgebra a({{n, 1.0}, {2, 0.5}});
  const HomPolynomial p = HomPolynomial::from_zeta(random_element(a, ElementKind::general, 6), 3);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_zeta(p));
}
BENCHMARK(BM_ReconstructZeta)->Arg(2)->Arg(4)->Arg(8);

static void BM_Counterexample(benchmark::State& state) {
  const TracialAlgebra a({{2, 1.0}, {3, 1.0}});
  const HomPolynomial p = HomPolynomial::from_zeta(random_element(a, ElementKind::general, 7), 3);
  for (auto _ : state) benchmark::DoNotOptimize(full_oa_counterexample(p));
}
BENCHMARK(BM_Counterexample);
BENCHMARK_MAIN();
