#include <benchmark/benchmark.h>

#include <random>

#include "kuniv/families.hpp"
#include "kuniv/kernels.hpp"
#include "kuniv/probe.hpp"

using namespace kuniv;

namespace {

std::vector<double> points(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> xs(n);
  for (auto& x : xs) x = u(rng);
  return xs;
}

void BM_GramGaussian(benchmark::State& state) {
  const auto k = build_kernel("gaussian-ti", {});
  const auto xs = points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gram(k, xs));
}
BENCHMARK(BM_GramGaussian)->Arg(16)->Arg(64)->Arg(256);

void BM_GramPolynomial(benchmark::State& state) {
  const auto k = build_kernel("polynomial", {});
  const auto xs = points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gram(k, xs));
}
BENCHMARK(BM_GramPolynomial)->Arg(16)->Arg(64)->Arg(256);

void BM_Mmd2Gaussian(benchmark::State& state) {
  const auto k = build_kernel("gaussian-ti", {});
  const auto xs = points(static_cast<std::size_t>(state.range(0)));
  std::vector<Atom> p, q;
  const double m = 1.0 / static_cast<double>(xs.size());
  for (double x : xs) {
    p.push_back({x, m});
    q.push_back({x + 0.5, m});
  }
  const ProbabilityMeasure pp{SignedMeasure(p)}, qq{SignedMeasure(q)};
  for (auto _ : state) benchmark::DoNotOptimize(mmd2(k, pp, qq));
}
BENCHMARK(BM_Mmd2Gaussian)->Arg(16)->Arg(256);

void BM_WitnessMeasure(benchmark::State& state) {
  const auto k = build_kernel("bandpass-ti", {});
  const auto& nu = std::get<TranslationInvariant>(k.body()).spectral;
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_gap_measure(nu, 0.25, 0.75, 1200.0,
                                                 static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_WitnessMeasure)->Arg(4001)->Arg(24001)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
