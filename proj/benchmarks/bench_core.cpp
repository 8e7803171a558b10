#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "groupoidal/groupoid.hpp"
#include "groupoidal/isg.hpp"
#include "groupoidal/odometer.hpp"
#include "groupoidal/star_algebra.hpp"
#include "groupoidal/toeplitz.hpp"

using namespace groupoidal;

namespace {

// n-cycle with one edge removed
PartialBijection broken_cycle(std::size_t n) {
  std::vector<Point> images(n, kNoPoint);
  for (Point i = 0; i + 1 < n; ++i) images[i] = i + 1;
  return PartialBijection::from_images(images);
}

void BM_Closure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<PartialBijection> gens{broken_cycle(n)};
  for (auto _ : state) benchmark::DoNotOptimize(generate_closure(n, gens).size());
}
BENCHMARK(BM_Closure)->DenseRange(4, 12, 4);

void BM_ClassifyFTilde(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<PartialBijection> gens{broken_cycle(n)};
  InverseSemigroup s = generate_closure(n, gens);
  for (auto _ : state) benchmark::DoNotOptimize(classify_f_tilde(s).is_f_tilde());
  state.counters["elements"] = static_cast<double>(s.size());
}
BENCHMARK(BM_ClassifyFTilde)->DenseRange(4, 12, 4);

void BM_Convolution(benchmark::State& state) {
  OdometerSystem o = build_odometer({{2, 2}}, static_cast<std::size_t>(state.range(0)));
  const Groupoid& g = o.bundle.groupoid;
  AlgebraElement f, h;
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    f[a] = QComplex(Rational(static_cast<long>(a % 5) - 2), Rational(1, static_cast<long>(a % 3) + 1));
    h[a] = QComplex(Rational(1, static_cast<long>(a % 4) + 1), Rational(static_cast<long>(a % 2)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(convolve(g, f, h).size());
  state.counters["arrows"] = static_cast<double>(g.arrow_count());
}
BENCHMARK(BM_Convolution)->DenseRange(1, 3, 1);

void BM_CharacterComparison(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  ConePair cp = ConePair::naturals(2);
  WindowBox box{2, -2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(character_comparison(cp, L, box).unmatched);
}
BENCHMARK(BM_CharacterComparison)->DenseRange(1, 2, 1);

}  // namespace
BENCHMARK_MAIN();
