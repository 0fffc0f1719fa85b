// Microbenchmarks for the exact kernels: staircase counting, monomial colon
// arithmetic, Buchberger, saturation and the toric elimination.
#include <benchmark/benchmark.h>

#include <random>

#include "symcurve/checks.hpp"
#include "symcurve/rational.hpp"

using namespace symcurve;

namespace {

std::vector<Monomial> randomGens(std::mt19937& rng, int count, int maxExp) {
  std::uniform_int_distribution<int> expDist(0, maxExp);
  std::vector<Monomial> gens;
  gens.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) gens.push_back(Monomial{expDist(rng), expDist(rng)});
  return gens;
}

void BM_minimalize(benchmark::State& state) {
  std::mt19937 rng(1);
  std::vector<std::vector<Monomial>> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(randomGens(rng, 24, 20));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MonomialIdeal(2, inputs[i % inputs.size()]));
    ++i;
  }
}
BENCHMARK(BM_minimalize);

void BM_staircaseLengthI10(benchmark::State& state) {
  MonomialFiltration F{CurveParams(3, 1)};
  const MonomialIdeal& I10 = F.In(10);
  for (auto _ : state) benchmark::DoNotOptimize(quotientLength(I10));
}
BENCHMARK(BM_staircaseLengthI10);

void BM_colonChain(benchmark::State& state) {
  MonomialFiltration F{CurveParams(2, 1)};
  const MonomialIdeal& I8 = F.In(8);
  const Monomial x2sq{2, 0};
  for (auto _ : state) benchmark::DoNotOptimize(colon(I8, x2sq));
}
BENCHMARK(BM_colonChain);

void BM_filtrationLayer(benchmark::State& state) {
  for (auto _ : state) {
    MonomialFiltration F{CurveParams(2, 3)};
    benchmark::DoNotOptimize(F.In(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_filtrationLayer)->Arg(6)->Arg(10);

void BM_buchbergerPrimeSquare(benchmark::State& state) {
  CurveIdeals<Rat> C = buildCurve<Rat>(CurveParams(1, 1));
  PolyList<Rat> gens = power(C.prime, 2).generators();
  for (auto _ : state) benchmark::DoNotOptimize(reducedBasis(gens, C.order));
}
BENCHMARK(BM_buchbergerPrimeSquare);

void BM_symbolicSquareSaturation(benchmark::State& state) {
  CurveIdeals<Rat> C = buildCurve<Rat>(CurveParams(1, 1));
  Poly<Rat> x1 = Poly<Rat>::variable(C.order, 0);
  for (auto _ : state) {
    PolyIdeal<Rat> square = power(C.prime, 2);
    benchmark::DoNotOptimize(saturate(square, x1));
  }
}
BENCHMARK(BM_symbolicSquareSaturation);

void BM_toricKernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(toricIdeal<Rat>(3, 4, 5));
}
BENCHMARK(BM_toricKernel);

void BM_normalForm(benchmark::State& state) {
  CurveIdeals<Rat> C = buildCurve<Rat>(CurveParams(2, 1));
  PolyIdeal<Rat> square = power(C.prime, 2);
  Poly<Rat> probe = mul(C.f2, C.g1);
  square.basis();  // precompute
  for (auto _ : state) benchmark::DoNotOptimize(normalForm(probe, square));
}
BENCHMARK(BM_normalForm);

}  // namespace

BENCHMARK_MAIN();
