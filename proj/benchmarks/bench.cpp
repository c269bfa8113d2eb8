#include <benchmark/benchmark.h>

#include "lg36/dual_quartic.hpp"
#include "lg36/fast_kernel.hpp"
#include "lg36/group.hpp"

namespace {

using namespace lg36;

const PrimeField& field() {
  static const PrimeField F(10007);
  return F;
}

const SymplecticSpace<Fp>& space() {
  static const SymplecticSpace<Fp> V(field());
  return V;
}

std::array<SigmaPoint<Fp>, 3> triple(Rng& rng) {
  for (;;) {
    std::array<SigmaPoint<Fp>, 3> xi;
    for (auto& p : xi) p = sigma_point(space(), random_lagrangian(space(), rng));
    if (pairwise_transverse(xi[0].lagrangian, xi[1].lagrangian, xi[2].lagrangian)) return xi;
  }
}

void BM_CubicThroughTriple(benchmark::State& state) {
  Rng rng(1);
  const auto xi = triple(rng);
  for (auto _ : state) benchmark::DoNotOptimize(cubic_through_triple(space(), xi[0], xi[1], xi[2]));
}
BENCHMARK(BM_CubicThroughTriple);

void BM_BisecantDecompose(benchmark::State& state) {
  Rng rng(2);
  const auto a = sigma_point(space(), random_lagrangian(space(), rng));
  const auto b = sigma_point(space(), random_lagrangian(space(), rng));
  const auto w = add(a.plucker.coords(), CSpan<Fp>(b.plucker.coords()));
  for (auto _ : state) benchmark::DoNotOptimize(bisecant_decompose(space(), CSpan<Fp>(w)));
}
BENCHMARK(BM_BisecantDecompose);

void BM_StratumGeneric(benchmark::State& state) {
  const auto w = sample_generic(space(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(stratum(space(), w));
}
BENCHMARK(BM_StratumGeneric);

void BM_ResidualCubic(benchmark::State& state) {
  const auto ideal = build_quadric_ideal(space(), 1);
  const auto X = marked_fano_setup(space(), 17, ideal);
  std::size_t m = 0;
  for (auto _ : state) benchmark::DoNotOptimize(residual_cubic(space(), X, X.C0, m++ % 3));
}
BENCHMARK(BM_ResidualCubic)->Unit(benchmark::kMillisecond);

void BM_FpKernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(n + 1));
  for (auto& r : rows)
    for (auto& x : r) x = rng.below(10007);
  for (auto _ : state) benchmark::DoNotOptimize(fp_kernel(rows, n + 1, 10007));
}
BENCHMARK(BM_FpKernel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_TangentHyperplanes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_tangent_hyperplanes(space(), 1, 256, 1));
}
BENCHMARK(BM_TangentHyperplanes)->Unit(benchmark::kMillisecond);

}  // namespace
