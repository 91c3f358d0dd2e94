#include <benchmark/benchmark.h>

#include "affqha/convolve.hpp"
#include "affqha/fixtures.hpp"
#include "affqha/fourier.hpp"
#include "affqha/special.hpp"
#include "affqha/weyl.hpp"
#include "affqha/wigner.hpp"

using namespace affqha;

namespace {

const std::pair<LogGrid, AffGrid>& grids() {
  static const auto g = make_grids(GridSpec{});
  return g;
}

void BM_LambdaInverse(benchmark::State& state) {
  double r = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_inverse(r));
    r = r < 100.0 ? r * 1.01 : 0.5;
  }
}
BENCHMARK(BM_LambdaInverse);

void BM_Wigner(benchmark::State& state) {
  const auto& [lg, ag] = grids();
  const Signal psi = laguerre_signal(lg, 0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(affine_wigner(psi, psi, ag));
}
BENCHMARK(BM_Wigner)->Unit(benchmark::kMillisecond);

void BM_Quantize(benchmark::State& state) {
  const auto& [lg, ag] = grids();
  const AffFunction f = gaussian_symbol(ag, 0.3, 0.4, 0.2, 0.5, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(quantize(f, lg));
}
BENCHMARK(BM_Quantize)->Unit(benchmark::kMillisecond);

void BM_Dequantize(benchmark::State& state) {
  const auto& [lg, ag] = grids();
  const Signal psi = laguerre_signal(lg, 0, 1.0);
  const OperatorRep A = rank_one(psi, psi);
  for (auto _ : state) benchmark::DoNotOptimize(dequantize(A, ag));
}
BENCHMARK(BM_Dequantize)->Unit(benchmark::kMillisecond);

void BM_OperatorConvolution(benchmark::State& state) {
  const auto& lg = grids().first;
  const AffGrid ag = aligned_aff_grid(lg, 4.0, 129, 3.0, 4);
  const Signal psi = log_gaussian_signal(lg, 0.0, 0.5);
  const Signal phi = laguerre_signal(lg, 0, 2.0);
  const OperatorRep S = rank_one(psi, psi);
  const OperatorRep T = rank_one(phi, phi);
  for (auto _ : state) benchmark::DoNotOptimize(op_op_conv(S, T, ag));
}
BENCHMARK(BM_OperatorConvolution)->Unit(benchmark::kMillisecond);

void BM_FourierWignerForward(benchmark::State& state) {
  const auto& [lg, ag] = grids();
  const Signal psi = log_gaussian_signal(lg, 0.0, 0.5);
  const OperatorRep A = rank_one(psi, psi);
  for (auto _ : state) benchmark::DoNotOptimize(fw_forward(A, ag));
}
BENCHMARK(BM_FourierWignerForward)->Unit(benchmark::kMillisecond);

void BM_PositiveType(benchmark::State& state) {
  const auto& lg = grids().first;
  const Signal psi = log_gaussian_signal(lg, 0.0, 0.5);
  const OperatorRep A = rank_one(psi, psi);
  const auto pts = random_aligned_points(lg, static_cast<int>(state.range(0)), 1, 2.0, 40);
  for (auto _ : state) benchmark::DoNotOptimize(positive_type_test(A, pts));
}
BENCHMARK(BM_PositiveType)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
