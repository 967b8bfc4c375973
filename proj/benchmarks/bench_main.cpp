#include <benchmark/benchmark.h>

#include <map>

#include "balpha/builders.hpp"
#include "balpha/campaign.hpp"
#include "balpha/eigen.hpp"
#include "balpha/generators.hpp"
#include "balpha/pendant_reduction.hpp"
#include "balpha/threshold.hpp"

using namespace balpha;

static void BM_JacobiEigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymmetricMatrix m = b_alpha(erdos_renyi(n, 0.4, 11), 0.37);
  for (auto _ : state) benchmark::DoNotOptimize(sym_eig(m));
  state.SetComplexityN(n);
}
BENCHMARK(BM_JacobiEigenvalues)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_JacobiWithVectors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymmetricMatrix m = b_alpha(erdos_renyi(n, 0.4, 11), 0.37);
  EigenOptions o;
  o.vectors = true;
  for (auto _ : state) benchmark::DoNotOptimize(sym_eig(m, o));
}
BENCHMARK(BM_JacobiWithVectors)->RangeMultiplier(2)->Range(8, 64);

static void BM_Beta0Bisection(benchmark::State& state) {
  const Graph g = erdos_renyi(static_cast<int>(state.range(0)), 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(beta0(g));
}
BENCHMARK(BM_Beta0Bisection)->Arg(10)->Arg(20)->Arg(40);

static void BM_ThresholdReport(benchmark::State& state) {
  const Graph g = h_ln(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(threshold_report(g));
}
BENCHMARK(BM_ThresholdReport)->Arg(6)->Arg(12)->Arg(24);

static void BM_PendantReduction(benchmark::State& state) {
  const int base = static_cast<int>(state.range(0));
  std::map<int, int> stars;
  for (int v = 0; v < base; v += 2) stars[v] = 3;
  const Graph g = pendant_attach(erdos_renyi(base, 0.5, 5), stars);
  for (auto _ : state) benchmark::DoNotOptimize(pendant_reduction(g, 0.3));
}
BENCHMARK(BM_PendantReduction)->Arg(4)->Arg(8)->Arg(12);

static void BM_CharPolyExact(benchmark::State& state) {
  const SymmetricMatrix a = build_base(erdos_renyi(static_cast<int>(state.range(0)), 0.5, 7), BaseMatrix::signless_laplacian);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_eval(a, 1.5));
}
BENCHMARK(BM_CharPolyExact)->Arg(6)->Arg(9)->Arg(12);

static void BM_VerifyCampaign(benchmark::State& state) {
  const auto cases = random_cases(8, 0.4, 4, 17);
  CampaignOptions opt;
  opt.skip = {"b_vs_a_alpha"};
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(cases, opt));
}
BENCHMARK(BM_VerifyCampaign)->Unit(benchmark::kMillisecond);
