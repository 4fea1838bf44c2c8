#include <benchmark/benchmark.h>

#include <string>

#include "feynman/graph_io.hpp"
#include "feynman/mzv.hpp"
#include "feynman/period.hpp"
#include "feynman/symanzik.hpp"

namespace {

feynman::FeynmanGraph fixture(const std::string& name) {
  return feynman::load_graph_file(std::string(FEYNMAN_FIXTURES) + "/" + name + ".json");
}

const char* const kGraphs[] = {"k4", "wheel4", "k34"};

void BM_PsiDeterminant(benchmark::State& state) {
  const auto g = fixture(kGraphs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(feynman::psi_determinant(g));
  state.SetLabel(kGraphs[state.range(0)]);
}
BENCHMARK(BM_PsiDeterminant)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_PsiEnumerate(benchmark::State& state) {
  const auto g = fixture(kGraphs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(feynman::psi_enumerate(g));
  state.SetLabel(kGraphs[state.range(0)]);
}
BENCHMARK(BM_PsiEnumerate)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_PeriodK4(benchmark::State& state) {
  const auto g = fixture("k4");
  feynman::IntegrationOptions opt;
  opt.samples = static_cast<std::uint64_t>(state.range(0));
  opt.sampler = state.range(1) ? feynman::Sampler::kTropical : feynman::Sampler::kUniform;
  for (auto _ : state) benchmark::DoNotOptimize(feynman::integrate(g, feynman::IntegrandSpec::period(), opt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PeriodK4)->Args({100000, 0})->Args({100000, 1})->Unit(benchmark::kMillisecond);

// Six-loop graph; slow, so a single short run.
void BM_PeriodK34(benchmark::State& state) {
  const auto g = fixture("k34");
  feynman::IntegrationOptions opt;
  opt.samples = 20000;
  opt.sampler = feynman::Sampler::kTropical;
  for (auto _ : state) benchmark::DoNotOptimize(feynman::integrate(g, feynman::IntegrandSpec::period(), opt));
}
BENCHMARK(BM_PeriodK34)->Iterations(1)->Unit(benchmark::kMillisecond);

void BM_Mzv35(benchmark::State& state) {
  const feynman::MzvIndex index({3, 5});
  const auto digits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(feynman::mzv(index, digits));
}
BENCHMARK(BM_Mzv35)->Arg(15)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_P35(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(feynman::p35(30));
}
BENCHMARK(BM_P35)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
