#include <benchmark/benchmark.h>
#include <evpoly/colorings.hpp>

using namespace evpoly;

namespace {

void BM_SumsetGrowthOneSet(benchmark::State& state) {
  auto z = std::make_shared<IntegerLattice>(1);
  const std::vector<std::vector<Element>> sets{{{0}, {2}, {3}}};
  for (auto _ : state) benchmark::DoNotOptimize(sumset_growth_sep(sets, z));
}
BENCHMARK(BM_SumsetGrowthOneSet);

void BM_SumsetGrowthTwoSets(benchmark::State& state) {
  auto z = std::make_shared<IntegerLattice>(1);
  const std::vector<std::vector<Element>> sets{{{0}, {1}}, {{0}, {2}}};
  for (auto _ : state) benchmark::DoNotOptimize(sumset_growth_sep(sets, z));
}
BENCHMARK(BM_SumsetGrowthTwoSets);

void BM_MultiSumset(benchmark::State& state) {
  IntegerLattice z(1);
  const std::vector<ElementSet> sets{{{0}, {1}, {5}}, {{0}, {3}, {7}}};
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(multi_sumset(sets, {n, n}, z));
}
BENCHMARK(BM_MultiSumset)->Arg(4)->Arg(16);

}  // namespace
