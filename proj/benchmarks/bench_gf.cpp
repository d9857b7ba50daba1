#include <benchmark/benchmark.h>
#include <evpoly/orthants.hpp>
#include <evpoly/rational_gf.hpp>

using namespace evpoly;

namespace {

RationalGF sample_gf() {
  RationalGF f = RationalGF::untwisted({2, 0, 1}, {3, 1, 2});
  f = f + RationalGF::untwisted({0, 1, 0}, {1, 2, 1});
  return f + RationalGF(3, {{Scalar(1), {1, 1, 0}, {Scalar(1), Scalar::root_of_unity(3, 1), Scalar(1)}, {1, 2, 1}}});
}

void BM_Coefficient(benchmark::State& state) {
  const auto f = sample_gf();
  const unsigned n = static_cast<unsigned>(state.range(0));
  const std::vector<unsigned> x{n, n, n};
  for (auto _ : state) benchmark::DoNotOptimize(coefficient(f, x));
}
BENCHMARK(BM_Coefficient)->Arg(8)->Arg(64);

void BM_Substitution(benchmark::State& state) {
  const auto f = sample_gf();
  const BlockPartition p{{0, 1, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(p_substitution(f, p));
}
BENCHMARK(BM_Substitution);

void BM_UpperIdealGF(benchmark::State& state) {
  Antichain a;
  for (unsigned i = 0; i < static_cast<unsigned>(state.range(0)); ++i) a.elements.push_back({i, 10 - i});
  for (auto _ : state) benchmark::DoNotOptimize(gf_of_upper_ideal(2, a, 20));
}
BENCHMARK(BM_UpperIdealGF)->Arg(4)->Arg(10);

}  // namespace
