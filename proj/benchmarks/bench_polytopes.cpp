#include <benchmark/benchmark.h>
#include <evpoly/polytopes.hpp>

using namespace evpoly;

namespace {

RationalPolytope triangle() {
  return RationalPolytope({{make_rational(0), make_rational(0)},
                           {make_rational(3, 2), make_rational(0)},
                           {make_rational(0), make_rational(5, 3)}});
}

void BM_LatticePoints(benchmark::State& state) {
  const auto p = triangle();
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points(p, n));
}
BENCHMARK(BM_LatticePoints)->Arg(4)->Arg(16)->Arg(64);

void BM_EhrhartFit(benchmark::State& state) {
  const auto p = triangle();
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart_fit(p));
}
BENCHMARK(BM_EhrhartFit);

}  // namespace
