#include <benchmark/benchmark.h>

#include "ssp/count.hpp"
#include "ssp/dieudonne.hpp"
#include "ssp/exact.hpp"
#include "ssp/groups.hpp"
#include "ssp/hermitian.hpp"
#include "ssp/witt.hpp"

namespace {

void BM_MassConstant(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ssp::mass_constant(g));
}
BENCHMARK(BM_MassConstant)->Arg(2)->Arg(8)->Arg(12);

void BM_WittMultiply(benchmark::State& state) {
  const auto& ring = ssp::WittRing::get(3, 2, static_cast<unsigned>(state.range(0)));
  const ssp::WittElem u = ssp::hensel_sqrt(ring, -1);
  ssp::WittElem x = ring.from_int(5) + u;
  for (auto _ : state) {
    x = x * u + ring.one();
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_WittMultiply)->Arg(4)->Arg(16)->Arg(64);

void BM_NewtonPolygonSuperspecial(benchmark::State& state) {
  const auto half = static_cast<unsigned>(state.range(0));
  const auto m = ssp::build_superspecial_unitary(3, 4 * half + 2, -1, half, half);
  for (auto _ : state) benchmark::DoNotOptimize(ssp::newton_polygon_at_level(m));
}
BENCHMARK(BM_NewtonPolygonSuperspecial)->Arg(1)->Arg(2)->Arg(3);

void BM_ReducePairing(benchmark::State& state) {
  const auto half = static_cast<unsigned>(state.range(0));
  const auto m = ssp::build_superspecial_unitary(3, 2, -1, half, half);
  for (auto _ : state) benchmark::DoNotOptimize(ssp::reduce_pairing(m));
}
BENCHMARK(BM_ReducePairing)->Arg(1)->Arg(2);

void BM_AutomorphismGroup(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  const auto s = static_cast<unsigned>(state.range(1));
  const auto h = ssp::reduce_pairing(ssp::build_superspecial_unitary(3, 2, -1, r, s));
  for (auto _ : state) benchmark::DoNotOptimize(ssp::automorphism_group_bruteforce(h));
}
BENCHMARK(BM_AutomorphismGroup)->Args({1, 1})->Args({2, 0})->Unit(benchmark::kMillisecond);

void BM_EnumerateGUsplit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ssp::enumerate_gusplit(2, 0, 3));
}
BENCHMARK(BM_EnumerateGUsplit)->Unit(benchmark::kMillisecond);

void BM_LemmaGp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ssp::lemma_gp_check(3, -1, 1, 1));
}
BENCHMARK(BM_LemmaGp)->Unit(benchmark::kMillisecond);

void BM_EigensystemBound(benchmark::State& state) {
  const ssp::SignatureParams params{7, -1, 4, 4, 12};
  for (auto _ : state) benchmark::DoNotOptimize(ssp::eigensystem_bound(params));
}
BENCHMARK(BM_EigensystemBound);

}  // namespace

BENCHMARK_MAIN();
