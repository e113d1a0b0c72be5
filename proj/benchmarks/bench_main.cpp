#include <benchmark/benchmark.h>

#include <random>

#include "wpo/oracle.hpp"
#include "wpo/verify.hpp"

namespace {

void BM_RankInvariants(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const wpo::FinitePoset p = wpo::randomPoset(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wpo::rankInvariants(p, 9));
}
BENCHMARK(BM_RankInvariants)->Arg(6)->Arg(8);

void BM_SotBruteForce(benchmark::State& state) {
  const wpo::FinitePoset p = wpo::FinitePoset::antichain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wpo::sotBruteForce(p, 9).value);
}
BENCHMARK(BM_SotBruteForce)->Arg(5)->Arg(7)->Arg(9);

void BM_MultisetLeqEmb(benchmark::State& state) {
  const wpo::FinitePoset chain = wpo::FinitePoset::chain(4);
  const auto all = wpo::enumerateMultisets(chain, 4);
  for (auto _ : state) {
    long hits = 0;
    for (const auto& m : all)
      for (const auto& mp : all)
        if (wpo::multisetLeqEmb(chain, m, mp)) ++hits;
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_MultisetLeqEmb);

void BM_NatProd(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const wpo::Ordinal a = wpo::randomOrdinal(rng, 2, true);
  const wpo::Ordinal b = wpo::randomOrdinal(rng, 2, true);
  for (auto _ : state) benchmark::DoNotOptimize(wpo::natProd(a, b));
}
BENCHMARK(BM_NatProd);

void BM_HessProd(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const wpo::Ordinal a = wpo::randomOrdinal(rng, 2, false);
  const wpo::Ordinal b = wpo::randomOrdinal(rng, 2, false);
  for (auto _ : state) benchmark::DoNotOptimize(wpo::hessProd(a, b));
}
BENCHMARK(BM_HessProd);

}  // namespace

BENCHMARK_MAIN();
