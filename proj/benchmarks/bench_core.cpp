#include <benchmark/benchmark.h>

#include "smw/ar_quiver.hpp"
#include "smw/hom_ext.hpp"
#include "smw/orbit_oracle.hpp"
#include "smw/sms.hpp"
#include "smw/tilting.hpp"

using namespace smw;

namespace {

void BM_EnumerateSms(benchmark::State& state) {
  const auto p = make_category(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sms(p));
}
BENCHMARK(BM_EnumerateSms)->Args({3, 2})->Args({4, 2})->Args({3, 3})->Args({5, 2});

void BM_HomTable(benchmark::State& state) {
  const auto p = make_category(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto all = enumerate_indecomposables(p);
  for (auto _ : state) {
    int total = 0;
    for (const auto& x : all) {
      for (const auto& y : all) {
        for (int l = -p.weight - 1; l <= p.weight + 1; ++l) total += hom_dim(x, l, y, p);
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_HomTable)->Args({3, 2})->Args({4, 3});

void BM_ClosureAllSms(benchmark::State& state) {
  const auto p = make_category(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto systems = enumerate_sms(p);
  for (auto _ : state) {
    for (const auto& s : systems) benchmark::DoNotOptimize(extension_closure(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(systems.size()));
}
BENCHMARK(BM_ClosureAllSms)->Args({3, 2})->Args({4, 2});

void BM_SubsetTilts(benchmark::State& state) {
  const auto p = make_category(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto systems = enumerate_sms(p);
  for (auto _ : state) {
    for (const auto& s : systems) {
      for (int mask = 1; mask < (1 << p.rank); ++mask) {
        std::vector<Diagonal> pivot;
        for (int i = 0; i < p.rank; ++i) {
          if (mask >> i & 1) pivot.push_back(s.simples[i]);
        }
        benchmark::DoNotOptimize(left_tilt(s, pivot));
      }
    }
  }
}
BENCHMARK(BM_SubsetTilts)->Args({3, 2})->Args({4, 2});

void BM_TiltingGraph(benchmark::State& state) {
  const auto p = make_category(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(tilting_graph(p));
}
BENCHMARK(BM_TiltingGraph)->Args({2, 3})->Args({3, 2})->Args({4, 2});

void BM_OracleMatching(benchmark::State& state) {
  const auto p = make_category(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const oracle::DiagonalHom hom = [&](Diagonal x, int l, Diagonal y) { return hom_dim(x, l, y, p); };
  const oracle::DiagonalMiddleTerm middle = [&](Diagonal a, Diagonal b) {
    return middle_term(a, b, p);
  };
  for (auto _ : state) {
    const oracle::OrbitCategory cat(p);
    benchmark::DoNotOptimize(oracle::match_to_diagonals(cat, hom, middle));
  }
}
BENCHMARK(BM_OracleMatching)->Args({2, 2})->Args({3, 2});

}  // namespace

BENCHMARK_MAIN();
