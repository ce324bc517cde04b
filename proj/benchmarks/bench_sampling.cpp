// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "esf/coalescent.hpp"
#include "esf/growth_chain.hpp"
#include "esf/importance.hpp"
#include "esf/rng.hpp"

namespace {

const esf::ObservedSample& hammer_sample() {
  static esf::ObservedSample sample{{{21, 23, 853, 188, 75, 1, 68, 31, 67, 217}}, 9};
  return sample;
}

void BM_CoalescentTimes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  esf::Xoshiro256pp rng(7);
  for (auto _ : state) {
    auto times = esf::sample_coalescent_times(n, esf::TimeModel::constant(), rng);
    benchmark::DoNotOptimize(times.total_length);
  }
}
BENCHMARK(BM_CoalescentTimes)->Arg(100)->Arg(1544);

void BM_GrowConfig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  esf::Xoshiro256pp rng(7);
  for (auto _ : state) {
    auto cfg = esf::grow_config(n, 2.5, rng);
    benchmark::DoNotOptimize(cfg.s);
  }
}
BENCHMARK(BM_GrowConfig)->Arg(6)->Arg(334);

void BM_ImportancePathHammer(benchmark::State& state) {
  esf::Xoshiro256pp rng(7);
  for (auto _ : state) {
    auto path = esf::simulate_path(hammer_sample(), 2.5, esf::TimeModel::constant(), rng);
    benchmark::DoNotOptimize(path.log_weight);
  }
}
BENCHMARK(BM_ImportancePathHammer);

void BM_ImportanceRunHammer(benchmark::State& state) {
  for (auto _ : state) {
    auto res = esf::estimate_likelihood(hammer_sample(), 2.5, esf::TimeModel::constant(),
                                        static_cast<std::uint64_t>(state.range(0)), 93849, 0);
    benchmark::DoNotOptimize(res.log_likelihood_unordered);
  }
}
BENCHMARK(BM_ImportanceRunHammer)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
