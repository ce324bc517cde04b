// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "esf/joint_pgf.hpp"
#include "esf/joint_table.hpp"
#include "esf/lineage.hpp"
#include "esf/seg_sites.hpp"

namespace {

void BM_AncestorsPmf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  esf::LineageLawParams params{n, 2.5, 0.5};
  for (auto _ : state) {
    double total = 0.0;
    for (int k = 0; k <= n; ++k) total += esf::ancestors_pmf(params, k);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_AncestorsPmf)->Arg(10)->Arg(50)->Arg(100);

void BM_SegSitesRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto row = esf::seg_sites_pmf_row(n, 2.5, 80);
    benchmark::DoNotOptimize(row);
  }
}
BENCHMARK(BM_SegSitesRow)->Arg(50)->Arg(1544);

void BM_CondMeanAncestors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double v = esf::cond_mean_ancestors(n, 2.5, 0.5, 9);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_CondMeanAncestors)->Arg(10)->Arg(50);

void BM_JointTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto table = esf::joint_mut_allele_table(n, 2.5);
    benchmark::DoNotOptimize(table.prob(3, 3));
  }
}
BENCHMARK(BM_JointTable)->Arg(10)->Arg(30);

}  // namespace
