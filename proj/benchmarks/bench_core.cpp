// Copyright 2026 the amdlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Microbenchmarks for the hot paths: single-auction evaluation, the
// closed-form discount curve, grid search, batch revenue, exact sign
// enumeration, and catalogue verification.

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "amd/auction.hpp"
#include "amd/engine.hpp"
#include "amd/learning.hpp"
#include "amd/lower_bounds.hpp"
#include "amd/mba_curve.hpp"
#include "amd/rng.hpp"
#include "amd/sampling.hpp"
#include "amd/search.hpp"
#include "amd/valuation.hpp"

namespace {

using namespace amd;

ValuationProfile bench_profile(Rng& rng, int n, int m) {
  const std::size_t table = std::size_t{1} << m;
  std::vector<std::vector<double>> rows(
      static_cast<std::size_t>(n), std::vector<double>(table, 0.0));
  for (auto& row : rows) {
    for (std::size_t b = 1; b < table; ++b) row[b] = rng.uniform(0.0, 10.0);
  }
  return make_profile(n, m, std::move(rows));
}

void BM_RunAuction(benchmark::State& state) {
  const int n = 3;
  const int m = static_cast<int>(state.range(0));
  Rng rng(42);
  const ValuationProfile p = bench_profile(rng, n, m);
  std::vector<double> boosts(allocation_count(n, m));
  for (double& x : boosts) x = rng.uniform(0.0, 3.0);
  const AuctionParams params{
      GeneralAma{{1.0, 1.5, 0.75}, BoostMap::dense(std::move(boosts))}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_auction(params, p).revenue);
  }
  state.SetComplexityN(static_cast<std::int64_t>(allocation_count(n, m)));
}
BENCHMARK(BM_RunAuction)->Arg(2)->Arg(4)->Arg(6)->Complexity();

void BM_BuildCurve(benchmark::State& state) {
  const int n = 3;
  const int m = static_cast<int>(state.range(0));
  Rng rng(43);
  const ValuationProfile p = bench_profile(rng, n, m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_mba_curve(p).jump_at);
  }
}
BENCHMARK(BM_BuildCurve)->Arg(2)->Arg(4)->Arg(6);

void BM_CurveEval(benchmark::State& state) {
  Rng rng(44);
  const MbaRevenueCurve curve = build_mba_curve(bench_profile(rng, 3, 4));
  double c = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_mba_curve(curve, c));
    c = c < 30.0 ? c + 0.1 : 0.0;
  }
}
BENCHMARK(BM_CurveEval);

void BM_GridSearchMba(benchmark::State& state) {
  Rng rng(45);
  std::vector<ValuationProfile> sample;
  for (int i = 0; i < 4; ++i) sample.push_back(bench_profile(rng, 3, 3));
  SearchConfig config = default_search_config("mba", sample);
  config.resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_search(config, sample).mean_revenue);
  }
}
BENCHMARK(BM_GridSearchMba)->Arg(8)->Arg(32)->Arg(128);

void BM_RevenueMatrix(benchmark::State& state) {
  Rng rng(46);
  std::vector<AuctionParams> auctions;
  for (int i = 0; i <= 31; ++i) {
    auctions.push_back(AuctionParams{Mba{static_cast<double>(i) / 8.0}});
  }
  std::vector<ValuationProfile> profiles;
  for (int i = 0; i < 64; ++i) profiles.push_back(bench_profile(rng, 2, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(revenue_matrix(auctions, profiles)[0][0]);
  }
}
BENCHMARK(BM_RevenueMatrix);

void BM_ExactSignEnumeration(benchmark::State& state) {
  const int samples = static_cast<int>(state.range(0));
  ProfileDistribution dist;
  dist.kind = IidUniformAdditive{2, 2, 1.0};
  dist.seed = 7;
  const SampleSet sample = sample_profiles(dist, samples);
  std::vector<AuctionParams> grid;
  for (int c = 0; c <= 4; ++c) {
    grid.push_back(AuctionParams{Mba{static_cast<double>(c)}});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_rademacher(sample, grid, 0, 0).mean);
  }
}
BENCHMARK(BM_ExactSignEnumeration)->Arg(8)->Arg(12)->Arg(16);

void BM_VerifyCatalogue(benchmark::State& state) {
  const std::size_t size = lambda_lb_size(3, 3);
  const LowerBoundInstance inst =
      build_lambda_lb(3, 3, 0.5, random_subset(size, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_lower_bound(inst).all_ok);
  }
}
BENCHMARK(BM_VerifyCatalogue);

}  // namespace

BENCHMARK_MAIN();
