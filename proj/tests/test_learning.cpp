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

#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"

#include "amd/errors.hpp"
#include "amd/learning.hpp"
#include "amd/lower_bounds.hpp"
#include "amd/parallel.hpp"
#include "amd/sampling.hpp"
#include "amd/valuation.hpp"

namespace {

using namespace amd;

const ValuationProfile kFlat =
    make_profile(2, 2, {{0, 3, 3, 3}, {0, 3, 3, 3}});
const ValuationProfile kLifted =
    make_profile(2, 2, {{0, 3, 3, 4}, {0, 3, 3, 4}});

std::vector<AuctionParams> mba_grid(std::initializer_list<double> cs) {
  std::vector<AuctionParams> grid;
  for (double c : cs) grid.push_back(AuctionParams{Mba{c}});
  return grid;
}

TEST_CASE("a single-auction grid has zero sign-correlation, exactly") {
  SampleSet sample;
  sample.profiles = {kFlat, kLifted, kFlat};
  const RademacherEstimate est =
      empirical_rademacher(sample, mba_grid({2.0}), 0, 1);
  // Sign vectors pair off with their negations and a one-function max is
  // linear, so the enumeration cancels to exactly zero.
  CHECK(est.mean == 0.0);
  CHECK(est.std_error == 0.0);
  CHECK(est.exact);
  CHECK(est.draws == 8);
}

TEST_CASE("exact enumeration on frozen two-sample instances") {
  SampleSet one;
  one.profiles = {kFlat};
  const RademacherEstimate single =
      empirical_rademacher(one, mba_grid({0.0, 3.0}), 0, 1);
  // Revenues 0 and 6: (+) picks 6, (-) picks -0; mean (6 + 0) / 2 = 3.
  CHECK(single.mean == 3.0);
  CHECK(single.draws == 2);

  SampleSet two;
  two.profiles = {kFlat, kLifted};
  const RademacherEstimate pair =
      empirical_rademacher(two, mba_grid({0.0, 3.0}), 0, 1);
  // Revenue rows (0,2) and (6,4) over the four sign vectors:
  // (5 + 1 + 1 - 1) / 4.
  CHECK(pair.mean == 1.5);
  CHECK(pair.draws == 4);
  CHECK(pair.exact);
}

TEST_CASE("monte carlo agrees with exact within its own error bars") {
  SampleSet sample;
  sample.seed = 3;
  ProfileDistribution dist;
  dist.kind = IidUniformAdditive{2, 2, 1.0};
  sample.profiles = sample_profiles(dist, 10, 3).profiles;

  const auto grid = mba_grid({0.0, 1.0, 2.0, 3.0, 4.0});
  const RademacherEstimate exact = empirical_rademacher(sample, grid, 0, 0);
  const RademacherEstimate mc = empirical_rademacher(sample, grid, 4000, 17);
  CHECK(exact.exact);
  CHECK_FALSE(mc.exact);
  CHECK(mc.draws == 4000);
  CHECK(mc.std_error > 0.0);
  CHECK(std::abs(mc.mean - exact.mean) <= 4.0 * mc.std_error);

  // Same seed, same estimate; the draw seed matters.
  const RademacherEstimate again = empirical_rademacher(sample, grid, 4000, 17);
  CHECK(again.mean == mc.mean);
  CHECK(again.std_error == mc.std_error);
}

TEST_CASE("exact mode is refused beyond the enumeration cap") {
  SampleSet sample;
  sample.profiles.assign(21, kFlat);
  CHECK_THROWS_AS(
      (void)empirical_rademacher(sample, mba_grid({1.0}), 0, 0),
      CapacityError);

  SampleSet empty;
  CHECK_THROWS_AS(
      (void)empirical_rademacher(empty, mba_grid({1.0}), 0, 0),
      ValidationError);
  SampleSet ok;
  ok.profiles = {kFlat};
  CHECK_THROWS_AS((void)empirical_rademacher(ok, {}, 0, 0), ValidationError);
}

TEST_CASE("estimates are thread-cap independent") {
  SampleSet sample;
  ProfileDistribution dist;
  dist.kind = IidUniformAdditive{2, 2, 1.0};
  sample.profiles = sample_profiles(dist, 12, 5).profiles;
  const auto grid = mba_grid({0.0, 1.5, 3.0});

  set_max_threads(1);
  const RademacherEstimate a = empirical_rademacher(sample, grid, 0, 0);
  const RademacherEstimate b = empirical_rademacher(sample, grid, 1000, 9);
  set_max_threads(7);
  const RademacherEstimate c = empirical_rademacher(sample, grid, 0, 0);
  const RademacherEstimate d = empirical_rademacher(sample, grid, 1000, 9);
  set_max_threads(0);
  CHECK(a.mean == c.mean);
  CHECK(b.mean == d.mean);
  CHECK(b.std_error == d.std_error);
}

TEST_CASE("a constant distribution shows zero deviation at every size") {
  ProfileDistribution dist;
  dist.kind = PointMass{kLifted};
  const UcReport report = uc_experiment(dist, mba_grid({0.0, 1.0, 2.0}),
                                        {5, 20}, 3, 200, 42);
  REQUIRE(report.rows.size() == 2);
  for (const UcRow& row : report.rows) {
    CHECK(row.mean_sup_deviation == 0.0);
    for (double dev : row.per_trial_sup_deviation) CHECK(dev == 0.0);
    for (double dev : row.per_auction_mean_deviation) CHECK(dev == 0.0);
  }
}

TEST_CASE("deviation reports aggregate their own trials") {
  ProfileDistribution dist;
  dist.kind = IidUniformAdditive{2, 2, 1.0};
  const auto grid = mba_grid({0.0, 2.0});
  const UcReport report = uc_experiment(dist, grid, {10, 40}, 4, 400, 7);
  CHECK(report.grid_size == 2);
  CHECK(report.reference_size == 400);
  for (const UcRow& row : report.rows) {
    REQUIRE(row.per_trial_sup_deviation.size() == 4);
    REQUIRE(row.per_auction_mean_deviation.size() == 2);
    double sum = 0.0;
    for (double dev : row.per_trial_sup_deviation) {
      CHECK(dev >= 0.0);
      sum += dev;
    }
    CHECK(row.mean_sup_deviation == doctest::Approx(sum / 4).epsilon(1e-12));
    // The sup row dominates each per-auction mean.
    for (double dev : row.per_auction_mean_deviation) {
      CHECK(dev <= row.mean_sup_deviation + 1e-12);
    }
  }

  // Identical call, identical report.
  const UcReport again = uc_experiment(dist, grid, {10, 40}, 4, 400, 7);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    CHECK(report.rows[i].per_trial_sup_deviation ==
          again.rows[i].per_trial_sup_deviation);
  }
}

TEST_CASE("deviation experiment validates its shape") {
  ProfileDistribution dist;
  dist.kind = IidUniformAdditive{2, 2, 1.0};
  const auto grid = mba_grid({0.0});
  CHECK_THROWS_AS((void)uc_experiment(dist, grid, {}, 3, 100, 0),
                  ValidationError);
  CHECK_THROWS_AS((void)uc_experiment(dist, grid, {0}, 3, 100, 0),
                  ValidationError);
  CHECK_THROWS_AS((void)uc_experiment(dist, grid, {10}, 0, 100, 0),
                  ValidationError);
  // Reference must be at least ten times the largest requested size.
  CHECK_THROWS_AS((void)uc_experiment(dist, grid, {10, 50}, 3, 400, 0),
                  ValidationError);
}

TEST_CASE("train-vs-population gap on the frozen seed") {
  const GapResult r = lambda_gap_experiment(3, 3, 0.5, 5, 1);
  CHECK(r.family_size == 24);
  REQUIRE(r.train_indices.size() == 5);
  for (std::size_t i = 1; i < 5; ++i) {
    CHECK(r.train_indices[i - 1] < r.train_indices[i]);
  }
  CHECK(r.empirical_revenue == doctest::Approx(1.1).epsilon(1e-12));
  CHECK(r.expected_revenue == doctest::Approx(5.5 / 24).epsilon(1e-12));
  CHECK(r.gap == doctest::Approx(1.1 - 5.5 / 24).epsilon(1e-12));

  // Same seed, same subset.
  const GapResult again = lambda_gap_experiment(3, 3, 0.5, 5, 1);
  CHECK(again.train_indices == r.train_indices);
  CHECK(again.gap == r.gap);
}

TEST_CASE("training on under half the catalogue overfits past the margin") {
  for (const auto& [n, m, n_train, seed] :
       std::vector<std::tuple<int, int, int, std::uint64_t>>{
           {2, 3, 2, 0}, {2, 3, 2, 3}, {3, 3, 5, 2}, {3, 3, 11, 4}}) {
    const double gamma = 0.5;
    const GapResult r = lambda_gap_experiment(n, m, gamma, n_train, seed);
    // Every trained profile pays at least 2 * (1 - gamma), the population
    // mean dilutes it by the training fraction, and the fraction is below
    // one half - so the gap clears (1 - gamma) strictly.
    CHECK(2 * n_train < static_cast<int>(r.family_size));
    CHECK(r.empirical_revenue >= 2 * (1 - gamma) - 1e-9);
    CHECK(r.gap > (1 - gamma));
  }
}

TEST_CASE("gap experiment domain errors") {
  CHECK_THROWS_AS((void)lambda_gap_experiment(3, 3, 0.5, 0, 1),
                  ValidationError);
  CHECK_THROWS_AS((void)lambda_gap_experiment(3, 3, 0.5, 24, 1),
                  ValidationError);
  CHECK_THROWS_AS((void)lambda_gap_experiment(3, 3, 1.5, 5, 1),
                  ValidationError);
}

TEST_CASE("bound formulas hit their high-precision oracles") {
  BoundQuery q;
  q.kind = BoundKind::Pseudo;
  q.d = 2;
  q.c = 1;
  q.n_samples = 1000;
  q.delta = 0.1;
  CHECK(eval_bound(q).value ==
        doctest::Approx(0.203808400463231).epsilon(1e-12));
  CHECK_FALSE(eval_bound(q).order_of_magnitude);

  BoundQuery r;
  r.kind = BoundKind::Rademacher;
  r.r_n = 0.05;
  r.c = 1;
  r.n_samples = 100;
  r.delta = 0.1;
  CHECK(eval_bound(r).value ==
        doctest::Approx(0.344774683068082).epsilon(1e-12));

  BoundQuery ea;
  ea.kind = BoundKind::ErmAdditive;
  ea.epsilon = 0.1;
  ea.c = 1;
  ea.delta = 0.05;
  ea.n_samples = 2000;
  ea.rho = 0.02;
  CHECK(eval_bound(ea).value ==
        doctest::Approx(0.153098438915883).epsilon(1e-12));

  BoundQuery em;
  em.kind = BoundKind::ErmMultiplicative;
  em.epsilon = 0.05;
  em.c = 1;
  em.delta = 0.05;
  em.n_samples = 500;
  em.alpha = 0.1;
  em.l_star = 2;
  CHECK(eval_bound(em).value ==
        doctest::Approx(0.322816565614944).epsilon(1e-12));

  BoundQuery am;
  am.kind = BoundKind::AmaRademacher;
  am.n = 2;
  am.m = 2;
  am.n_samples = 1000;
  am.h_w_lo = 1;
  am.h_w_hi = 2;
  am.h_lambda = 1;
  am.h_v = 1;
  const BoundResult ar = eval_bound(am);
  CHECK(ar.value == doctest::Approx(27.2661926434089).epsilon(1e-12));
  CHECK(ar.order_of_magnitude);

  // The complexity-growth formula has no failure-probability term at all.
  BoundQuery am2 = am;
  am2.delta = 0.9;
  CHECK(eval_bound(am2).value == ar.value);
}

TEST_CASE("bound formulas reject out-of-domain queries") {
  BoundQuery q;
  q.kind = BoundKind::Pseudo;
  q.delta = 0.0;
  CHECK_THROWS_AS((void)eval_bound(q), ValidationError);
  q.delta = 1.0;
  CHECK_THROWS_AS((void)eval_bound(q), ValidationError);

  BoundQuery small;
  small.kind = BoundKind::Pseudo;
  small.d = 8;
  small.n_samples = 4;  // fewer samples than dimensions
  CHECK_THROWS_AS((void)eval_bound(small), ValidationError);

  BoundQuery alpha;
  alpha.kind = BoundKind::ErmMultiplicative;
  alpha.alpha = 1.0;
  CHECK_THROWS_AS((void)eval_bound(alpha), ValidationError);

  BoundQuery names;
  CHECK(bound_kind_from_name("pseudo") == BoundKind::Pseudo);
  CHECK(bound_kind_from_name("ama-rademacher") == BoundKind::AmaRademacher);
  CHECK_THROWS_AS((void)bound_kind_from_name("nope"), ValidationError);
  for (BoundKind k : {BoundKind::Pseudo, BoundKind::Rademacher,
                      BoundKind::AmaRademacher, BoundKind::ErmAdditive,
                      BoundKind::ErmMultiplicative}) {
    CHECK(bound_kind_from_name(bound_kind_name(k)) == k);
  }
}

}  // namespace
