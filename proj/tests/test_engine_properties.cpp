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

#include <cstdint>
#include <vector>

#include "doctest.h"

#include "amd/engine.hpp"
#include "amd/parallel.hpp"
#include "amd/rng.hpp"
#include "amd/valuation.hpp"
#include "random_instances.hpp"

namespace {

using namespace amd;
using namespace amd::testing;

double truthful_utility(const ValuationProfile& profile, int bidder,
                        const AuctionOutcome& out) {
  Allocation a;
  a.assignee = out.assignee;
  return profile.value(bidder, bundle_of(a, bidder)) -
         out.payments[static_cast<std::size_t>(bidder - 1)];
}

TEST_CASE("payments are nonnegative, rational, and sum to revenue") {
  Rng rng(2024);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(3));
    const ValuationProfile p = random_profile(rng, n, m);
    const AuctionParams params =
        random_params(rng, static_cast<int>(rng.below(5)), n, m);
    const AuctionOutcome out = run_auction(params, p);

    double sum = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double pay = out.payments[static_cast<std::size_t>(j - 1)];
      CHECK(pay >= 0.0);
      CHECK(truthful_utility(p, j, out) >= -1e-9);
      sum += pay;
    }
    CHECK(out.revenue == sum);
  }
}

TEST_CASE("doubling every value and parameter doubles the payments exactly") {
  Rng rng(77);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(3));
    const ValuationProfile p = random_profile(rng, n, m);
    const AuctionParams params =
        random_params(rng, static_cast<int>(rng.below(5)), n, m);

    const AuctionOutcome base = run_auction(params, p);
    const AuctionOutcome scaled =
        run_auction(scale_params(params, 2.0), scale_profile(p, 2.0));

    // Doubling is exact in binary floating point, so the comparison keys
    // scale without reordering: same winner, exactly doubled payments.
    CHECK(scaled.chosen == base.chosen);
    REQUIRE(scaled.payments.size() == base.payments.size());
    for (std::size_t j = 0; j < base.payments.size(); ++j) {
      CHECK(scaled.payments[j] == 2.0 * base.payments[j]);
    }
  }
}

TEST_CASE("each class agrees with its rewrite as the general form") {
  Rng rng(501);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(3));
    const ValuationProfile p = random_profile(rng, n, m);
    // Classes 1..3 lower to the general weighted-boosted form; the
    // reserve class is excluded (the seller is not expressible there).
    const AuctionParams params =
        random_params(rng, 1 + static_cast<int>(rng.below(3)), n, m);

    const AuctionOutcome native = run_auction(params, p);
    const AuctionOutcome lowered =
        run_auction(AuctionParams{lower_to_general(params, n, m)}, p);
    CHECK(lowered.chosen == native.chosen);
    CHECK(lowered.payments == native.payments);
    CHECK(lowered.revenue == native.revenue);
  }
}

TEST_CASE("zero reserves reduce the seller class to the discount class") {
  Rng rng(502);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(3));
    const ValuationProfile p = random_profile(rng, n, m);
    const double c = rng.uniform(0.0, 4.0);
    const AuctionOutcome plain = run_auction(AuctionParams{Mba{c}}, p);
    const AuctionOutcome with_seller = run_auction(
        AuctionParams{Mbarp{c, std::vector<double>(
                                   static_cast<std::size_t>(m), 0.0)}},
        p);
    CHECK(with_seller.chosen == plain.chosen);
    CHECK(with_seller.payments == plain.payments);
  }
}

TEST_CASE("no misreport beats truth-telling") {
  Rng rng(909);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(3));
    const ValuationProfile p = random_profile(rng, n, m);
    const AuctionParams params =
        random_params(rng, static_cast<int>(rng.below(5)), n, m);
    const int bidder = 1 + static_cast<int>(rng.below(n));

    const std::vector<double>& truthful_row =
        p.values[static_cast<std::size_t>(bidder - 1)];
    const double honest =
        utility_under_report(params, p, bidder, truthful_row);

    std::vector<double> lie(truthful_row.size(), 0.0);
    for (std::size_t b = 1; b < lie.size(); ++b) {
      lie[b] = rng.uniform(0.0, 12.0);
    }
    const double dishonest = utility_under_report(params, p, bidder, lie);
    CHECK(dishonest <= honest + 1e-9);
  }
}

TEST_CASE("revenue never exceeds the class ceiling") {
  Rng rng(311);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(3));
    const ValuationProfile p = random_profile(rng, n, m);
    const AuctionParams params =
        random_params(rng, static_cast<int>(rng.below(5)), n, m);
    const AuctionOutcome out = run_auction(params, p);

    const auto [w_lo, w_hi] = weight_range(params);
    const double ceiling =
        (n / w_lo) * (n * w_hi * p.max_value() + boost_ceiling(params));
    CHECK(out.revenue <= ceiling + 1e-9);
  }
}

TEST_CASE("outcomes do not depend on the worker-thread cap") {
  Rng rng(640);
  std::vector<AuctionParams> auctions;
  std::vector<ValuationProfile> profiles;
  for (int i = 0; i < 12; ++i) {
    auctions.push_back(random_params(rng, i % 5, 2, 2));
    profiles.push_back(random_profile(rng, 2, 2));
  }
  set_max_threads(1);
  const auto serial = revenue_matrix(auctions, profiles);
  set_max_threads(5);
  const auto parallel = revenue_matrix(auctions, profiles);
  set_max_threads(0);
  CHECK(serial == parallel);
}

}  // namespace
