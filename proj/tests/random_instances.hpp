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

#ifndef AMDLAB_TESTS_RANDOM_INSTANCES_HPP
#define AMDLAB_TESTS_RANDOM_INSTANCES_HPP

// Seeded generators for small random market instances, shared by the
// property suites and the acceptance gate.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "amd/allocation.hpp"
#include "amd/auction.hpp"
#include "amd/rng.hpp"
#include "amd/valuation.hpp"

namespace amd::testing {

// Dense random profile, free-form rows (no monotonicity), values in
// [0, 10). About half the rows are additive to exercise both textures.
inline ValuationProfile random_profile(Rng& rng, int n, int m) {
  const std::size_t table = std::size_t{1} << m;
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<double> row(table, 0.0);
    if (rng.coin()) {
      std::vector<double> item(static_cast<std::size_t>(m));
      for (double& x : item) x = rng.uniform(0.0, 5.0);
      for (std::size_t b = 1; b < table; ++b) {
        double sum = 0.0;
        for (int j = 0; j < m; ++j) {
          if ((b >> j) & 1u) sum += item[static_cast<std::size_t>(j)];
        }
        row[b] = sum;
      }
    } else {
      for (std::size_t b = 1; b < table; ++b) row[b] = rng.uniform(0.0, 10.0);
    }
    rows.push_back(std::move(row));
  }
  return make_profile(n, m, std::move(rows));
}

inline std::vector<double> random_weights(Rng& rng, int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (double& x : w) x = rng.uniform(0.5, 2.0);
  return w;
}

inline BoostMap random_boosts(Rng& rng, int n, int m) {
  const std::uint64_t count = allocation_count(n, m);
  std::vector<double> values(static_cast<std::size_t>(count), 0.0);
  for (double& x : values) {
    if (rng.below(10) < 3) x = rng.uniform(0.0, 3.0);
  }
  if (rng.coin()) return BoostMap::dense(std::move(values));
  std::vector<std::pair<std::uint64_t, double>> entries;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (values[static_cast<std::size_t>(i)] != 0.0) {
      entries.emplace_back(i, values[static_cast<std::size_t>(i)]);
    }
  }
  return BoostMap::sparse(std::move(entries));
}

// One random parameter set of the given class index (0..4: weighted
// boosted, per-bidder boosted, boost-only, grand-discount, discount plus
// reserves) for an (n, m) market.
inline AuctionParams random_params(Rng& rng, int which, int n, int m) {
  switch (which) {
    case 0:
      return AuctionParams{GeneralAma{random_weights(rng, n),
                                      random_boosts(rng, n, m)}};
    case 1: {
      const std::size_t table = std::size_t{1} << m;
      std::vector<std::vector<double>> c(
          static_cast<std::size_t>(n), std::vector<double>(table, 0.0));
      for (auto& row : c) {
        for (double& x : row) {
          if (rng.below(10) < 4) x = rng.uniform(0.0, 2.0);
        }
      }
      return AuctionParams{Vvca{random_weights(rng, n), std::move(c)}};
    }
    case 2:
      return AuctionParams{LambdaAuction{random_boosts(rng, n, m)}};
    case 3:
      return AuctionParams{Mba{rng.uniform(0.0, 4.0)}};
    default: {
      std::vector<double> reserves(static_cast<std::size_t>(m));
      for (double& r : reserves) r = rng.uniform(0.0, 3.0);
      return AuctionParams{Mbarp{rng.uniform(0.0, 4.0), std::move(reserves)}};
    }
  }
}

// Largest possible boost value of `params` summed over bidders (an upper
// bound on the allocation bonus), used by the revenue range check. For the
// reserve class the seller's kept value is folded in as well.
inline double boost_ceiling(const AuctionParams& params) {
  if (const auto* ama = std::get_if<GeneralAma>(&params)) {
    return ama->boosts.max_boost();
  }
  if (const auto* vvca = std::get_if<Vvca>(&params)) {
    double total = 0.0;
    for (const auto& row : vvca->c) {
      double best = 0.0;
      for (double x : row) best = std::max(best, x);
      total += best;
    }
    return total;
  }
  if (const auto* lam = std::get_if<LambdaAuction>(&params)) {
    return lam->boosts.max_boost();
  }
  if (const auto* mba = std::get_if<Mba>(&params)) {
    return mba->c;
  }
  const auto& mbarp = std::get<Mbarp>(params);
  double reserves = 0.0;
  for (double r : mbarp.reserves) reserves += r;
  return mbarp.c + reserves;
}

inline std::pair<double, double> weight_range(const AuctionParams& params) {
  const std::vector<double>* w = nullptr;
  if (const auto* ama = std::get_if<GeneralAma>(&params)) w = &ama->weights;
  if (const auto* vvca = std::get_if<Vvca>(&params)) w = &vvca->weights;
  if (w == nullptr) return {1.0, 1.0};
  double lo = (*w)[0], hi = (*w)[0];
  for (double x : *w) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return {lo, hi};
}

// Multiplies every valuation and every revenue-dimensioned parameter
// (boosts, discounts, reserves, per-bidder tables) by s; weights are
// scale-free and stay put.
inline AuctionParams scale_params(const AuctionParams& params, double s) {
  if (const auto* ama = std::get_if<GeneralAma>(&params)) {
    if (ama->boosts.is_dense()) {
      std::vector<double> v = ama->boosts.dense_values();
      for (double& x : v) x *= s;
      return AuctionParams{GeneralAma{ama->weights, BoostMap::dense(v)}};
    }
    auto entries = ama->boosts.sparse_entries();
    for (auto& [_, x] : entries) x *= s;
    return AuctionParams{GeneralAma{ama->weights, BoostMap::sparse(entries)}};
  }
  if (const auto* vvca = std::get_if<Vvca>(&params)) {
    auto c = vvca->c;
    for (auto& row : c) {
      for (double& x : row) x *= s;
    }
    return AuctionParams{Vvca{vvca->weights, std::move(c)}};
  }
  if (const auto* lam = std::get_if<LambdaAuction>(&params)) {
    if (lam->boosts.is_dense()) {
      std::vector<double> v = lam->boosts.dense_values();
      for (double& x : v) x *= s;
      return AuctionParams{LambdaAuction{BoostMap::dense(v)}};
    }
    auto entries = lam->boosts.sparse_entries();
    for (auto& [_, x] : entries) x *= s;
    return AuctionParams{LambdaAuction{BoostMap::sparse(entries)}};
  }
  if (const auto* mba = std::get_if<Mba>(&params)) {
    return AuctionParams{Mba{mba->c * s}};
  }
  const auto& mbarp = std::get<Mbarp>(params);
  auto reserves = mbarp.reserves;
  for (double& r : reserves) r *= s;
  return AuctionParams{Mbarp{mbarp.c * s, std::move(reserves)}};
}

inline ValuationProfile scale_profile(const ValuationProfile& p, double s) {
  auto rows = p.values;
  for (auto& row : rows) {
    for (double& x : row) x *= s;
  }
  return make_profile(p.n, p.m, std::move(rows));
}

}  // namespace amd::testing

#endif  // AMDLAB_TESTS_RANDOM_INSTANCES_HPP
