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

#include "amd/lower_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>

#include "amd/allocation.hpp"
#include "amd/bundle.hpp"
#include "amd/errors.hpp"
#include "amd/parallel.hpp"
#include "amd/rng.hpp"

namespace amd {
namespace {

void check_gamma(double gamma) {
  if (!(gamma > 0.0) || !(gamma < 1.0)) {
    throw ValidationError("gamma must lie strictly between 0 and 1, got " +
                          std::to_string(gamma));
  }
}

void check_subset_size(const std::vector<bool>& in_h, std::size_t expected) {
  if (in_h.size() != expected) {
    throw ValidationError("subset flags cover " + std::to_string(in_h.size()) +
                          " profiles but the catalogue has " +
                          std::to_string(expected));
  }
}

std::uint64_t binomial(int m, int k) {
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(m - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace

const char* lb_family_name(LbFamily family) {
  switch (family) {
    case LbFamily::LambdaDense:
      return "lambda-lb";
    case LbFamily::VvcaSplit:
      return "vvca-lb";
    case LbFamily::BundleReserve:
      return "bundle-reserve-lb";
  }
  throw ValidationError("unknown lower-bound family");
}

LbFamily lb_family_from_name(std::string_view name) {
  if (name == "lambda-lb") return LbFamily::LambdaDense;
  if (name == "vvca-lb") return LbFamily::VvcaSplit;
  if (name == "bundle-reserve-lb") return LbFamily::BundleReserve;
  throw ValidationError("unknown lower-bound family '" + std::string(name) +
                        "'");
}

std::size_t lambda_lb_size(int n, int m) {
  if (n < 2) {
    throw ValidationError(
        "the boost-table family needs at least 2 bidders, got " +
        std::to_string(n));
  }
  if (m < 2) {
    throw ValidationError(
        "the boost-table family needs at least 2 items, got " +
        std::to_string(m));
  }
  allocation_count(n, m);  // capacity guard
  std::uint64_t full = 1;
  for (int j = 0; j < m; ++j) full *= static_cast<std::uint64_t>(n);
  return static_cast<std::size_t>(full - static_cast<std::uint64_t>(n));
}

std::size_t vvca_lb_size(int m) {
  if (m < 2) {
    throw ValidationError(
        "the per-bidder-boost family needs at least 2 items, got " +
        std::to_string(m));
  }
  check_item_count(m);
  return (std::size_t{1} << m) - 2;
}

std::size_t bundle_reserve_lb_size(int m) {
  if (m < 2 || m % 2 != 0) {
    throw ValidationError(
        "the bundle-priced-seller family needs an even item count of at "
        "least 2, got " +
        std::to_string(m));
  }
  check_item_count(m);
  return static_cast<std::size_t>(binomial(m, m / 2));
}

LowerBoundInstance build_lambda_lb(int n, int m, double gamma,
                                   const std::vector<bool>& in_h) {
  const std::size_t size = lambda_lb_size(n, m);
  check_gamma(gamma);
  check_subset_size(in_h, size);

  const std::uint64_t count = allocation_count(n, m);
  const double off = 1.0 - gamma;

  // Catalogue: every allocation that hands out all m items, minus the n
  // allocations that give everything to a single bidder.  One profile per
  // such allocation, giving each bidder unit value on exactly the items it
  // holds there.  The boost table rewards every allocation except the
  // catalogue allocations ranked in H, which are left unrewarded: on those
  // profiles the reward differential is extracted as payments.
  std::vector<double> boost_table(count, off);
  std::vector<ValuationProfile> profiles;
  std::vector<RevenueClaim> claims;
  profiles.reserve(size);
  claims.reserve(size);
  std::size_t rank = 0;
  for_each_allocation(n, m, [&](const Allocation& a, std::uint64_t index) {
    bool full = true;
    bool single = true;
    for (int j = 0; j < m; ++j) {
      if (a.assignee[j] == 0) full = false;
      if (a.assignee[j] != a.assignee[0]) single = false;
    }
    if (!full || single) return;
    std::vector<std::vector<double>> items(
        static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(m), 0.0));
    for (int j = 0; j < m; ++j) {
      items[static_cast<std::size_t>(a.assignee[j] - 1)][static_cast<std::size_t>(j)] = 1.0;
    }
    profiles.push_back(make_additive_profile(n, m, items));
    if (in_h[rank]) {
      boost_table[index] = 0.0;
      claims.push_back(RevenueClaim{ClaimRelation::AtLeast, 2.0 * off});
    } else {
      claims.push_back(RevenueClaim{ClaimRelation::Equal, 0.0});
    }
    ++rank;
  });

  LowerBoundInstance instance;
  instance.family = LbFamily::LambdaDense;
  instance.n = n;
  instance.m = m;
  instance.gamma = gamma;
  instance.in_h = in_h;
  instance.profiles = std::move(profiles);
  instance.auction = AuctionParams{LambdaAuction{BoostMap::dense(std::move(boost_table))}};
  instance.claims = std::move(claims);
  return instance;
}

LowerBoundInstance build_vvca_lb(int m, double gamma,
                                 const std::vector<bool>& in_h) {
  const std::size_t size = vvca_lb_size(m);
  check_gamma(gamma);
  check_subset_size(in_h, size);

  const int n = 2;
  const std::size_t table_size = std::size_t{1} << m;
  const double half_off = (1.0 - gamma) / 2.0;

  // Catalogue: one profile per proper nonempty bundle b.  Bidder 1 wants the
  // complement of b item by item, bidder 2 wants b.  Each bidder's boost
  // table pays half the reward on every bundle except — when b is ranked in
  // H — the bidder's own target bundle, where the missing reward turns into
  // a payment under the split rule.
  std::vector<std::vector<double>> c(2, std::vector<double>(table_size, half_off));
  std::vector<ValuationProfile> profiles;
  std::vector<RevenueClaim> claims;
  profiles.reserve(size);
  claims.reserve(size);
  for (std::size_t rank = 0; rank < size; ++rank) {
    const BundleId target = static_cast<BundleId>(rank + 1);
    const BundleId rest = bundle_complement(target, m);
    std::vector<std::vector<double>> items(
        2, std::vector<double>(static_cast<std::size_t>(m), 0.0));
    for (int j = 0; j < m; ++j) {
      if (bundle_contains(rest, j)) items[0][static_cast<std::size_t>(j)] = 1.0;
      if (bundle_contains(target, j)) items[1][static_cast<std::size_t>(j)] = 1.0;
    }
    profiles.push_back(make_additive_profile(n, m, items));
    if (in_h[rank]) {
      c[0][rest] = 0.0;
      c[1][target] = 0.0;
      claims.push_back(RevenueClaim{ClaimRelation::Equal, 1.0 - gamma});
    } else {
      claims.push_back(RevenueClaim{ClaimRelation::Equal, 0.0});
    }
  }

  LowerBoundInstance instance;
  instance.family = LbFamily::VvcaSplit;
  instance.n = n;
  instance.m = m;
  instance.gamma = gamma;
  instance.in_h = in_h;
  instance.profiles = std::move(profiles);
  instance.auction = AuctionParams{Vvca{{1.0, 1.0}, std::move(c)}};
  instance.claims = std::move(claims);
  return instance;
}

LowerBoundInstance build_bundle_reserve_lb(int m, double gamma,
                                           const std::vector<bool>& in_h) {
  const std::size_t size = bundle_reserve_lb_size(m);
  check_gamma(gamma);
  check_subset_size(in_h, size);

  const int half = m / 2;
  const std::size_t table_size = std::size_t{1} << m;
  const double off = 1.0 - gamma;

  // Catalogue: one single-bidder profile per half-size bundle b, valuing b
  // itself and every strictly larger bundle at 1.  The seller prices retained
  // bundles: free below half size, a reward's worth above, and at exactly
  // half size the price depends on whether the complementary profile is
  // ranked in H.  On an H profile the bidder ends up paying the reward.
  std::vector<BundleId> catalogue;
  catalogue.reserve(size);
  std::vector<std::size_t> rank_of(table_size, size);
  for (BundleId b = 1; b < table_size; ++b) {
    if (bundle_size(b) == half) {
      rank_of[b] = catalogue.size();
      catalogue.push_back(b);
    }
  }

  std::vector<double> reserves(table_size, 0.0);
  for (BundleId b = 0; b < table_size; ++b) {
    const int s = bundle_size(b);
    if (s > half) {
      reserves[b] = off;
    } else if (s == half) {
      const std::size_t partner = rank_of[bundle_complement(b, m)];
      reserves[b] = in_h[partner] ? 0.0 : off;
    }
  }

  std::vector<ValuationProfile> profiles;
  std::vector<RevenueClaim> claims;
  profiles.reserve(size);
  claims.reserve(size);
  for (std::size_t rank = 0; rank < size; ++rank) {
    const BundleId target = catalogue[rank];
    std::vector<std::vector<double>> values(1, std::vector<double>(table_size, 0.0));
    for (BundleId b = 0; b < table_size; ++b) {
      if (b == target || bundle_size(b) > half) values[0][b] = 1.0;
    }
    profiles.push_back(make_profile(1, m, std::move(values)));
    if (in_h[rank]) {
      claims.push_back(RevenueClaim{ClaimRelation::Equal, off});
    } else {
      claims.push_back(RevenueClaim{ClaimRelation::Equal, 0.0});
    }
  }

  LowerBoundInstance instance;
  instance.family = LbFamily::BundleReserve;
  instance.n = 1;
  instance.m = m;
  instance.gamma = gamma;
  instance.in_h = in_h;
  instance.profiles = std::move(profiles);
  instance.bundle_reserves = std::move(reserves);
  instance.claims = std::move(claims);
  return instance;
}

std::vector<bool> random_subset(std::size_t size, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0));
  std::vector<bool> in_h(size);
  for (std::size_t i = 0; i < size; ++i) in_h[i] = rng.coin();
  return in_h;
}

AuctionOutcome run_bundle_reserve(const std::vector<double>& reserves,
                                  const ValuationProfile& profile) {
  validate_profile(profile);
  if (profile.n != 1) {
    throw ValidationError(
        "the bundle-priced seller supports exactly one bidder, got " +
        std::to_string(profile.n));
  }
  const std::size_t table_size = std::size_t{1} << profile.m;
  if (reserves.size() != table_size) {
    throw ValidationError("bundle reserve table has " +
                          std::to_string(reserves.size()) + " entries, want " +
                          std::to_string(table_size));
  }
  for (double r : reserves) {
    if (!std::isfinite(r) || r < 0.0) {
      throw ValidationError("bundle reserves must be finite and nonnegative");
    }
  }

  const BundleId grand = grand_bundle(profile.m);
  BundleId chosen = 0;
  double best_obj = 0.0;
  double best_value = 0.0;
  BundleId removed = 0;
  double best_reserve = 0.0;
  bool first = true;
  for (std::size_t s = 0; s < table_size; ++s) {
    const BundleId bought = static_cast<BundleId>(s);
    const double value = profile.value(1, bought);
    const double kept = reserves[grand ^ bought];
    const double obj = value + kept;
    if (first || obj > best_obj || (obj == best_obj && value > best_value)) {
      chosen = bought;
      best_obj = obj;
      best_value = value;
    }
    if (first || kept > best_reserve) {
      removed = bought;
      best_reserve = kept;
    }
    first = false;
  }

  AuctionOutcome outcome;
  outcome.chosen = chosen;  // one bidder: allocation index == bundle mask
  outcome.assignee.assign(static_cast<std::size_t>(profile.m), 0);
  for (int j = 0; j < profile.m; ++j) {
    if (bundle_contains(chosen, j)) outcome.assignee[static_cast<std::size_t>(j)] = 1;
  }
  outcome.removed = {removed};
  outcome.payments = {best_reserve - reserves[grand ^ chosen]};
  outcome.revenue = outcome.payments[0];
  outcome.objective = best_obj;
  return outcome;
}

LbReport verify_lower_bound(const LowerBoundInstance& instance,
                            double tolerance) {
  const std::size_t size = instance.profiles.size();
  if (instance.claims.size() != size || instance.in_h.size() != size) {
    throw ValidationError(
        "instance profiles, claims, and subset flags must align");
  }
  if (!(tolerance >= 0.0)) {
    throw ValidationError("tolerance must be nonnegative");
  }

  const Vvca* vvca = nullptr;
  const AuctionParams* params = nullptr;
  switch (instance.family) {
    case LbFamily::LambdaDense:
      if (!instance.auction) {
        throw ValidationError("instance is missing its auction parameters");
      }
      params = &*instance.auction;
      break;
    case LbFamily::VvcaSplit:
      if (!instance.auction ||
          !(vvca = std::get_if<Vvca>(&*instance.auction))) {
        throw ValidationError(
            "instance needs per-bidder boost auction parameters");
      }
      break;
    case LbFamily::BundleReserve:
      break;
  }

  LbReport report;
  report.rows.assign(size, LbRow{});
  parallel_for(size, [&](std::size_t i) {
    double revenue = 0.0;
    switch (instance.family) {
      case LbFamily::LambdaDense:
        revenue = run_auction(*params, instance.profiles[i]).revenue;
        break;
      case LbFamily::VvcaSplit:
        revenue = run_vvca_split_boosts(*vvca, instance.profiles[i]).revenue;
        break;
      case LbFamily::BundleReserve:
        revenue =
            run_bundle_reserve(instance.bundle_reserves, instance.profiles[i])
                .revenue;
        break;
    }
    const RevenueClaim& claim = instance.claims[i];
    bool ok = false;
    if (claim.relation == ClaimRelation::Equal) {
      ok = std::abs(revenue - claim.value) <= tolerance;
    } else {
      ok = revenue >= claim.value - tolerance;
    }
    report.rows[i] = LbRow{i, instance.in_h[i], revenue, claim, ok};
  });
  report.all_ok = std::all_of(report.rows.begin(), report.rows.end(),
                              [](const LbRow& row) { return row.ok; });
  return report;
}

ShatterReport check_shattering(const ShatterInstance& instance) {
  const std::size_t count = instance.samples.size();
  if (count == 0 || count > 63) {
    throw ValidationError("shattering checks support 1 to 63 samples, got " +
                          std::to_string(count));
  }
  if (instance.witnesses.size() != count) {
    throw ValidationError("need exactly one witness threshold per sample");
  }
  if (instance.auctions.empty()) {
    throw ValidationError("shattering checks need at least one auction");
  }
  for (double z : instance.witnesses) {
    if (!std::isfinite(z)) {
      throw ValidationError("witness thresholds must be finite");
    }
  }

  ShatterReport report;
  report.revenue = revenue_matrix(instance.auctions, instance.samples);
  std::set<std::uint64_t> seen;
  for (const std::vector<double>& row : report.revenue) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (row[i] > instance.witnesses[i]) mask |= std::uint64_t{1} << i;
    }
    seen.insert(mask);
  }
  report.labelings.assign(seen.begin(), seen.end());
  report.shattered = report.labelings.size() == (std::uint64_t{1} << count);
  return report;
}

ShatterInstance builtin_shatter_instance(std::string_view name, int n, int m) {
  if (name != "mba-table1") {
    throw ValidationError("unknown shattering certificate '" +
                          std::string(name) + "'");
  }
  if (n < 2 || m < 2) {
    throw ValidationError(
        "the mba-table1 certificate needs at least 2 bidders and 2 items");
  }
  check_item_count(m);

  // Two bidders with threshold valuations: any bundle of at least half the
  // items is worth 3.  The second sample additionally lifts the grand bundle
  // to 4 for both.  Grand-bundle discounts 0, 1.5, 2.5, and 2 then realise
  // revenues (0,2), (3,5), (5,4), (4,6), crossing thresholds 3 and 4 in all
  // four patterns.  Extra bidders beyond the first two value nothing.
  const std::size_t table_size = std::size_t{1} << m;
  const int threshold = m / 2;
  std::vector<double> base(table_size, 0.0);
  for (std::size_t b = 1; b < table_size; ++b) {
    if (bundle_size(static_cast<BundleId>(b)) >= threshold) base[b] = 3.0;
  }
  std::vector<double> lifted = base;
  lifted[table_size - 1] = 4.0;

  std::vector<std::vector<double>> rows1(
      static_cast<std::size_t>(n), std::vector<double>(table_size, 0.0));
  std::vector<std::vector<double>> rows2 = rows1;
  rows1[0] = base;
  rows1[1] = base;
  rows2[0] = lifted;
  rows2[1] = lifted;

  ShatterInstance instance;
  instance.samples.push_back(make_profile(n, m, std::move(rows1)));
  instance.samples.push_back(make_profile(n, m, std::move(rows2)));
  instance.witnesses = {3.0, 4.0};
  instance.auctions = {AuctionParams{Mba{0.0}}, AuctionParams{Mba{1.5}},
                       AuctionParams{Mba{2.5}}, AuctionParams{Mba{2.0}}};
  return instance;
}

}  // namespace amd
