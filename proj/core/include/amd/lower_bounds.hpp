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

#ifndef AMD_LOWER_BOUNDS_HPP
#define AMD_LOWER_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "amd/auction.hpp"
#include "amd/engine.hpp"
#include "amd/valuation.hpp"

namespace amd {

// Families of hard instances.  Each family pairs a fixed valuation catalogue
// with an auction whose parameters encode a subset H of the catalogue; the
// auction extracts revenue exactly on the profiles ranked in H and nothing on
// the rest.  Because every subset H yields such an auction, average revenue
// over a training subset can be pushed far above the catalogue-wide mean.
enum class LbFamily {
  // Boost-table auction over the full-allocation catalogue (n^m - n profiles).
  LambdaDense,
  // Two-bidder per-bidder-boost auction over the proper-bundle catalogue
  // (2^m - 2 profiles); verified with the split payment rule that drops a
  // bidder's own boost table together with its bid.
  VvcaSplit,
  // Single-bidder bundle-priced seller over the half-size-bundle catalogue
  // (C(m, m/2) profiles, m even).
  BundleReserve,
};

const char* lb_family_name(LbFamily family);
LbFamily lb_family_from_name(std::string_view name);

enum class ClaimRelation { Equal, AtLeast };

// Revenue promised for one catalogue profile: "= value" or ">= value".
struct RevenueClaim {
  ClaimRelation relation = ClaimRelation::Equal;
  double value = 0.0;
};

// A fully materialised instance: the catalogue, the subset H, the auction (or
// the bundle price table for the seller family), and the per-profile claims.
struct LowerBoundInstance {
  LbFamily family = LbFamily::LambdaDense;
  int n = 0;
  int m = 0;
  double gamma = 0.0;
  std::vector<bool> in_h;                  // one flag per catalogue profile
  std::vector<ValuationProfile> profiles;  // the catalogue, fixed order
  std::optional<AuctionParams> auction;    // LambdaDense / VvcaSplit
  std::vector<double> bundle_reserves;     // BundleReserve: 2^m entries
  std::vector<RevenueClaim> claims;        // one per profile
};

// Catalogue sizes.  Throw ValidationError when the shape is unsupported.
std::size_t lambda_lb_size(int n, int m);
std::size_t vvca_lb_size(int m);
std::size_t bundle_reserve_lb_size(int m);

// Builders.  gamma must lie strictly inside (0, 1); in_h must have exactly
// one flag per catalogue profile.  The returned instance is self-contained.
LowerBoundInstance build_lambda_lb(int n, int m, double gamma,
                                   const std::vector<bool>& in_h);
LowerBoundInstance build_vvca_lb(int m, double gamma,
                                 const std::vector<bool>& in_h);
LowerBoundInstance build_bundle_reserve_lb(int m, double gamma,
                                           const std::vector<bool>& in_h);

// Uniformly random subset of {0, ..., size-1} as a membership vector; each
// element is included with probability 1/2, decided by one coin per element.
std::vector<bool> random_subset(std::size_t size, std::uint64_t seed);

// Seller-side evaluation used by the BundleReserve family: the bidder may buy
// any bundle S, the seller keeps the complement and prices it with the bundle
// table.  The chosen S maximises v(S) + reserve(complement), ties broken by
// higher v(S) and then lower S; the bidder pays the externality
// max_S' reserve(complement(S')) - reserve(complement(S)).
AuctionOutcome run_bundle_reserve(const std::vector<double>& reserves,
                                  const ValuationProfile& profile);

struct LbRow {
  std::size_t index = 0;  // catalogue position
  bool in_h = false;
  double revenue = 0.0;
  RevenueClaim claim;
  bool ok = false;
};

struct LbReport {
  std::vector<LbRow> rows;
  bool all_ok = false;
};

// Evaluate the instance's auction on every catalogue profile and check each
// claim ("=" within tolerance, ">=" up to tolerance slack).
LbReport verify_lower_bound(const LowerBoundInstance& instance,
                            double tolerance = 1e-9);

// A shattering certificate: auctions x samples revenue matrix, thresholded
// per sample, must realise every +/- labelling of the samples.
struct ShatterInstance {
  std::vector<ValuationProfile> samples;
  std::vector<double> witnesses;  // one threshold per sample
  std::vector<AuctionParams> auctions;
};

struct ShatterReport {
  std::vector<std::vector<double>> revenue;  // auctions x samples
  std::vector<std::uint64_t> labelings;      // distinct masks, ascending;
                                             // bit i set when revenue on
                                             // sample i exceeds witness i
  bool shattered = false;
};

ShatterReport check_shattering(const ShatterInstance& instance);

// Built-in certificates addressable by name from the command line.  The only
// name currently understood is "mba-table1": two threshold-valuation samples
// and four grand-bundle discounts realising all four labelings, for any
// n >= 2 bidders and m >= 2 items.
ShatterInstance builtin_shatter_instance(std::string_view name, int n, int m);

}  // namespace amd

#endif  // AMD_LOWER_BOUNDS_HPP
