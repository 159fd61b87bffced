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

#pragma once

#include <cstdint>
#include <vector>

#include "amd/auction.hpp"
#include "amd/valuation.hpp"

namespace amd {

struct AuctionOutcome {
  // Index of the winning allocation in the canonical enumeration order.
  std::uint64_t chosen = 0;
  // Item -> agent map of the winning allocation (0 = unallocated/seller).
  std::vector<std::uint8_t> assignee;
  // Per bidder: index of the allocation that maximizes the objective with
  // that bidder's value contribution dropped.
  std::vector<std::uint64_t> removed;
  // Per bidder, >= 0 always.
  std::vector<double> payments;
  // Sum of payments, accumulated in bidder order.
  double revenue = 0.0;
  // Boosted objective value of the winning allocation.
  double objective = 0.0;
};

// Runs one sealed-bid auction by exhaustive enumeration of the allocation
// space. The winner is the allocation maximizing the class objective;
// bidder j pays 1/w_j times the gap between the best j-dropped objective
// over all allocations and the j-dropped objective at the winner.
//
// Ties are broken identically everywhere: higher boosted objective first,
// then higher unboosted weighted bidder welfare, then lowest allocation
// index. Comparisons are exact (no epsilon), so outcomes are reproducible
// bit for bit.
AuctionOutcome run_auction(const AuctionParams& params,
                           const ValuationProfile& profile);

// Variant evaluation for per-bidder boost tables that treats each bidder's
// own boost share as part of that bidder's report: dropping bidder j drops
// c_j along with w_j v_j. This matches the per-bidder payment arithmetic
// of the split revenue constructions; unlike run_auction it is not
// truthful or individually rational for general tables, so it lives under
// its own name rather than behind a flag.
AuctionOutcome run_vvca_split_boosts(const Vvca& params,
                                     const ValuationProfile& profile);

// Utility bidder `bidder` (1-based) obtains when everyone else reports
// `truthful` rows, it reports `reported_row` (dense, 2^m entries), and its
// realized value is taken from `truthful`.
double utility_under_report(const AuctionParams& params,
                            const ValuationProfile& truthful, int bidder,
                            const std::vector<double>& reported_row);

// Revenue of every auction on every profile;
// result[a][p] = revenue of auctions[a] on profiles[p].
std::vector<std::vector<double>> revenue_matrix(
    const std::vector<AuctionParams>& auctions,
    const std::vector<ValuationProfile>& profiles);

}  // namespace amd
