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
#include <utility>
#include <variant>
#include <vector>

#include "amd/allocation.hpp"
#include "amd/errors.hpp"

namespace amd {

// Additive bonus attached to whole allocations, keyed by allocation index.
// Small spaces store a dense table; larger ones a sorted sparse list with
// an implicit 0 everywhere else.
class BoostMap {
 public:
  // Largest allocation space a dense table may cover.
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 16;

  static BoostMap zero() { return BoostMap{}; }
  static BoostMap dense(std::vector<double> values);
  // Entries are (allocation index, boost); sorted on construction.
  // Duplicate indices are rejected.
  static BoostMap sparse(std::vector<std::pair<std::uint64_t, double>> entries);

  double at(std::uint64_t index) const;
  bool is_dense() const { return dense_; }
  const std::vector<double>& dense_values() const { return values_; }
  const std::vector<std::pair<std::uint64_t, double>>& sparse_entries() const {
    return entries_;
  }

  // Largest stored boost, floored at 0 (the implicit sparse default).
  double max_boost() const;

  // Checks finiteness and that indices fit the given allocation space.
  void validate(std::uint64_t allocation_count) const;

 private:
  bool dense_ = false;
  std::vector<double> values_;
  std::vector<std::pair<std::uint64_t, double>> entries_;
};

// w-weighted welfare plus an arbitrary allocation boost. The base class of
// everything below; weights all 1 and no boosts is plain VCG.
struct GeneralAma {
  std::vector<double> weights;  // one per bidder, > 0
  BoostMap boosts;
};

// Boost decomposes per bidder and depends only on that bidder's bundle:
// the table c has one row per bidder and one column per bundle id.
struct Vvca {
  std::vector<double> weights;
  std::vector<std::vector<double>> c;
};

// Unweighted welfare plus an allocation boost.
struct LambdaAuction {
  BoostMap boosts;
};

// Unweighted welfare plus a bonus of c when some single bidder takes the
// whole item set.
struct Mba {
  double c = 0.0;
};

// Mba in the presence of a seller who keeps unallocated items and values
// them by additive per-item reserves. The seller participates in the
// objective but never pays and is never removed.
struct Mbarp {
  double c = 0.0;
  std::vector<double> reserves;  // one per item, >= 0
};

using AuctionParams = std::variant<GeneralAma, Vvca, LambdaAuction, Mba, Mbarp>;

// Stable lowercase class tag used in wire formats and reports.
const char* auction_class_name(const AuctionParams& params);

// Structural validation against an instance shape. Throws ValidationError.
void validate_auction(const AuctionParams& params, int n, int m);

// Value-only validation for when the market shape is not known yet (e.g.
// right after parsing); shape checks happen again at evaluation time.
void validate_auction(const AuctionParams& params);

// Rewrites vvca / lambda / mba parameters as an equivalent GeneralAma.
// Mbarp is not expressible this way (the seller changes the mechanics)
// and is rejected with ValidationError.
GeneralAma lower_to_general(const AuctionParams& params, int n, int m);

}  // namespace amd
