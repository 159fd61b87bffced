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

#include <optional>
#include <vector>

#include "amd/bundle.hpp"

namespace amd {

// Reported valuations for one auction instance: a dense table with one row
// per bidder and one entry per bundle id. Rows are stored for bidders
// 1..n at positions 0..n-1; entry 0 of every row (the empty bundle) is 0.
//
// Values are free-form nonnegative reals; no monotonicity is assumed
// anywhere, so "worth less with more items" tables are legal inputs.
struct ValuationProfile {
  int n = 0;
  int m = 0;
  std::vector<std::vector<double>> values;
  // Declared ceiling on any bundle value, when the producer knows one.
  std::optional<double> h_v;

  // Value bidder (1-based) places on bundle b.
  double value(int bidder, BundleId b) const {
    return values[static_cast<std::size_t>(bidder - 1)]
                 [static_cast<std::size_t>(b)];
  }

  // Largest entry in the table; 0 for an all-zero profile.
  double max_value() const;
};

// Validates and packs a dense table. `values` must have n rows of 2^m
// entries each, all finite and >= 0, with entry 0 equal to 0.
ValuationProfile make_profile(int n, int m,
                              std::vector<std::vector<double>> values,
                              std::optional<double> h_v = std::nullopt);

// Expands per-item values into a dense additive table: row i of
// `item_values` has m entries and v_i(b) = sum of item values inside b.
ValuationProfile make_additive_profile(
    int n, int m, const std::vector<std::vector<double>>& item_values,
    std::optional<double> h_v = std::nullopt);

// Structural checks for a profile that arrived from outside (wire formats,
// hand-built tables). Throws ValidationError on the first defect.
void validate_profile(const ValuationProfile& profile);

}  // namespace amd
