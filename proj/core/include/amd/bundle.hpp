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

#include <bit>
#include <cstdint>
#include <vector>

#include "amd/errors.hpp"

namespace amd {

// A bundle is a subset of the m items, encoded as a bitmask with item j on
// bit j. Bundle ids therefore run over 0 .. 2^m - 1, with 0 the empty
// bundle and 2^m - 1 the grand bundle.
using BundleId = std::uint32_t;

// Items are indexed 0 .. m - 1. Twenty items keeps every dense per-bundle
// table at or under 2^20 entries.
inline constexpr int kMaxItems = 20;

// Throws ValidationError unless 1 <= m <= kMaxItems.
inline void check_item_count(int m) {
  if (m < 1 || m > kMaxItems) {
    throw ValidationError("item count m must be in [1, " +
                          std::to_string(kMaxItems) + "], got " +
                          std::to_string(m));
  }
}

constexpr BundleId grand_bundle(int m) {
  return (BundleId{1} << m) - BundleId{1};
}

constexpr int bundle_size(BundleId b) { return std::popcount(b); }

constexpr bool bundle_contains(BundleId b, int item) {
  return (b >> item) & BundleId{1};
}

constexpr BundleId bundle_complement(BundleId b, int m) {
  return grand_bundle(m) & ~b;
}

// Ascending list of item indices contained in b.
inline std::vector<int> bundle_items(BundleId b) {
  std::vector<int> items;
  items.reserve(static_cast<std::size_t>(bundle_size(b)));
  for (int j = 0; b >> j; ++j) {
    if (bundle_contains(b, j)) items.push_back(j);
  }
  return items;
}

// Inverse of bundle_items. Rejects out-of-range or repeated items.
inline BundleId bundle_from_items(const std::vector<int>& items, int m) {
  check_item_count(m);
  BundleId b = 0;
  for (int item : items) {
    if (item < 0 || item >= m) {
      throw ValidationError("item index " + std::to_string(item) +
                            " out of range for m=" + std::to_string(m));
    }
    if (bundle_contains(b, item)) {
      throw ValidationError("item index " + std::to_string(item) +
                            " listed twice");
    }
    b |= BundleId{1} << item;
  }
  return b;
}

}  // namespace amd
