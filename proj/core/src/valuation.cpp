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

#include "amd/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "amd/errors.hpp"

namespace amd {

double ValuationProfile::max_value() const {
  double best = 0.0;
  for (const auto& row : values) {
    for (double v : row) best = std::max(best, v);
  }
  return best;
}

ValuationProfile make_profile(int n, int m,
                              std::vector<std::vector<double>> values,
                              std::optional<double> h_v) {
  ValuationProfile profile;
  profile.n = n;
  profile.m = m;
  profile.values = std::move(values);
  profile.h_v = h_v;
  validate_profile(profile);
  return profile;
}

ValuationProfile make_additive_profile(
    int n, int m, const std::vector<std::vector<double>>& item_values,
    std::optional<double> h_v) {
  check_item_count(m);
  if (n < 1) {
    throw ValidationError("bidder count n must be at least 1, got " +
                          std::to_string(n));
  }
  if (static_cast<int>(item_values.size()) != n) {
    throw ValidationError("expected " + std::to_string(n) +
                          " item-value rows, got " +
                          std::to_string(item_values.size()));
  }
  const std::size_t table_size = std::size_t{1} << m;
  std::vector<std::vector<double>> values(
      static_cast<std::size_t>(n), std::vector<double>(table_size, 0.0));
  for (int i = 0; i < n; ++i) {
    const auto& row = item_values[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != m) {
      throw ValidationError("item-value row " + std::to_string(i) + " has " +
                            std::to_string(row.size()) + " entries, expected " +
                            std::to_string(m));
    }
    auto& table = values[static_cast<std::size_t>(i)];
    // v(b) = v(b without top item) + value of top item; fills in id order so
    // the smaller bundle is always ready first.
    for (std::size_t b = 1; b < table_size; ++b) {
      const int top = std::bit_width(static_cast<std::uint32_t>(b)) - 1;
      table[b] = table[b & ~(std::size_t{1} << top)] +
                 row[static_cast<std::size_t>(top)];
    }
  }
  return make_profile(n, m, std::move(values), h_v);
}

void validate_profile(const ValuationProfile& profile) {
  if (profile.n < 1) {
    throw ValidationError("bidder count n must be at least 1, got " +
                          std::to_string(profile.n));
  }
  check_item_count(profile.m);
  const std::size_t table_size = std::size_t{1} << profile.m;
  if (static_cast<int>(profile.values.size()) != profile.n) {
    throw ValidationError("expected " + std::to_string(profile.n) +
                          " valuation rows, got " +
                          std::to_string(profile.values.size()));
  }
  for (int i = 0; i < profile.n; ++i) {
    const auto& row = profile.values[static_cast<std::size_t>(i)];
    if (row.size() != table_size) {
      throw ValidationError("valuation row for bidder " + std::to_string(i + 1) +
                            " has " + std::to_string(row.size()) +
                            " entries, expected 2^m = " +
                            std::to_string(table_size));
    }
    if (row[0] != 0.0) {
      throw ValidationError("bidder " + std::to_string(i + 1) +
                            " values the empty bundle at " +
                            std::to_string(row[0]) + "; must be 0");
    }
    for (std::size_t b = 0; b < table_size; ++b) {
      const double v = row[b];
      if (!std::isfinite(v) || v < 0.0) {
        throw ValidationError("bidder " + std::to_string(i + 1) +
                              " has invalid value at bundle " +
                              std::to_string(b) +
                              "; values must be finite and >= 0");
      }
    }
  }
  if (profile.h_v) {
    if (!std::isfinite(*profile.h_v) || *profile.h_v < 0.0) {
      throw ValidationError("declared value ceiling must be finite and >= 0");
    }
    if (profile.max_value() > *profile.h_v) {
      throw ValidationError("profile exceeds its declared value ceiling");
    }
  }
}

}  // namespace amd
