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

#include "amd/allocation.hpp"

#include <string>

namespace amd {

namespace {

void check_bidder_count(int n) {
  if (n < 1) {
    throw ValidationError("bidder count n must be at least 1, got " +
                          std::to_string(n));
  }
}

}  // namespace

std::uint64_t allocation_count(int n, int m) {
  check_bidder_count(n);
  check_item_count(m);
  const std::uint64_t base = static_cast<std::uint64_t>(n) + 1;
  std::uint64_t total = 1;
  for (int j = 0; j < m; ++j) {
    if (total > kMaxAllocations / base) {
      throw CapacityError("allocation space (n+1)^m exceeds " +
                          std::to_string(kMaxAllocations) + " for n=" +
                          std::to_string(n) + ", m=" + std::to_string(m));
    }
    total *= base;
  }
  if (total > kMaxAllocations) {
    throw CapacityError("allocation space (n+1)^m exceeds " +
                        std::to_string(kMaxAllocations) + " for n=" +
                        std::to_string(n) + ", m=" + std::to_string(m));
  }
  return total;
}

std::uint64_t allocation_index(const Allocation& a, int n) {
  check_bidder_count(n);
  check_item_count(a.items());
  const std::uint64_t base = static_cast<std::uint64_t>(n) + 1;
  std::uint64_t index = 0;
  std::uint64_t place = 1;
  for (int j = 0; j < a.items(); ++j) {
    const std::uint8_t who = a.assignee[static_cast<std::size_t>(j)];
    if (who > n) {
      throw ValidationError("item " + std::to_string(j) + " assigned to " +
                            std::to_string(int{who}) + " but n=" +
                            std::to_string(n));
    }
    index += place * who;
    place *= base;
  }
  return index;
}

Allocation allocation_from_index(std::uint64_t index, int n, int m) {
  const std::uint64_t total = allocation_count(n, m);
  if (index >= total) {
    throw ValidationError("allocation index " + std::to_string(index) +
                          " out of range [0, " + std::to_string(total) + ")");
  }
  const std::uint64_t base = static_cast<std::uint64_t>(n) + 1;
  Allocation a;
  a.assignee.resize(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    a.assignee[static_cast<std::size_t>(j)] =
        static_cast<std::uint8_t>(index % base);
    index /= base;
  }
  return a;
}

BundleId bundle_of(const Allocation& a, int agent) {
  BundleId b = 0;
  for (int j = 0; j < a.items(); ++j) {
    if (a.assignee[static_cast<std::size_t>(j)] == agent) {
      b |= BundleId{1} << j;
    }
  }
  return b;
}

}  // namespace amd
