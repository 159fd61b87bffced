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

#include "amd/bundle.hpp"
#include "amd/errors.hpp"

namespace amd {

// Hard cap on the number of allocations (n+1)^m any enumeration is allowed
// to touch. Requests above this raise CapacityError.
inline constexpr std::uint64_t kMaxAllocations = std::uint64_t{1} << 20;

// An allocation assigns each item to one of the n bidders (1..n) or leaves
// it unallocated (0, read: kept by the seller).
struct Allocation {
  std::vector<std::uint8_t> assignee;  // one entry per item, in 0..n

  int items() const { return static_cast<int>(assignee.size()); }
};

// (n+1)^m, after validating n, m and the kMaxAllocations budget.
std::uint64_t allocation_count(int n, int m);

// Mixed-radix rank of an allocation: sum over items of assignee[j]*(n+1)^j,
// item 0 in the least significant position. This is the canonical order
// every enumeration and every boost table index uses.
std::uint64_t allocation_index(const Allocation& a, int n);

Allocation allocation_from_index(std::uint64_t index, int n, int m);

// Bitmask of the items held by `agent` (0 = seller, 1..n = bidders).
BundleId bundle_of(const Allocation& a, int agent);

// Visits all (n+1)^m allocations in ascending index order. `fn` receives
// (const Allocation&, std::uint64_t index); the Allocation reference is
// reused between calls, so copy it if you need to keep it.
template <typename Fn>
void for_each_allocation(int n, int m, Fn&& fn) {
  const std::uint64_t total = allocation_count(n, m);
  Allocation a;
  a.assignee.assign(static_cast<std::size_t>(m), 0);
  for (std::uint64_t index = 0;; ++index) {
    fn(static_cast<const Allocation&>(a), index);
    if (index + 1 == total) break;
    // Odometer increment, least significant item first.
    for (int j = 0; j < m; ++j) {
      if (a.assignee[static_cast<std::size_t>(j)] <
          static_cast<std::uint8_t>(n)) {
        ++a.assignee[static_cast<std::size_t>(j)];
        break;
      }
      a.assignee[static_cast<std::size_t>(j)] = 0;
    }
  }
}

}  // namespace amd
