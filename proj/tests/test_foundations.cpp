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

#include <atomic>
#include <cstdint>
#include <vector>

#include "doctest.h"

#include "amd/allocation.hpp"
#include "amd/bundle.hpp"
#include "amd/errors.hpp"
#include "amd/parallel.hpp"
#include "amd/rng.hpp"

namespace {

using namespace amd;

TEST_CASE("bundle bit encoding") {
  CHECK(grand_bundle(1) == 1u);
  CHECK(grand_bundle(3) == 7u);
  CHECK(bundle_size(0u) == 0);
  CHECK(bundle_size(grand_bundle(4)) == 4);
  CHECK(bundle_contains(5u, 0));
  CHECK_FALSE(bundle_contains(5u, 1));
  CHECK(bundle_contains(5u, 2));
  CHECK(bundle_complement(5u, 3) == 2u);

  CHECK(bundle_from_items({0, 2}, 3) == 5u);
  CHECK(bundle_items(5u) == std::vector<int>{0, 2});
  CHECK(bundle_from_items({}, 2) == 0u);
  CHECK_THROWS_AS((void)bundle_from_items({3}, 3), ValidationError);
  CHECK_THROWS_AS((void)bundle_from_items({1, 1}, 3), ValidationError);
  CHECK_THROWS_AS(check_item_count(0), ValidationError);
  CHECK_THROWS_AS(check_item_count(21), ValidationError);
}

TEST_CASE("allocation enumeration order and ranks") {
  CHECK(allocation_count(2, 2) == 9);
  CHECK(allocation_count(1, 3) == 8);

  // (n+1)^m above the enumeration budget must be rejected up front.
  CHECK_THROWS_AS((void)allocation_count(3, 13), CapacityError);
  CHECK_THROWS_AS((void)allocation_count(0, 2), ValidationError);

  std::vector<std::vector<std::uint8_t>> seen;
  for_each_allocation(2, 2, [&](const Allocation& a, std::uint64_t index) {
    CHECK(index == seen.size());
    CHECK(allocation_index(a, 2) == index);
    seen.push_back(a.assignee);
    const Allocation back = allocation_from_index(index, 2, 2);
    CHECK(back.assignee == a.assignee);
  });
  REQUIRE(seen.size() == 9);
  // Item 0 is the least significant digit.
  CHECK(seen[0] == std::vector<std::uint8_t>{0, 0});
  CHECK(seen[1] == std::vector<std::uint8_t>{1, 0});
  CHECK(seen[2] == std::vector<std::uint8_t>{2, 0});
  CHECK(seen[3] == std::vector<std::uint8_t>{0, 1});
  CHECK(seen[8] == std::vector<std::uint8_t>{2, 2});
}

TEST_CASE("bundle_of inverts an allocation per agent") {
  Allocation a;
  a.assignee = {1, 0, 2, 1};
  CHECK(bundle_of(a, 1) == 0b1001u);
  CHECK(bundle_of(a, 2) == 0b0100u);
  CHECK(bundle_of(a, 0) == 0b0010u);
  CHECK(bundle_of(a, 3) == 0u);
}

TEST_CASE("seed mixing decorrelates tags") {
  CHECK(mix_seed(0, 0) != mix_seed(0, 1));
  CHECK(mix_seed(0, 0) != mix_seed(1, 0));
  CHECK(mix_seed(42, 7) == mix_seed(42, 7));
}

TEST_CASE("rng draws stay in range and are reproducible") {
  Rng a(123), b(123);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.u01();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CHECK(x == b.u01());
  }
  Rng c(5);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t v = c.below(7);
    CHECK(v < 7);
  }
  Rng d(9);
  const double y = d.uniform(2.0, 3.0);
  CHECK(y >= 2.0);
  CHECK(y < 3.0);
}

TEST_CASE("parallel_for covers every index exactly once") {
  for (int cap : {1, 3, 0}) {
    set_max_threads(cap);
    std::vector<std::atomic<int>> hits(257);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
    for (auto& h : hits) CHECK(h.load() == 1);
  }
  set_max_threads(0);
}

TEST_CASE("parallel_for propagates the first exception") {
  set_max_threads(2);
  CHECK_THROWS_AS(
      parallel_for(64,
                   [](std::size_t i) {
                     if (i == 13) throw ValidationError("boom");
                   }),
      ValidationError);
  set_max_threads(0);
}

}  // namespace
