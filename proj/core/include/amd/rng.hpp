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
#include <limits>
#include <random>

namespace amd {

namespace detail {
// One round of the splitmix64 output function. Good avalanche, cheap, and
// stable across platforms.
inline constexpr std::uint64_t splitmix_round(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}
}  // namespace detail

// Derives an independent child seed from (seed, tag). Every randomized
// routine gives each logical unit of work (a sample index, a trial, a
// restart) its own derived seed, so results never depend on evaluation
// order, worker count, or how much randomness earlier units consumed.
inline constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  return detail::splitmix_round(detail::splitmix_round(seed) ^
                                detail::splitmix_round(~tag));
}

// Thin deterministic wrapper around mt19937_64. All draws go through the
// fixed mappings below — never through std::uniform_*_distribution, whose
// output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform double in [0, 1), 53 random bits.
  double u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Uniform integer in [0, bound); bound must be positive. Rejection
  // sampling keeps the draw exactly uniform for every bound.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    for (;;) {
      const std::uint64_t x = gen_();
      if (x < limit) return x % bound;
    }
  }

  // Fair coin from the top bit.
  bool coin() { return (gen_() >> 63) != 0; }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace amd
