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
#include <variant>
#include <vector>

#include "amd/valuation.hpp"

namespace amd {

// Each bidder draws m independent per-item values uniformly from
// [0, item_ceiling] and values bundles additively.
struct IidUniformAdditive {
  int n = 0;
  int m = 0;
  double item_ceiling = 1.0;
};

// Uniform draw from an explicit finite set of profiles (with replacement).
struct UniformFiniteSet {
  std::vector<ValuationProfile> profiles;
};

// Degenerate distribution: every draw is this profile.
struct PointMass {
  ValuationProfile profile;
};

struct ProfileDistribution {
  std::variant<IidUniformAdditive, UniformFiniteSet, PointMass> kind;
  std::uint64_t seed = 0;
};

// A materialized sample, carrying the seed that produced it so downstream
// reports can cite it.
struct SampleSet {
  std::uint64_t seed = 0;
  std::vector<ValuationProfile> profiles;
};

void validate_distribution(const ProfileDistribution& dist);

// Draws `count` profiles. Sample k is a pure function of (seed, k): the
// sequence for a larger count extends the sequence for a smaller one.
SampleSet sample_profiles(const ProfileDistribution& dist, int count);

// Same, with the distribution's own seed overridden.
SampleSet sample_profiles(const ProfileDistribution& dist, int count,
                          std::uint64_t seed);

}  // namespace amd
