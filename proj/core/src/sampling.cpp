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

#include "amd/sampling.hpp"

#include <cmath>
#include <string>

#include "amd/errors.hpp"
#include "amd/rng.hpp"

namespace amd {

namespace {

ValuationProfile draw_one(const ProfileDistribution& dist, std::uint64_t seed,
                         std::uint64_t k) {
  Rng rng(mix_seed(seed, k));
  if (const auto* iid = std::get_if<IidUniformAdditive>(&dist.kind)) {
    std::vector<std::vector<double>> item_values(
        static_cast<std::size_t>(iid->n),
        std::vector<double>(static_cast<std::size_t>(iid->m), 0.0));
    // Fixed draw order: bidder-major, item-minor.
    for (auto& row : item_values) {
      for (auto& v : row) v = rng.uniform(0.0, iid->item_ceiling);
    }
    return make_additive_profile(iid->n, iid->m, item_values,
                                 iid->item_ceiling * iid->m);
  }
  if (const auto* finite = std::get_if<UniformFiniteSet>(&dist.kind)) {
    return finite->profiles[rng.below(finite->profiles.size())];
  }
  return std::get<PointMass>(dist.kind).profile;
}

}  // namespace

void validate_distribution(const ProfileDistribution& dist) {
  if (const auto* iid = std::get_if<IidUniformAdditive>(&dist.kind)) {
    if (iid->n < 1) {
      throw ValidationError("distribution needs at least 1 bidder, got " +
                            std::to_string(iid->n));
    }
    check_item_count(iid->m);
    if (!std::isfinite(iid->item_ceiling) || iid->item_ceiling < 0.0) {
      throw ValidationError("item ceiling must be finite and >= 0");
    }
    return;
  }
  if (const auto* finite = std::get_if<UniformFiniteSet>(&dist.kind)) {
    if (finite->profiles.empty()) {
      throw ValidationError("finite-set distribution needs at least one profile");
    }
    for (const auto& p : finite->profiles) validate_profile(p);
    const int n = finite->profiles.front().n;
    const int m = finite->profiles.front().m;
    for (const auto& p : finite->profiles) {
      if (p.n != n || p.m != m) {
        throw ValidationError(
            "finite-set distribution mixes profile shapes; all draws must "
            "share (n, m)");
      }
    }
    return;
  }
  validate_profile(std::get<PointMass>(dist.kind).profile);
}

SampleSet sample_profiles(const ProfileDistribution& dist, int count,
                          std::uint64_t seed) {
  validate_distribution(dist);
  if (count < 0) {
    throw ValidationError("sample count must be >= 0, got " +
                          std::to_string(count));
  }
  SampleSet out;
  out.seed = seed;
  out.profiles.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    out.profiles.push_back(draw_one(dist, seed, static_cast<std::uint64_t>(k)));
  }
  return out;
}

SampleSet sample_profiles(const ProfileDistribution& dist, int count) {
  return sample_profiles(dist, count, dist.seed);
}

}  // namespace amd
