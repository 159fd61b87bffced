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
#include <string>
#include <utility>
#include <vector>

#include "amd/engine.hpp"
#include "amd/sampling.hpp"

namespace amd {

struct AxisInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct LocalSearchSpec {
  int restarts = 8;
  double initial_step = 0.25;  // fraction of each axis width
  double shrink = 0.5;
  double min_step = 1e-9;
};

// Declarative description of a parameter-space search. Which boxes and
// patterns apply depends on auction_class:
//   "mba"    — one axis, the discount c over c_box.
//   "mbarp"  — c over c_box plus one reserve axis per item over reserve_box.
//   "lambda" — one boost axis per boost_pattern entry over boost_box.
//   "ama"    — n weight axes over weight_box, then boost axes as above.
//   "vvca"   — n weight axes, then one axis per vvca_pattern (bidder,
//              bundle) entry over boost_box.
struct SearchConfig {
  std::string auction_class;
  AxisInterval c_box{0.0, 0.0};
  AxisInterval reserve_box{0.0, 0.0};
  AxisInterval weight_box{1.0, 1.0};
  AxisInterval boost_box{0.0, 0.0};
  // Allocation indices whose boost is searched (lambda/ama).
  std::vector<std::uint64_t> boost_pattern;
  // (bidder 1..n, bundle id) whose per-bidder boost is searched (vvca).
  std::vector<std::pair<int, std::uint32_t>> vvca_pattern;
  // Grid cells per axis; a grid places resolution+1 points on each axis.
  int resolution = 2;
  LocalSearchSpec local;
  std::uint64_t seed = 0;
  bool keep_trace = false;
  // Explicit local-search starting points (full coordinate vectors),
  // visited before the seeded random restarts.
  std::vector<std::vector<double>> extra_starts;
};

struct TracePoint {
  std::vector<double> point;
  double value = 0.0;
};

struct SearchResult {
  AuctionParams best;
  std::vector<double> best_point;  // coordinates that produced `best`
  double mean_revenue = 0.0;
  std::uint64_t evaluations = 0;
  std::vector<TracePoint> trace;  // filled when keep_trace
};

// Mean engine revenue over the sample, in sample order.
double empirical_revenue(const AuctionParams& params,
                         const std::vector<ValuationProfile>& sample);

// Reasonable default boxes for a sample: c and boosts up to n times the
// largest value in the sample, reserves up to the largest value.
SearchConfig default_search_config(const std::string& auction_class,
                                   const std::vector<ValuationProfile>& sample);

// Evaluates every vertex of the axis-aligned grid and returns the first
// maximizer in lexicographic vertex order (axis 0 most significant).
// Grid points on [lo, hi] at resolution r are lo + (i*(hi-lo))/r; doubling
// r keeps every existing point bit-identical, so a finer grid never
// returns a smaller value.
SearchResult grid_search(const SearchConfig& config,
                         const std::vector<ValuationProfile>& sample);

// Multi-restart coordinate ascent over (c, reserves), exploiting that
// mean revenue is piecewise linear in these coordinates. Deterministic:
// restart k draws its start from (seed, k).
SearchResult local_search_mbarp(const SearchConfig& config,
                                const std::vector<ValuationProfile>& sample);

}  // namespace amd
