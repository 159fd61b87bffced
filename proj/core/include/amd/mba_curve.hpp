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

#include <vector>

#include "amd/valuation.hpp"

namespace amd {

// One linear piece of the revenue curve: value(c) = intercept + slope * c
// on [lo, hi). The last segment has hi = +infinity.
struct CurveSegment {
  double lo = 0.0;
  double hi = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
};

// Closed form of c -> revenue of the grand-bundle-discount auction on one
// fixed profile. Piecewise linear: nondecreasing up to the point where the
// grand-bundle branch takes over, nonincreasing after, with at most one
// (downward) jump located exactly there.
//
// The curve matches the engine pointwise, including at the jump: the
// engine's tie-break keeps the welfare-maximal allocation when the boosted
// objectives tie, so the value AT the jump is the left limit, and
// `value_after_jump` records the right limit for reporting.
struct MbaRevenueCurve {
  int n = 0;
  int m = 0;
  // Best unboosted welfare over all allocations and the best single-bidder
  // grand-bundle value; the jump sits at their difference.
  double max_welfare = 0.0;
  double best_grand = 0.0;
  double jump_at = 0.0;  // max_welfare - best_grand, always >= 0
  // Per bidder i: welfare_without[i] = best welfare with i's value dropped;
  // grand_without[i] = best grand-bundle value among the others (0 for
  // n = 1). breakpoints[i] = welfare_without[i] - grand_without[i]; a
  // nonpositive breakpoint means bidder i's grand branch is active from 0.
  std::vector<double> welfare_without;
  std::vector<double> grand_without;
  std::vector<double> breakpoints;
  std::vector<CurveSegment> segments;  // tile [0, inf), ascending
  double value_after_jump = 0.0;       // right limit at jump_at
};

MbaRevenueCurve build_mba_curve(const ValuationProfile& profile);

// Revenue at discount c >= 0 (c < 0 rejected). Exactly the engine's
// revenue up to float roundoff.
double eval_mba_curve(const MbaRevenueCurve& curve, double c);

struct MbaOptimum {
  double c = 0.0;
  double value = 0.0;
  // False when the winning candidate is one of the just-left-of-a-
  // breakpoint probes, signaling an open-interval supremum. Under the
  // engine's tie-break the curve carries its left limit at every jump, so
  // in practice the probes never win and this stays true.
  bool attained = true;
};

// Exact maximizer of mean curve value over [0, c_max] for a set of
// profiles. Candidates: 0, c_max, every (clamped) breakpoint and jump
// point of every curve, and just-left probes bp - max(1e-9, 1e-9*bp).
// Ties prefer attained candidates, then the smallest c.
MbaOptimum optimize_mba(const std::vector<ValuationProfile>& profiles,
                        double c_max);

}  // namespace amd
