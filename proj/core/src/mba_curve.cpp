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

#include "amd/mba_curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "amd/allocation.hpp"
#include "amd/errors.hpp"

namespace amd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Value of the winning bidder-dropped objective as a function of c:
// max(welfare_without[i], grand_without[i] + c), switching branches at
// breakpoints[i].
bool grand_branch_active(const MbaRevenueCurve& curve, int i, double seg_lo) {
  return curve.breakpoints[static_cast<std::size_t>(i)] <= seg_lo;
}

}  // namespace

MbaRevenueCurve build_mba_curve(const ValuationProfile& profile) {
  validate_profile(profile);
  const int n = profile.n;
  const int m = profile.m;
  const BundleId grand = grand_bundle(m);

  MbaRevenueCurve curve;
  curve.n = n;
  curve.m = m;
  curve.welfare_without.assign(static_cast<std::size_t>(n), 0.0);
  curve.grand_without.assign(static_cast<std::size_t>(n), 0.0);

  // One exhaustive pass collects the best welfare overall and with each
  // bidder's value dropped. The drop uses the same subtraction the engine
  // performs, so the two agree to the last bit on designed ties.
  std::vector<BundleId> bundles(static_cast<std::size_t>(n) + 1);
  std::vector<double> own(static_cast<std::size_t>(n));
  bool have = false;
  for_each_allocation(n, m, [&](const Allocation& a, std::uint64_t) {
    for (auto& b : bundles) b = 0;
    for (int j = 0; j < m; ++j) {
      bundles[a.assignee[static_cast<std::size_t>(j)]] |= BundleId{1} << j;
    }
    double welfare = 0.0;
    for (int i = 1; i <= n; ++i) {
      const double v =
          1.0 * profile.value(i, bundles[static_cast<std::size_t>(i)]);
      own[static_cast<std::size_t>(i - 1)] = v;
      welfare += v;
    }
    if (!have || welfare > curve.max_welfare) curve.max_welfare = welfare;
    for (int i = 0; i < n; ++i) {
      const double dropped = welfare - own[static_cast<std::size_t>(i)];
      if (!have || dropped > curve.welfare_without[static_cast<std::size_t>(i)]) {
        curve.welfare_without[static_cast<std::size_t>(i)] = dropped;
      }
    }
    have = true;
  });

  for (int k = 1; k <= n; ++k) {
    const double g = profile.value(k, grand);
    curve.best_grand = std::max(curve.best_grand, g);
    for (int i = 0; i < n; ++i) {
      if (i != k - 1) {
        curve.grand_without[static_cast<std::size_t>(i)] =
            std::max(curve.grand_without[static_cast<std::size_t>(i)], g);
      }
    }
  }
  curve.jump_at = curve.max_welfare - curve.best_grand;

  curve.breakpoints.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    curve.breakpoints[static_cast<std::size_t>(i)] =
        curve.welfare_without[static_cast<std::size_t>(i)] -
        curve.grand_without[static_cast<std::size_t>(i)];
  }

  // Segment boundaries: 0, every positive breakpoint, the jump point.
  std::vector<double> knots;
  for (double b : curve.breakpoints) {
    if (b > 0.0) knots.push_back(b);
  }
  if (curve.jump_at > 0.0) knots.push_back(curve.jump_at);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  std::vector<double> bounds;
  bounds.push_back(0.0);
  bounds.insert(bounds.end(), knots.begin(), knots.end());
  bounds.push_back(kInf);

  for (std::size_t t = 0; t + 1 < bounds.size(); ++t) {
    const double lo = bounds[t];
    CurveSegment seg;
    seg.lo = lo;
    seg.hi = bounds[t + 1];
    // With no positive jump point the grand branch governs everywhere
    // (max_welfare == best_grand makes the two writings coincide at c=0).
    const bool past_jump = lo >= curve.jump_at;
    int active = 0;
    double intercept = 0.0;
    for (int i = 0; i < n; ++i) {
      if (grand_branch_active(curve, i, lo)) {
        ++active;
        intercept += curve.grand_without[static_cast<std::size_t>(i)];
      } else {
        intercept += curve.welfare_without[static_cast<std::size_t>(i)];
      }
    }
    const double base = past_jump ? curve.best_grand : curve.max_welfare;
    intercept += (1.0 - n) * base;
    seg.slope = active - (past_jump ? n : 0);
    seg.intercept = intercept;
    curve.segments.push_back(seg);
  }

  // Right limit at the jump: the segment that STARTS there, evaluated
  // there. The jump point is always a segment boundary (0 when there is
  // no jump), so the loop always finds one.
  for (const auto& seg : curve.segments) {
    if (seg.lo == curve.jump_at) {
      curve.value_after_jump = seg.intercept + seg.slope * curve.jump_at;
      break;
    }
  }
  return curve;
}

double eval_mba_curve(const MbaRevenueCurve& curve, double c) {
  if (!(c >= 0.0)) {
    throw ValidationError("curve evaluation needs c >= 0, got " +
                          std::to_string(c));
  }
  // At the jump the engine's tie-break keeps the welfare-maximal
  // allocation, so the curve takes its left value: evaluate the segment
  // that ENDS there.
  if (curve.jump_at > 0.0 && c == curve.jump_at) {
    for (const auto& seg : curve.segments) {
      if (seg.hi == c) return seg.intercept + seg.slope * c;
    }
  }
  for (const auto& seg : curve.segments) {
    if (seg.lo <= c && c < seg.hi) return seg.intercept + seg.slope * c;
  }
  throw ValidationError("curve segments do not cover c=" + std::to_string(c));
}

MbaOptimum optimize_mba(const std::vector<ValuationProfile>& profiles,
                        double c_max) {
  if (profiles.empty()) {
    throw ValidationError("optimizer needs at least one profile");
  }
  if (!(c_max >= 0.0)) {
    throw ValidationError("c_max must be >= 0, got " + std::to_string(c_max));
  }

  std::vector<MbaRevenueCurve> curves;
  curves.reserve(profiles.size());
  for (const auto& p : profiles) curves.push_back(build_mba_curve(p));

  // Candidate c values: box ends, every breakpoint/jump of every curve,
  // and a probe just left of each in case a maximum lives at the open end
  // of a segment. Sorting (c, probe-after-exact) makes the scan prefer
  // exact candidates and smaller c on value ties.
  std::vector<std::pair<double, bool>> candidates;  // (c, is_probe)
  auto add = [&](double c, bool probe) {
    if (c >= 0.0 && c <= c_max) candidates.emplace_back(c, probe);
  };
  add(0.0, false);
  add(c_max, false);
  for (const auto& curve : curves) {
    std::vector<double> marks = curve.breakpoints;
    marks.push_back(curve.jump_at);
    for (double x : marks) {
      if (x <= 0.0) continue;
      add(x, false);
      const double eps = std::max(1e-9, 1e-9 * x);
      add(x - eps, true);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  MbaOptimum best;
  bool have = false;
  for (const auto& [c, probe] : candidates) {
    double sum = 0.0;
    for (const auto& curve : curves) sum += eval_mba_curve(curve, c);
    const double value = sum / static_cast<double>(profiles.size());
    if (!have || value > best.value) {
      best.c = c;
      best.value = value;
      best.attained = !probe;
      have = true;
    }
  }
  return best;
}

}  // namespace amd
