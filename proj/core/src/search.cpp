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

#include "amd/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "amd/errors.hpp"
#include "amd/parallel.hpp"
#include "amd/rng.hpp"

namespace amd {

namespace {

constexpr std::uint64_t kMaxGridVertices = 10'000'000;

void check_interval(const AxisInterval& box, const char* name,
                    bool positive_lo = false) {
  if (!std::isfinite(box.lo) || !std::isfinite(box.hi) || box.lo > box.hi) {
    throw ValidationError(std::string(name) + " box is empty or not finite");
  }
  if (positive_lo && box.lo <= 0.0) {
    throw ValidationError(std::string(name) + " box must stay > 0");
  }
}

// A resolved search space: the axis intervals plus a builder turning a
// coordinate vector into auction parameters.
struct AxisSet {
  std::vector<AxisInterval> axes;
  std::function<AuctionParams(const std::vector<double>&)> build;
};

AxisSet make_axes(const SearchConfig& config, int n, int m) {
  const std::uint64_t count = allocation_count(n, m);
  AxisSet space;

  if (config.auction_class == "mba") {
    check_interval(config.c_box, "c");
    space.axes = {config.c_box};
    space.build = [](const std::vector<double>& t) {
      return AuctionParams{Mba{t[0]}};
    };
    return space;
  }

  if (config.auction_class == "mbarp") {
    check_interval(config.c_box, "c");
    check_interval(config.reserve_box, "reserve");
    space.axes.push_back(config.c_box);
    for (int j = 0; j < m; ++j) space.axes.push_back(config.reserve_box);
    space.build = [m](const std::vector<double>& t) {
      Mbarp params;
      params.c = t[0];
      params.reserves.assign(t.begin() + 1, t.end());
      return AuctionParams{std::move(params)};
    };
    return space;
  }

  if (config.auction_class == "lambda") {
    check_interval(config.boost_box, "boost");
    for (std::uint64_t idx : config.boost_pattern) {
      if (idx >= count) {
        throw ValidationError("boost pattern index " + std::to_string(idx) +
                              " outside the allocation space");
      }
    }
    space.axes.assign(config.boost_pattern.size(), config.boost_box);
    const auto pattern = config.boost_pattern;
    space.build = [pattern](const std::vector<double>& t) {
      std::vector<std::pair<std::uint64_t, double>> entries;
      entries.reserve(pattern.size());
      for (std::size_t i = 0; i < pattern.size(); ++i) {
        entries.emplace_back(pattern[i], t[i]);
      }
      return AuctionParams{LambdaAuction{BoostMap::sparse(std::move(entries))}};
    };
    return space;
  }

  if (config.auction_class == "ama") {
    check_interval(config.weight_box, "weight", /*positive_lo=*/true);
    check_interval(config.boost_box, "boost");
    for (std::uint64_t idx : config.boost_pattern) {
      if (idx >= count) {
        throw ValidationError("boost pattern index " + std::to_string(idx) +
                              " outside the allocation space");
      }
    }
    for (int i = 0; i < n; ++i) space.axes.push_back(config.weight_box);
    space.axes.insert(space.axes.end(), config.boost_pattern.size(),
                      config.boost_box);
    const auto pattern = config.boost_pattern;
    space.build = [pattern, n](const std::vector<double>& t) {
      GeneralAma params;
      params.weights.assign(t.begin(), t.begin() + n);
      std::vector<std::pair<std::uint64_t, double>> entries;
      entries.reserve(pattern.size());
      for (std::size_t i = 0; i < pattern.size(); ++i) {
        entries.emplace_back(pattern[i], t[static_cast<std::size_t>(n) + i]);
      }
      params.boosts = BoostMap::sparse(std::move(entries));
      return AuctionParams{std::move(params)};
    };
    return space;
  }

  if (config.auction_class == "vvca") {
    check_interval(config.weight_box, "weight", /*positive_lo=*/true);
    check_interval(config.boost_box, "boost");
    for (const auto& [bidder, bundle] : config.vvca_pattern) {
      if (bidder < 1 || bidder > n) {
        throw ValidationError("per-bidder boost pattern names bidder " +
                              std::to_string(bidder) + " outside [1, " +
                              std::to_string(n) + "]");
      }
      if (bundle >= (BundleId{1} << m)) {
        throw ValidationError("per-bidder boost pattern bundle out of range");
      }
    }
    for (int i = 0; i < n; ++i) space.axes.push_back(config.weight_box);
    space.axes.insert(space.axes.end(), config.vvca_pattern.size(),
                      config.boost_box);
    const auto pattern = config.vvca_pattern;
    space.build = [pattern, n, m](const std::vector<double>& t) {
      Vvca params;
      params.weights.assign(t.begin(), t.begin() + n);
      params.c.assign(static_cast<std::size_t>(n),
                      std::vector<double>(std::size_t{1} << m, 0.0));
      for (std::size_t i = 0; i < pattern.size(); ++i) {
        params.c[static_cast<std::size_t>(pattern[i].first - 1)]
                [pattern[i].second] = t[static_cast<std::size_t>(n) + i];
      }
      return AuctionParams{std::move(params)};
    };
    return space;
  }

  throw ValidationError("unknown auction class for search: '" +
                        config.auction_class + "'");
}

// Grid point i of r cells on [lo, hi]. This exact expression is load-
// bearing: evaluating it at (2i, 2r) yields the identical double, which
// is what makes resolution doubling a strict refinement.
double grid_point(const AxisInterval& box, int i, int r) {
  const double width = box.hi - box.lo;
  return box.lo + (static_cast<double>(i) * width) / static_cast<double>(r);
}

void check_sample(const std::vector<ValuationProfile>& sample) {
  if (sample.empty()) {
    throw ValidationError("search needs a nonempty sample");
  }
  for (const auto& p : sample) validate_profile(p);
  for (const auto& p : sample) {
    if (p.n != sample.front().n || p.m != sample.front().m) {
      throw ValidationError("sample mixes profile shapes");
    }
  }
}

}  // namespace

double empirical_revenue(const AuctionParams& params,
                         const std::vector<ValuationProfile>& sample) {
  if (sample.empty()) {
    throw ValidationError("empirical revenue over an empty sample");
  }
  double sum = 0.0;
  for (const auto& profile : sample) {
    sum += run_auction(params, profile).revenue;
  }
  return sum / static_cast<double>(sample.size());
}

SearchConfig default_search_config(
    const std::string& auction_class,
    const std::vector<ValuationProfile>& sample) {
  check_sample(sample);
  double h_v = 0.0;
  for (const auto& p : sample) {
    h_v = std::max(h_v, p.h_v ? *p.h_v : p.max_value());
  }
  const double n = static_cast<double>(sample.front().n);
  SearchConfig config;
  config.auction_class = auction_class;
  // Beyond n*h_v the discount/boost can only relabel already-losing
  // allocations, and a reserve above h_v never sells; larger boxes only
  // waste the budget.
  config.c_box = {0.0, n * h_v};
  config.reserve_box = {0.0, h_v};
  config.weight_box = {0.5, 2.0};
  config.boost_box = {0.0, n * h_v};
  config.resolution = 8;
  return config;
}

SearchResult grid_search(const SearchConfig& config,
                         const std::vector<ValuationProfile>& sample) {
  check_sample(sample);
  if (config.resolution < 2) {
    throw ValidationError("grid resolution must be >= 2, got " +
                          std::to_string(config.resolution));
  }
  AxisSet space = make_axes(config, sample.front().n, sample.front().m);
  const int r = config.resolution;
  const std::uint64_t points_per_axis = static_cast<std::uint64_t>(r) + 1;

  std::uint64_t vertices = 1;
  for (std::size_t a = 0; a < space.axes.size(); ++a) {
    if (vertices > kMaxGridVertices / points_per_axis) {
      throw CapacityError("grid exceeds " + std::to_string(kMaxGridVertices) +
                          " vertices");
    }
    vertices *= points_per_axis;
  }

  const std::size_t dims = space.axes.size();
  auto coords_of = [&](std::uint64_t rank) {
    std::vector<double> t(dims);
    // Axis 0 is the most significant digit so ascending rank order is
    // lexicographic order of coordinate tuples.
    for (std::size_t a = dims; a-- > 0;) {
      const int i = static_cast<int>(rank % points_per_axis);
      rank /= points_per_axis;
      t[a] = grid_point(space.axes[a], i, r);
    }
    return t;
  };

  SearchResult result;
  result.evaluations = vertices;

  struct ChunkBest {
    double value = 0.0;
    std::uint64_t rank = 0;
    bool have = false;
  };

  if (config.keep_trace) {
    ChunkBest best;
    for (std::uint64_t rank = 0; rank < vertices; ++rank) {
      const std::vector<double> t = coords_of(rank);
      const double value = empirical_revenue(space.build(t), sample);
      result.trace.push_back({t, value});
      if (!best.have || value > best.value) {
        best = {value, rank, true};
      }
    }
    result.best_point = coords_of(best.rank);
    result.best = space.build(result.best_point);
    result.mean_revenue = best.value;
    return result;
  }

  const std::uint64_t chunk = 4096;
  const std::size_t chunks =
      static_cast<std::size_t>((vertices + chunk - 1) / chunk);
  std::vector<ChunkBest> bests(chunks);
  parallel_for(chunks, [&](std::size_t ci) {
    const std::uint64_t begin = static_cast<std::uint64_t>(ci) * chunk;
    const std::uint64_t end = std::min(begin + chunk, vertices);
    ChunkBest local;
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      const double value =
          empirical_revenue(space.build(coords_of(rank)), sample);
      if (!local.have || value > local.value) {
        local = {value, rank, true};
      }
    }
    bests[ci] = local;
  });

  ChunkBest best;
  for (const auto& b : bests) {
    if (!b.have) continue;
    if (!best.have || b.value > best.value) best = b;
  }
  result.best_point = coords_of(best.rank);
  result.best = space.build(result.best_point);
  result.mean_revenue = best.value;
  return result;
}

SearchResult local_search_mbarp(const SearchConfig& config,
                                const std::vector<ValuationProfile>& sample) {
  check_sample(sample);
  if (config.auction_class != "mbarp") {
    throw ValidationError("coordinate ascent is specific to class 'mbarp'");
  }
  const auto& local = config.local;
  if (local.restarts < 0 ||
      !(local.initial_step > 0.0) || !(local.shrink > 0.0) ||
      local.shrink >= 1.0 || !(local.min_step > 0.0)) {
    throw ValidationError("invalid local-search parameters");
  }
  AxisSet space = make_axes(config, sample.front().n, sample.front().m);
  const std::size_t dims = space.axes.size();

  auto clamp_axis = [&](double x, std::size_t a) {
    return std::min(std::max(x, space.axes[a].lo), space.axes[a].hi);
  };

  SearchResult result;
  std::uint64_t evals = 0;

  auto evaluate = [&](const std::vector<double>& t) {
    ++evals;
    return empirical_revenue(space.build(t), sample);
  };

  // Start points: the caller's explicit ones first, then seeded draws.
  std::vector<std::vector<double>> starts = config.extra_starts;
  for (const auto& s : starts) {
    if (s.size() != dims) {
      throw ValidationError("explicit start has " + std::to_string(s.size()) +
                            " coordinates, expected " + std::to_string(dims));
    }
  }
  for (int k = 0; k < local.restarts; ++k) {
    Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(k)));
    std::vector<double> t(dims);
    for (std::size_t a = 0; a < dims; ++a) {
      t[a] = clamp_axis(rng.uniform(space.axes[a].lo, space.axes[a].hi), a);
    }
    starts.push_back(std::move(t));
  }
  if (starts.empty()) {
    throw ValidationError("no start points: zero restarts and no explicit starts");
  }

  bool have_best = false;
  std::vector<double> best_point;
  double best_value = 0.0;

  for (auto& point : starts) {
    for (std::size_t a = 0; a < dims; ++a) point[a] = clamp_axis(point[a], a);
    double value = evaluate(point);
    if (config.keep_trace) result.trace.push_back({point, value});

    for (double step = local.initial_step; step >= local.min_step;
         step *= local.shrink) {
      // Sweep axes until a full pass yields no accepted move. Strict
      // improvement means the walk cannot revisit a point, so each pass
      // level terminates; the pass cap is a safety net only.
      for (int pass = 0; pass < 10000; ++pass) {
        bool improved = false;
        for (std::size_t a = 0; a < dims; ++a) {
          const double width = space.axes[a].hi - space.axes[a].lo;
          if (width <= 0.0) continue;
          for (const double dir : {+1.0, -1.0}) {
            const double cand = clamp_axis(point[a] + dir * step * width, a);
            if (cand == point[a]) continue;
            const double prev = point[a];
            point[a] = cand;
            const double cand_value = evaluate(point);
            if (cand_value > value) {
              value = cand_value;
              improved = true;
              if (config.keep_trace) result.trace.push_back({point, value});
            } else {
              point[a] = prev;
            }
          }
        }
        if (!improved) break;
      }
    }

    if (!have_best || value > best_value) {
      have_best = true;
      best_value = value;
      best_point = point;
    }
  }

  result.best_point = best_point;
  result.best = space.build(best_point);
  result.mean_revenue = best_value;
  result.evaluations = evals;
  return result;
}

}  // namespace amd
