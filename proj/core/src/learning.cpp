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

#include "amd/learning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "amd/engine.hpp"
#include "amd/errors.hpp"
#include "amd/lower_bounds.hpp"
#include "amd/parallel.hpp"
#include "amd/rng.hpp"

namespace amd {
namespace {

constexpr int kExactSignLimit = 20;

// Largest signed average achievable on the grid for one sign vector, the
// signs read from the mask bit by bit.
double best_signed_average(const std::vector<std::vector<double>>& matrix,
                           std::uint64_t mask, std::size_t count) {
  double best = 0.0;
  bool first = true;
  for (const std::vector<double>& row : matrix) {
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double r = row[i];
      sum += (mask >> i) & 1 ? r : -r;
    }
    if (first || sum > best) best = sum;
    first = false;
  }
  return best / static_cast<double>(count);
}

void check_delta(double delta) {
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw ValidationError("delta must lie strictly between 0 and 1, got " +
                          std::to_string(delta));
  }
}

void check_range_bound(double c) {
  if (!std::isfinite(c) || c < 0.0) {
    throw ValidationError("range bound c must be finite and nonnegative");
  }
}

}  // namespace

RademacherEstimate empirical_rademacher(const SampleSet& sample,
                                        const std::vector<AuctionParams>& grid,
                                        std::uint64_t draws,
                                        std::uint64_t seed) {
  const std::size_t count = sample.profiles.size();
  if (count == 0) {
    throw ValidationError("sign-complexity estimation needs a nonempty sample");
  }
  if (grid.empty()) {
    throw ValidationError("sign-complexity estimation needs a nonempty grid");
  }
  const std::vector<std::vector<double>> matrix =
      revenue_matrix(grid, sample.profiles);

  RademacherEstimate estimate;
  if (draws == 0) {
    if (count > kExactSignLimit) {
      throw CapacityError("exact sign enumeration handles at most " +
                          std::to_string(kExactSignLimit) +
                          " samples (2^N sign vectors), got " +
                          std::to_string(count));
    }
    // Enumerate sign vectors in complementary pairs so that a grid whose
    // signed sums are symmetric (e.g. a single auction) cancels exactly.
    const std::uint64_t half = std::uint64_t{1} << (count - 1);
    const std::uint64_t full = (std::uint64_t{1} << count) - 1;
    const std::size_t chunk = 4096;
    const std::size_t chunks = static_cast<std::size_t>((half + chunk - 1) / chunk);
    std::vector<double> partial(chunks, 0.0);
    parallel_for(chunks, [&](std::size_t ci) {
      const std::uint64_t lo = static_cast<std::uint64_t>(ci) * chunk;
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, half);
      double sum = 0.0;
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        sum += best_signed_average(matrix, mask, count) +
               best_signed_average(matrix, full ^ mask, count);
      }
      partial[ci] = sum;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    estimate.mean = total / static_cast<double>(std::uint64_t{1} << count);
    estimate.std_error = 0.0;
    estimate.draws = std::uint64_t{1} << count;
    estimate.exact = true;
    return estimate;
  }

  std::vector<double> values(static_cast<std::size_t>(draws), 0.0);
  parallel_for(values.size(), [&](std::size_t k) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (rng.coin()) mask |= std::uint64_t{1} << i;
    }
    values[k] = best_signed_average(matrix, mask, count);
  });
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(draws);
  double variance = 0.0;
  if (draws > 1) {
    for (double v : values) variance += (v - mean) * (v - mean);
    variance /= static_cast<double>(draws - 1);
  }
  estimate.mean = mean;
  estimate.std_error = std::sqrt(variance / static_cast<double>(draws));
  estimate.draws = draws;
  estimate.exact = false;
  return estimate;
}

UcReport uc_experiment(const ProfileDistribution& dist,
                       const std::vector<AuctionParams>& grid,
                       const std::vector<int>& sizes, int trials,
                       int reference_size, std::uint64_t seed) {
  validate_distribution(dist);
  if (grid.empty()) {
    throw ValidationError("the experiment needs a nonempty auction grid");
  }
  if (sizes.empty()) {
    throw ValidationError("the experiment needs at least one sample size");
  }
  int largest = 0;
  for (int size : sizes) {
    if (size < 1) {
      throw ValidationError("sample sizes must be positive, got " +
                            std::to_string(size));
    }
    largest = std::max(largest, size);
  }
  if (trials < 1) {
    throw ValidationError("trial count must be positive, got " +
                          std::to_string(trials));
  }
  if (reference_size < 10 * largest) {
    throw ValidationError("the reference sample must be at least 10x the "
                          "largest requested size (" +
                          std::to_string(10 * largest) + "), got " +
                          std::to_string(reference_size));
  }

  // Running means keep a constant sequence exactly constant, so a point-mass
  // distribution reports deviation 0 rather than summation noise.
  const auto running_mean = [](const AuctionParams& params,
                               const std::vector<ValuationProfile>& profiles) {
    double mean = 0.0;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      const double revenue = run_auction(params, profiles[i]).revenue;
      mean += (revenue - mean) / static_cast<double>(i + 1);
    }
    return mean;
  };

  const SampleSet reference =
      sample_profiles(dist, reference_size, mix_seed(seed, 0));
  std::vector<double> reference_mean(grid.size(), 0.0);
  parallel_for(grid.size(), [&](std::size_t a) {
    reference_mean[a] = running_mean(grid[a], reference.profiles);
  });

  const std::size_t tasks = sizes.size() * static_cast<std::size_t>(trials);
  std::vector<std::vector<double>> deviations(tasks);
  std::vector<double> sups(tasks, 0.0);
  parallel_for(tasks, [&](std::size_t task) {
    const std::size_t size_index = task / static_cast<std::size_t>(trials);
    const std::uint64_t trial = task % static_cast<std::size_t>(trials);
    const SampleSet drawn = sample_profiles(
        dist, sizes[size_index],
        mix_seed(mix_seed(seed, 1 + static_cast<std::uint64_t>(size_index)),
                 trial));
    std::vector<double> devs(grid.size(), 0.0);
    double sup = 0.0;
    for (std::size_t a = 0; a < grid.size(); ++a) {
      devs[a] = std::abs(running_mean(grid[a], drawn.profiles) -
                         reference_mean[a]);
      sup = std::max(sup, devs[a]);
    }
    deviations[task] = std::move(devs);
    sups[task] = sup;
  });

  UcReport report;
  report.seed = seed;
  report.reference_size = reference_size;
  report.grid_size = grid.size();
  report.rows.reserve(sizes.size());
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    UcRow row;
    row.sample_size = sizes[si];
    row.trials = trials;
    row.per_auction_mean_deviation.assign(grid.size(), 0.0);
    row.per_trial_sup_deviation.reserve(static_cast<std::size_t>(trials));
    double sup_sum = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t task =
          si * static_cast<std::size_t>(trials) + static_cast<std::size_t>(t);
      sup_sum += sups[task];
      row.per_trial_sup_deviation.push_back(sups[task]);
      for (std::size_t a = 0; a < grid.size(); ++a) {
        row.per_auction_mean_deviation[a] += deviations[task][a];
      }
    }
    row.mean_sup_deviation = sup_sum / static_cast<double>(trials);
    for (double& dev : row.per_auction_mean_deviation) {
      dev /= static_cast<double>(trials);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

GapResult lambda_gap_experiment(int n, int m, double gamma, int n_train,
                                std::uint64_t seed) {
  const std::size_t size = lambda_lb_size(n, m);
  if (n_train < 1 || static_cast<std::size_t>(n_train) >= size) {
    throw ValidationError("training size must lie in [1, " +
                          std::to_string(size - 1) +
                          "] for this catalogue, got " +
                          std::to_string(n_train));
  }

  // Draw a uniformly random n_train-subset of catalogue positions.
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(mix_seed(seed, 0));
  for (int k = 0; k < n_train; ++k) {
    const std::size_t j =
        static_cast<std::size_t>(k) +
        static_cast<std::size_t>(rng.below(
            static_cast<std::uint64_t>(size - static_cast<std::size_t>(k))));
    std::swap(order[static_cast<std::size_t>(k)], order[j]);
  }
  std::vector<std::size_t> train(order.begin(),
                                 order.begin() + n_train);
  std::sort(train.begin(), train.end());

  std::vector<bool> in_h(size, false);
  for (std::size_t index : train) in_h[index] = true;
  const LowerBoundInstance instance = build_lambda_lb(n, m, gamma, in_h);

  std::vector<double> revenue(size, 0.0);
  parallel_for(size, [&](std::size_t i) {
    revenue[i] = run_auction(*instance.auction, instance.profiles[i]).revenue;
  });

  double train_sum = 0.0;
  for (std::size_t index : train) train_sum += revenue[index];
  double total = 0.0;
  for (double r : revenue) total += r;

  GapResult result;
  result.n = n;
  result.m = m;
  result.gamma = gamma;
  result.n_train = n_train;
  result.seed = seed;
  result.family_size = size;
  result.train_indices = std::move(train);
  result.empirical_revenue = train_sum / static_cast<double>(n_train);
  result.expected_revenue = total / static_cast<double>(size);
  result.gap = result.empirical_revenue - result.expected_revenue;
  return result;
}

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::Pseudo:
      return "pseudo";
    case BoundKind::Rademacher:
      return "rademacher";
    case BoundKind::AmaRademacher:
      return "ama-rademacher";
    case BoundKind::ErmAdditive:
      return "erm-additive";
    case BoundKind::ErmMultiplicative:
      return "erm-multiplicative";
  }
  throw ValidationError("unknown bound kind");
}

BoundKind bound_kind_from_name(std::string_view name) {
  if (name == "pseudo") return BoundKind::Pseudo;
  if (name == "rademacher") return BoundKind::Rademacher;
  if (name == "ama-rademacher") return BoundKind::AmaRademacher;
  if (name == "erm-additive") return BoundKind::ErmAdditive;
  if (name == "erm-multiplicative") return BoundKind::ErmMultiplicative;
  throw ValidationError("unknown bound kind '" + std::string(name) + "'");
}

BoundResult eval_bound(const BoundQuery& query) {
  if (query.n_samples < 1) {
    throw ValidationError("sample count must be at least 1");
  }
  const double n_samples = static_cast<double>(query.n_samples);
  BoundResult result;
  switch (query.kind) {
    case BoundKind::Pseudo: {
      check_delta(query.delta);
      check_range_bound(query.c);
      if (!std::isfinite(query.d) || query.d < 1.0) {
        throw ValidationError("dimension must be finite and at least 1");
      }
      if (n_samples < query.d) {
        throw ValidationError(
            "sample count must be at least the dimension for this bound");
      }
      const double growth =
          std::log(std::exp(1.0) * n_samples / query.d);
      result.value =
          query.c * std::sqrt(2.0 * query.d * growth / n_samples) +
          query.c * std::sqrt(std::log(1.0 / query.delta) / (2.0 * n_samples));
      return result;
    }
    case BoundKind::Rademacher: {
      check_delta(query.delta);
      check_range_bound(query.c);
      if (!std::isfinite(query.r_n)) {
        throw ValidationError("complexity input must be finite");
      }
      result.value =
          2.0 * query.r_n +
          query.c * std::sqrt(2.0 * std::log(2.0 / query.delta) / n_samples);
      return result;
    }
    case BoundKind::AmaRademacher: {
      if (query.n < 2 || query.m < 1) {
        throw ValidationError(
            "the boosted-auction formula needs n >= 2 bidders and m >= 1 "
            "items");
      }
      if (!std::isfinite(query.h_w_lo) || query.h_w_lo <= 0.0 ||
          !std::isfinite(query.h_w_hi) || query.h_w_hi < query.h_w_lo) {
        throw ValidationError(
            "weight caps must satisfy 0 < lower <= upper and be finite");
      }
      if (!std::isfinite(query.h_lambda) || query.h_lambda < 0.0 ||
          !std::isfinite(query.h_v) || query.h_v < 0.0) {
        throw ValidationError(
            "boost and valuation caps must be finite and nonnegative");
      }
      const double bidders = static_cast<double>(query.n);
      const double hv_hat = std::max(query.h_v, 1.0);
      const double scale =
          std::pow(bidders, query.m + 2) *
          (query.h_w_hi * query.h_v + query.h_lambda) / query.h_w_lo;
      const double rate =
          std::sqrt(query.m * std::log(bidders) / n_samples);
      const double inner =
          bidders * hv_hat * (bidders * query.h_w_hi + query.h_lambda) /
              query.h_w_lo +
          std::sqrt(std::pow(bidders, query.m) * std::log(n_samples));
      result.value = scale * rate * inner;
      if (!std::isfinite(result.value)) {
        throw ValidationError("bound parameters overflow the formula");
      }
      result.order_of_magnitude = true;
      return result;
    }
    case BoundKind::ErmAdditive: {
      check_delta(query.delta);
      check_range_bound(query.c);
      if (!std::isfinite(query.epsilon) || query.epsilon < 0.0 ||
          !std::isfinite(query.rho) || query.rho < 0.0) {
        throw ValidationError("slack terms must be finite and nonnegative");
      }
      result.value =
          query.epsilon +
          query.c *
              std::sqrt(std::log(4.0 / query.delta) / (2.0 * n_samples)) +
          query.rho;
      return result;
    }
    case BoundKind::ErmMultiplicative: {
      check_delta(query.delta);
      check_range_bound(query.c);
      if (!std::isfinite(query.epsilon) || query.epsilon < 0.0) {
        throw ValidationError("slack terms must be finite and nonnegative");
      }
      if (!std::isfinite(query.alpha) || query.alpha < 0.0 ||
          query.alpha >= 1.0) {
        throw ValidationError("relative slack must lie in [0, 1)");
      }
      if (!std::isfinite(query.l_star) || query.l_star < 0.0) {
        throw ValidationError(
            "the optimal-loss input must be finite and nonnegative");
      }
      result.value =
          query.epsilon +
          (1.0 + query.alpha) * query.c *
              std::sqrt(std::log(4.0 / query.delta) / (2.0 * n_samples)) +
          query.alpha * query.l_star;
      return result;
    }
  }
  throw ValidationError("unknown bound kind");
}

}  // namespace amd
