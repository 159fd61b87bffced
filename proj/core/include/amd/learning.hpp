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

#ifndef AMD_LEARNING_HPP
#define AMD_LEARNING_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "amd/auction.hpp"
#include "amd/sampling.hpp"

namespace amd {

// Estimate of E_sigma[ sup_A (1/N) sum_i sigma_i rev_A(v_i) ] over a finite
// auction grid, with signs uniform on {-1, +1}.
struct RademacherEstimate {
  double mean = 0.0;
  double std_error = 0.0;    // zero in exact mode
  std::uint64_t draws = 0;   // sign vectors evaluated (2^N in exact mode)
  bool exact = false;
};

// draws == 0 requests exact enumeration of all 2^N sign vectors, which is
// only accepted for N <= 20 samples; otherwise draws Monte Carlo sign
// vectors, one derived seed per draw.
RademacherEstimate empirical_rademacher(const SampleSet& sample,
                                        const std::vector<AuctionParams>& grid,
                                        std::uint64_t draws,
                                        std::uint64_t seed);

struct UcRow {
  int sample_size = 0;
  int trials = 0;
  double mean_sup_deviation = 0.0;
  std::vector<double> per_auction_mean_deviation;  // one entry per grid point
  std::vector<double> per_trial_sup_deviation;     // one entry per trial
};

// How far empirical average revenue strays from a long-run reference, per
// sample size, maximised over the auction grid.
struct UcReport {
  std::uint64_t seed = 0;
  int reference_size = 0;
  std::size_t grid_size = 0;
  std::vector<UcRow> rows;  // one per requested sample size
};

// For each size in `sizes` and each trial, draws a fresh sample from `dist`
// and measures sup over the grid of |sample mean revenue - reference mean
// revenue|, the reference being one sample of reference_size (required to be
// at least 10x the largest requested size).  Deterministic per seed.
UcReport uc_experiment(const ProfileDistribution& dist,
                       const std::vector<AuctionParams>& grid,
                       const std::vector<int>& sizes, int trials,
                       int reference_size, std::uint64_t seed);

// Train-vs-population revenue gap for the boost-table instance family: a
// random N_train-subset of the catalogue becomes H, and the induced auction
// is scored on its training profiles versus the whole catalogue.
struct GapResult {
  int n = 0;
  int m = 0;
  double gamma = 0.0;
  int n_train = 0;
  std::uint64_t seed = 0;
  std::size_t family_size = 0;
  std::vector<std::size_t> train_indices;  // ascending
  double empirical_revenue = 0.0;          // mean over the training profiles
  double expected_revenue = 0.0;           // exact mean over the catalogue
  double gap = 0.0;                        // empirical - expected
};

GapResult lambda_gap_experiment(int n, int m, double gamma, int n_train,
                                std::uint64_t seed);

enum class BoundKind {
  Pseudo,            // dimension-based deviation bound
  Rademacher,        // complexity-based deviation bound
  AmaRademacher,     // closed-form complexity growth for boosted auctions
  ErmAdditive,       // near-optimiser guarantee, additive slack
  ErmMultiplicative, // near-optimiser guarantee, multiplicative slack
};

const char* bound_kind_name(BoundKind kind);
BoundKind bound_kind_from_name(std::string_view name);

// One query struct for all five formulas; each kind reads the fields it
// needs and ignores the rest.  Natural logarithms throughout.
struct BoundQuery {
  BoundKind kind = BoundKind::Pseudo;
  double d = 1.0;          // pseudo: class dimension
  double c = 1.0;          // range bound of the function class
  std::uint64_t n_samples = 1;
  double delta = 0.1;      // failure probability
  double r_n = 0.0;        // rademacher: complexity at size N
  double epsilon = 0.0;    // erm: uniform-convergence slack
  double rho = 0.0;        // erm-additive: optimisation slack
  double alpha = 0.0;      // erm-multiplicative: relative slack, in [0,1)
  double l_star = 0.0;     // erm-multiplicative: optimal expected loss
  int n = 2;               // ama-rademacher: bidders
  int m = 1;               // ama-rademacher: items
  double h_w_lo = 1.0;     // ama-rademacher: smallest admissible weight
  double h_w_hi = 1.0;     // ama-rademacher: largest admissible weight
  double h_lambda = 0.0;   // ama-rademacher: boost magnitude cap
  double h_v = 1.0;        // ama-rademacher: valuation cap
};

struct BoundResult {
  double value = 0.0;
  // The boosted-auction complexity formula is evaluated with leading
  // constant 1: it tracks growth trends, it is not a guarantee.
  bool order_of_magnitude = false;
};

BoundResult eval_bound(const BoundQuery& query);

}  // namespace amd

#endif  // AMD_LEARNING_HPP
