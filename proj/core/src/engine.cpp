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

#include "amd/engine.hpp"

#include <string>

#include "amd/errors.hpp"

namespace amd {

namespace {

// Resolved view of one (params, profile) pair. Exactly one of the class
// pointers is set; `weights` is null for the unweighted classes (treated
// as all ones).
struct ClassView {
  int n = 0;
  int m = 0;
  const ValuationProfile* profile = nullptr;
  const std::vector<double>* weights = nullptr;
  const BoostMap* boosts = nullptr;
  const Vvca* vvca = nullptr;
  const Mba* mba = nullptr;
  const Mbarp* mbarp = nullptr;
  bool split_boosts = false;
};

ClassView make_view(const AuctionParams& params,
                    const ValuationProfile& profile) {
  validate_profile(profile);
  validate_auction(params, profile.n, profile.m);
  ClassView view;
  view.n = profile.n;
  view.m = profile.m;
  view.profile = &profile;
  if (const auto* ama = std::get_if<GeneralAma>(&params)) {
    view.weights = &ama->weights;
    view.boosts = &ama->boosts;
  } else if (const auto* vvca = std::get_if<Vvca>(&params)) {
    view.weights = &vvca->weights;
    view.vvca = vvca;
  } else if (const auto* lam = std::get_if<LambdaAuction>(&params)) {
    view.boosts = &lam->boosts;
  } else if (const auto* mba = std::get_if<Mba>(&params)) {
    view.mba = mba;
  } else {
    view.mbarp = &std::get<Mbarp>(params);
  }
  return view;
}

double weight_of(const ClassView& view, int bidder) {
  return view.weights ? (*view.weights)[static_cast<std::size_t>(bidder - 1)]
                      : 1.0;
}

// Single exhaustive scan. For every allocation it evaluates the boosted
// objective, the tie key, and the n bidder-dropped objectives, and runs
// n + 1 argmax trackers off those values. The winner's bidder-dropped
// objectives are snapshotted from the same evaluation that won, so the
// payment subtraction below compares doubles produced by one arithmetic
// pass and can never go negative.
AuctionOutcome scan(const ClassView& view) {
  const int n = view.n;
  const int m = view.m;
  const ValuationProfile& profile = *view.profile;
  const BundleId grand = grand_bundle(m);

  std::vector<BundleId> bundles(static_cast<std::size_t>(n) + 1);
  std::vector<double> own_value(static_cast<std::size_t>(n));
  std::vector<double> obj_minus(static_cast<std::size_t>(n));
  std::vector<double> key2_minus(static_cast<std::size_t>(n));

  bool have = false;
  double best_obj = 0.0;
  double best_key2 = 0.0;
  std::uint64_t best_index = 0;
  std::vector<double> snap_obj_minus(static_cast<std::size_t>(n));
  std::vector<double> best_minus_obj(static_cast<std::size_t>(n));
  std::vector<double> best_minus_key2(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> removed(static_cast<std::size_t>(n), 0);

  for_each_allocation(n, m, [&](const Allocation& a, std::uint64_t index) {
    for (auto& b : bundles) b = 0;
    for (int j = 0; j < m; ++j) {
      bundles[a.assignee[static_cast<std::size_t>(j)]] |= BundleId{1} << j;
    }

    double welfare = 0.0;
    for (int i = 1; i <= n; ++i) {
      const double v =
          weight_of(view, i) * profile.value(i, bundles[static_cast<std::size_t>(i)]);
      own_value[static_cast<std::size_t>(i - 1)] = v;
      welfare += v;
    }

    double obj = welfare;
    if (view.mbarp) {
      double seller = 0.0;
      for (int j = 0; j < m; ++j) {
        if (a.assignee[static_cast<std::size_t>(j)] == 0) {
          seller += view.mbarp->reserves[static_cast<std::size_t>(j)];
        }
      }
      obj += seller;
    }

    double lambda = 0.0;
    if (view.boosts) {
      lambda = view.boosts->at(index);
    } else if (view.vvca) {
      for (int i = 1; i <= n; ++i) {
        lambda += view.vvca->c[static_cast<std::size_t>(i - 1)]
                              [static_cast<std::size_t>(
                                  bundles[static_cast<std::size_t>(i)])];
      }
    } else if (view.mba || view.mbarp) {
      const std::uint8_t first = a.assignee[0];
      if (first != 0 && bundles[first] == grand) {
        lambda = view.mba ? view.mba->c : view.mbarp->c;
      }
    }
    obj += lambda;
    const double key2 = welfare;

    for (int i = 1; i <= n; ++i) {
      const std::size_t s = static_cast<std::size_t>(i - 1);
      double om = obj - own_value[s];
      if (view.split_boosts) {
        om -= view.vvca->c[s][static_cast<std::size_t>(
            bundles[static_cast<std::size_t>(i)])];
      }
      obj_minus[s] = om;
      key2_minus[s] = key2 - own_value[s];
    }

    if (!have || obj > best_obj || (obj == best_obj && key2 > best_key2)) {
      best_obj = obj;
      best_key2 = key2;
      best_index = index;
      snap_obj_minus = obj_minus;
    }
    for (int i = 0; i < n; ++i) {
      const std::size_t s = static_cast<std::size_t>(i);
      if (!have || obj_minus[s] > best_minus_obj[s] ||
          (obj_minus[s] == best_minus_obj[s] &&
           key2_minus[s] > best_minus_key2[s])) {
        best_minus_obj[s] = obj_minus[s];
        best_minus_key2[s] = key2_minus[s];
        removed[s] = index;
      }
    }
    have = true;
  });

  AuctionOutcome out;
  out.chosen = best_index;
  out.assignee = allocation_from_index(best_index, n, m).assignee;
  out.removed = std::move(removed);
  out.payments.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const std::size_t s = static_cast<std::size_t>(i - 1);
    out.payments[s] =
        (best_minus_obj[s] - snap_obj_minus[s]) / weight_of(view, i);
  }
  double revenue = 0.0;
  for (double p : out.payments) revenue += p;
  out.revenue = revenue;
  out.objective = best_obj;
  return out;
}

}  // namespace

AuctionOutcome run_auction(const AuctionParams& params,
                           const ValuationProfile& profile) {
  return scan(make_view(params, profile));
}

AuctionOutcome run_vvca_split_boosts(const Vvca& params,
                                     const ValuationProfile& profile) {
  validate_profile(profile);
  validate_auction(AuctionParams{params}, profile.n, profile.m);
  ClassView view;
  view.n = profile.n;
  view.m = profile.m;
  view.profile = &profile;
  view.weights = &params.weights;
  view.vvca = &params;
  view.split_boosts = true;
  return scan(view);
}

double utility_under_report(const AuctionParams& params,
                            const ValuationProfile& truthful, int bidder,
                            const std::vector<double>& reported_row) {
  validate_profile(truthful);
  if (bidder < 1 || bidder > truthful.n) {
    throw ValidationError("bidder " + std::to_string(bidder) +
                          " out of range [1, " + std::to_string(truthful.n) +
                          "]");
  }
  ValuationProfile reported = truthful;
  reported.values[static_cast<std::size_t>(bidder - 1)] = reported_row;
  reported.h_v.reset();  // the deviation need not respect the ceiling
  validate_profile(reported);
  const AuctionOutcome outcome = run_auction(params, reported);

  BundleId won = 0;
  for (int j = 0; j < truthful.m; ++j) {
    if (outcome.assignee[static_cast<std::size_t>(j)] == bidder) {
      won |= BundleId{1} << j;
    }
  }
  return truthful.value(bidder, won) -
         outcome.payments[static_cast<std::size_t>(bidder - 1)];
}

std::vector<std::vector<double>> revenue_matrix(
    const std::vector<AuctionParams>& auctions,
    const std::vector<ValuationProfile>& profiles) {
  std::vector<std::vector<double>> result(
      auctions.size(), std::vector<double>(profiles.size(), 0.0));
  for (std::size_t a = 0; a < auctions.size(); ++a) {
    for (std::size_t p = 0; p < profiles.size(); ++p) {
      result[a][p] = run_auction(auctions[a], profiles[p]).revenue;
    }
  }
  return result;
}

}  // namespace amd
