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

#include "amd/auction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace amd {

namespace {

void check_weights(const std::vector<double>& weights, int n) {
  if (static_cast<int>(weights.size()) != n) {
    throw ValidationError("expected " + std::to_string(n) + " weights, got " +
                          std::to_string(weights.size()));
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w <= 0.0) {
      throw ValidationError("bidder weights must be finite and > 0");
    }
  }
}

// General boosts may carry either sign; only finiteness is structural.
void check_boost_value(double v) {
  if (!std::isfinite(v)) {
    throw ValidationError("boosts must be finite");
  }
}

void check_discount(double c) {
  if (!std::isfinite(c) || c < 0.0) {
    throw ValidationError("the grand-bundle discount c must be finite and >= 0");
  }
}

void check_weight_values(const std::vector<double>& weights) {
  if (weights.empty()) {
    throw ValidationError("need at least one bidder weight");
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w <= 0.0) {
      throw ValidationError("bidder weights must be finite and > 0");
    }
  }
}

void check_boost_map_values(const BoostMap& boosts) {
  if (boosts.is_dense()) {
    for (double v : boosts.dense_values()) check_boost_value(v);
  } else {
    for (const auto& [idx, v] : boosts.sparse_entries()) check_boost_value(v);
  }
}

void check_reserve_values(const std::vector<double>& reserves) {
  for (double r : reserves) {
    if (!std::isfinite(r) || r < 0.0) {
      throw ValidationError("reserves must be finite and >= 0");
    }
  }
}

}  // namespace

BoostMap BoostMap::dense(std::vector<double> values) {
  if (values.size() > kDenseLimit) {
    throw CapacityError("dense boost table of " +
                        std::to_string(values.size()) +
                        " entries exceeds the dense limit of " +
                        std::to_string(kDenseLimit));
  }
  BoostMap map;
  map.dense_ = true;
  map.values_ = std::move(values);
  return map;
}

BoostMap BoostMap::sparse(
    std::vector<std::pair<std::uint64_t, double>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].first == entries[i - 1].first) {
      throw ValidationError("duplicate boost entry for allocation index " +
                            std::to_string(entries[i].first));
    }
  }
  BoostMap map;
  map.dense_ = false;
  map.entries_ = std::move(entries);
  return map;
}

double BoostMap::at(std::uint64_t index) const {
  if (dense_) {
    return index < values_.size() ? values_[static_cast<std::size_t>(index)]
                                  : 0.0;
  }
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const auto& entry, std::uint64_t key) { return entry.first < key; });
  return (it != entries_.end() && it->first == index) ? it->second : 0.0;
}

double BoostMap::max_boost() const {
  double best = 0.0;
  if (dense_) {
    for (double v : values_) best = std::max(best, v);
  } else {
    for (const auto& [idx, v] : entries_) best = std::max(best, v);
  }
  return best;
}

void BoostMap::validate(std::uint64_t allocation_count) const {
  if (dense_) {
    if (values_.size() != allocation_count) {
      throw ValidationError("dense boost table has " +
                            std::to_string(values_.size()) +
                            " entries but the allocation space has " +
                            std::to_string(allocation_count));
    }
    for (double v : values_) check_boost_value(v);
    return;
  }
  for (const auto& [idx, v] : entries_) {
    if (idx >= allocation_count) {
      throw ValidationError("boost entry at allocation index " +
                            std::to_string(idx) +
                            " is outside the allocation space of size " +
                            std::to_string(allocation_count));
    }
    check_boost_value(v);
  }
}

const char* auction_class_name(const AuctionParams& params) {
  struct Visitor {
    const char* operator()(const GeneralAma&) const { return "ama"; }
    const char* operator()(const Vvca&) const { return "vvca"; }
    const char* operator()(const LambdaAuction&) const { return "lambda"; }
    const char* operator()(const Mba&) const { return "mba"; }
    const char* operator()(const Mbarp&) const { return "mbarp"; }
  };
  return std::visit(Visitor{}, params);
}

void validate_auction(const AuctionParams& params, int n, int m) {
  const std::uint64_t count = allocation_count(n, m);
  if (const auto* ama = std::get_if<GeneralAma>(&params)) {
    check_weights(ama->weights, n);
    ama->boosts.validate(count);
    return;
  }
  if (const auto* vvca = std::get_if<Vvca>(&params)) {
    check_weights(vvca->weights, n);
    if (static_cast<int>(vvca->c.size()) != n) {
      throw ValidationError("per-bidder boost table needs " +
                            std::to_string(n) + " rows, got " +
                            std::to_string(vvca->c.size()));
    }
    const std::size_t row_size = std::size_t{1} << m;
    for (const auto& row : vvca->c) {
      if (row.size() != row_size) {
        throw ValidationError(
            "per-bidder boost rows must have 2^m = " +
            std::to_string(row_size) + " entries, got " +
            std::to_string(row.size()));
      }
      for (double v : row) check_boost_value(v);
    }
    return;
  }
  if (const auto* lam = std::get_if<LambdaAuction>(&params)) {
    lam->boosts.validate(count);
    return;
  }
  if (const auto* mba = std::get_if<Mba>(&params)) {
    check_discount(mba->c);
    return;
  }
  const auto& mbarp = std::get<Mbarp>(params);
  check_discount(mbarp.c);
  if (static_cast<int>(mbarp.reserves.size()) != m) {
    throw ValidationError("expected " + std::to_string(m) +
                          " per-item reserves, got " +
                          std::to_string(mbarp.reserves.size()));
  }
  check_reserve_values(mbarp.reserves);
}

void validate_auction(const AuctionParams& params) {
  if (const auto* ama = std::get_if<GeneralAma>(&params)) {
    check_weight_values(ama->weights);
    check_boost_map_values(ama->boosts);
    return;
  }
  if (const auto* vvca = std::get_if<Vvca>(&params)) {
    check_weight_values(vvca->weights);
    if (vvca->c.size() != vvca->weights.size()) {
      throw ValidationError(
          "per-bidder boost table needs one row per weight, got " +
          std::to_string(vvca->c.size()) + " rows for " +
          std::to_string(vvca->weights.size()) + " weights");
    }
    for (const auto& row : vvca->c) {
      if (row.empty() || (row.size() & (row.size() - 1)) != 0) {
        throw ValidationError(
            "per-bidder boost rows must have a power-of-two number of "
            "bundle entries, got " +
            std::to_string(row.size()));
      }
      if (row.size() != vvca->c.front().size()) {
        throw ValidationError("per-bidder boost rows must share one length");
      }
      for (double v : row) check_boost_value(v);
    }
    return;
  }
  if (const auto* lam = std::get_if<LambdaAuction>(&params)) {
    check_boost_map_values(lam->boosts);
    return;
  }
  if (const auto* mba = std::get_if<Mba>(&params)) {
    check_discount(mba->c);
    return;
  }
  const auto& mbarp = std::get<Mbarp>(params);
  check_discount(mbarp.c);
  if (mbarp.reserves.empty()) {
    throw ValidationError("need at least one per-item reserve");
  }
  check_reserve_values(mbarp.reserves);
}

GeneralAma lower_to_general(const AuctionParams& params, int n, int m) {
  validate_auction(params, n, m);
  const std::uint64_t count = allocation_count(n, m);

  if (const auto* ama = std::get_if<GeneralAma>(&params)) {
    return *ama;
  }
  if (const auto* lam = std::get_if<LambdaAuction>(&params)) {
    GeneralAma out;
    out.weights.assign(static_cast<std::size_t>(n), 1.0);
    out.boosts = lam->boosts;
    return out;
  }
  if (const auto* mba = std::get_if<Mba>(&params)) {
    // The boosted allocations are exactly the n "bidder k takes all items"
    // ones; their indices are k * ((n+1)^m - 1) / n.
    GeneralAma out;
    out.weights.assign(static_cast<std::size_t>(n), 1.0);
    std::vector<std::pair<std::uint64_t, double>> entries;
    entries.reserve(static_cast<std::size_t>(n));
    const std::uint64_t all_ones = (count - 1) / static_cast<std::uint64_t>(n);
    for (int k = 1; k <= n; ++k) {
      entries.emplace_back(all_ones * static_cast<std::uint64_t>(k), mba->c);
    }
    out.boosts = BoostMap::sparse(std::move(entries));
    return out;
  }
  if (const auto* vvca = std::get_if<Vvca>(&params)) {
    // The per-bidder decomposition touches almost every allocation, so the
    // lowered form needs a dense table.
    if (count > BoostMap::kDenseLimit) {
      throw CapacityError(
          "lowering a per-bidder boost table needs a dense table of " +
          std::to_string(count) + " entries, above the dense limit of " +
          std::to_string(BoostMap::kDenseLimit));
    }
    std::vector<double> table(static_cast<std::size_t>(count), 0.0);
    for_each_allocation(n, m, [&](const Allocation& a, std::uint64_t index) {
      double lambda = 0.0;
      for (int i = 1; i <= n; ++i) {
        lambda += vvca->c[static_cast<std::size_t>(i - 1)]
                         [static_cast<std::size_t>(bundle_of(a, i))];
      }
      table[static_cast<std::size_t>(index)] = lambda;
    });
    GeneralAma out;
    out.weights = vvca->weights;
    out.boosts = BoostMap::dense(std::move(table));
    return out;
  }
  throw ValidationError(
      "a seller with reserve values cannot be rewritten as a plain "
      "weighted-boosted auction");
}

}  // namespace amd
