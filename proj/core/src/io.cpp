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

#include "amd/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "json.hpp"

#include "amd/errors.hpp"

namespace amd {
namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int get_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ValidationError(std::string("field '") + key +
                          "' must be an integer");
  }
  return v.get<int>();
}

std::uint64_t get_uint64(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_unsigned() &&
      !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ValidationError(std::string("field '") + key +
                          "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

double get_double(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) {
    throw ValidationError(std::string("field '") + key + "' must be a number");
  }
  return v.get<double>();
}

std::string get_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) {
    throw ValidationError(std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

std::vector<double> number_array(const json& v, const char* what) {
  if (!v.is_array()) {
    throw ValidationError(std::string(what) + " must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_number()) {
      throw ValidationError(std::string(what) +
                            " must be an array of numbers");
    }
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> number_matrix(const json& v,
                                               const char* what) {
  if (!v.is_array()) {
    throw ValidationError(std::string(what) + " must be an array of rows");
  }
  std::vector<std::vector<double>> out;
  out.reserve(v.size());
  for (const json& row : v) out.push_back(number_array(row, what));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ValuationProfile profile_from(const json& j) {
  const int n = get_int(j, "n");
  const int m = get_int(j, "m");
  const bool has_dense = j.contains("valuations");
  const bool has_additive = j.contains("additive");
  if (has_dense == has_additive) {
    throw ValidationError(
        "a profile needs exactly one of 'valuations' or 'additive'");
  }
  std::optional<double> h_v;
  if (j.contains("h_v")) h_v = get_double(j, "h_v");
  if (has_dense) {
    return make_profile(n, m,
                        number_matrix(j.at("valuations"), "'valuations'"),
                        h_v);
  }
  return make_additive_profile(
      n, m, number_matrix(j.at("additive"), "'additive'"), h_v);
}

json profile_json(const ValuationProfile& profile) {
  json j;
  j["n"] = profile.n;
  j["m"] = profile.m;
  j["valuations"] = profile.values;
  if (profile.h_v) j["h_v"] = *profile.h_v;
  return j;
}

BoostMap boosts_from(const json& j) {
  if (!j.is_object()) {
    throw ValidationError("'boosts' must be an object");
  }
  const bool has_dense = j.contains("dense");
  const bool has_sparse = j.contains("sparse");
  if (has_dense == has_sparse) {
    throw ValidationError(
        "'boosts' needs exactly one of 'dense' or 'sparse'");
  }
  if (has_dense) {
    return BoostMap::dense(number_array(j.at("dense"), "'boosts.dense'"));
  }
  const json& entries = j.at("sparse");
  if (!entries.is_array()) {
    throw ValidationError("'boosts.sparse' must be an array of pairs");
  }
  std::vector<std::pair<std::uint64_t, double>> out;
  out.reserve(entries.size());
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 2 ||
        !(e[0].is_number_unsigned() ||
          (e[0].is_number_integer() && e[0].get<std::int64_t>() >= 0)) ||
        !e[1].is_number()) {
      throw ValidationError(
          "'boosts.sparse' entries must be [allocation index, value] pairs");
    }
    out.emplace_back(e[0].get<std::uint64_t>(), e[1].get<double>());
  }
  return BoostMap::sparse(std::move(out));
}

json boosts_json(const BoostMap& boosts) {
  json j;
  if (boosts.is_dense()) {
    j["dense"] = boosts.dense_values();
  } else {
    json entries = json::array();
    for (const auto& [index, value] : boosts.sparse_entries()) {
      entries.push_back(json::array({index, value}));
    }
    j["sparse"] = std::move(entries);
  }
  return j;
}

AuctionParams auction_from(const json& j) {
  const std::string cls = get_string(j, "class");
  AuctionParams params;
  if (cls == "ama") {
    params = GeneralAma{number_array(require(j, "weights"), "'weights'"),
                        boosts_from(require(j, "boosts"))};
  } else if (cls == "vvca") {
    params = Vvca{number_array(require(j, "weights"), "'weights'"),
                  number_matrix(require(j, "c"), "'c'")};
  } else if (cls == "lambda") {
    params = LambdaAuction{boosts_from(require(j, "boosts"))};
  } else if (cls == "mba") {
    params = Mba{get_double(j, "c")};
  } else if (cls == "mbarp") {
    params = Mbarp{get_double(j, "c"),
                   number_array(require(j, "reserves"), "'reserves'")};
  } else {
    throw ValidationError("unknown auction class '" + cls + "'");
  }
  validate_auction(params);
  return params;
}

json auction_json(const AuctionParams& params) {
  json j;
  j["class"] = auction_class_name(params);
  if (const auto* ama = std::get_if<GeneralAma>(&params)) {
    j["weights"] = ama->weights;
    j["boosts"] = boosts_json(ama->boosts);
  } else if (const auto* vvca = std::get_if<Vvca>(&params)) {
    j["weights"] = vvca->weights;
    j["c"] = vvca->c;
  } else if (const auto* lambda = std::get_if<LambdaAuction>(&params)) {
    j["boosts"] = boosts_json(lambda->boosts);
  } else if (const auto* mba = std::get_if<Mba>(&params)) {
    j["c"] = mba->c;
  } else if (const auto* mbarp = std::get_if<Mbarp>(&params)) {
    j["c"] = mbarp->c;
    j["reserves"] = mbarp->reserves;
  }
  return j;
}

json claims_json(const std::vector<RevenueClaim>& claims) {
  json rows = json::array();
  for (const RevenueClaim& claim : claims) {
    json row;
    row["relation"] = claim.relation == ClaimRelation::Equal ? "=" : ">=";
    row["value"] = claim.value;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RevenueClaim> claims_from(const json& v) {
  if (!v.is_array()) {
    throw ValidationError("'claims' must be an array");
  }
  std::vector<RevenueClaim> out;
  out.reserve(v.size());
  for (const json& e : v) {
    const std::string relation = get_string(e, "relation");
    RevenueClaim claim;
    if (relation == "=") {
      claim.relation = ClaimRelation::Equal;
    } else if (relation == ">=") {
      claim.relation = ClaimRelation::AtLeast;
    } else {
      throw ValidationError("claim relation must be '=' or '>=', got '" +
                            relation + "'");
    }
    claim.value = get_double(e, "value");
    out.push_back(claim);
  }
  return out;
}

}  // namespace

ValuationProfile profile_from_json(const std::string& text) {
  return profile_from(parse_text(text));
}

std::string profile_to_json(const ValuationProfile& profile) {
  return dump(profile_json(profile));
}

SampleSet sample_set_from_json(const std::string& text) {
  const json j = parse_text(text);
  SampleSet sample;
  sample.seed = get_uint64(j, "seed");
  const json& profiles = require(j, "profiles");
  if (!profiles.is_array()) {
    throw ValidationError("'profiles' must be an array");
  }
  for (const json& p : profiles) sample.profiles.push_back(profile_from(p));
  return sample;
}

std::string sample_set_to_json(const SampleSet& sample) {
  json j;
  j["seed"] = sample.seed;
  json profiles = json::array();
  for (const ValuationProfile& p : sample.profiles) {
    profiles.push_back(profile_json(p));
  }
  j["profiles"] = std::move(profiles);
  return dump(j);
}

AuctionParams auction_from_json(const std::string& text) {
  return auction_from(parse_text(text));
}

std::string auction_to_json(const AuctionParams& params) {
  return dump(auction_json(params));
}

std::vector<AuctionParams> auction_list_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_array()) {
    throw ValidationError("expected a JSON array of auctions");
  }
  std::vector<AuctionParams> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(auction_from(e));
  return out;
}

std::string auction_list_to_json(const std::vector<AuctionParams>& list) {
  json j = json::array();
  for (const AuctionParams& params : list) j.push_back(auction_json(params));
  return dump(j);
}

std::string outcome_to_json(const AuctionOutcome& outcome) {
  json j;
  j["chosen"] = outcome.chosen;
  json assignee = json::array();
  for (std::uint8_t who : outcome.assignee) {
    assignee.push_back(static_cast<int>(who));
  }
  j["assignee"] = std::move(assignee);
  j["removed"] = outcome.removed;
  j["payments"] = outcome.payments;
  j["revenue"] = outcome.revenue;
  j["objective"] = outcome.objective;
  return dump(j);
}

std::string curve_to_json(const MbaRevenueCurve& curve) {
  json j;
  j["n"] = curve.n;
  j["m"] = curve.m;
  j["max_welfare"] = curve.max_welfare;
  j["best_grand"] = curve.best_grand;
  j["welfare_without"] = curve.welfare_without;
  j["grand_without"] = curve.grand_without;
  j["breakpoints"] = curve.breakpoints;
  j["c_star"] = curve.jump_at;
  j["value_after_jump"] = curve.value_after_jump;
  json segments = json::array();
  for (const CurveSegment& s : curve.segments) {
    json seg;
    seg["lo"] = s.lo;
    if (std::isfinite(s.hi)) {
      seg["hi"] = s.hi;
    } else {
      seg["hi"] = nullptr;
    }
    seg["slope"] = s.slope;
    seg["intercept"] = s.intercept;
    segments.push_back(std::move(seg));
  }
  j["segments"] = std::move(segments);
  return dump(j);
}

std::string mba_optimum_to_json(const MbaOptimum& optimum) {
  json j;
  j["c"] = optimum.c;
  j["value"] = optimum.value;
  j["attained"] = optimum.attained;
  return dump(j);
}

std::string search_result_to_json(const SearchResult& result) {
  json j;
  j["mean_revenue"] = result.mean_revenue;
  j["point"] = result.best_point;
  j["auction"] = auction_json(result.best);
  j["evaluations"] = result.evaluations;
  if (!result.trace.empty()) {
    json trace = json::array();
    for (const TracePoint& t : result.trace) {
      json entry;
      entry["point"] = t.point;
      entry["value"] = t.value;
      trace.push_back(std::move(entry));
    }
    j["trace"] = std::move(trace);
  }
  return dump(j);
}

SearchConfig search_config_from_json(
    const std::string& text, const std::vector<ValuationProfile>& sample,
    std::string* method) {
  const json j = parse_text(text);
  SearchConfig config =
      default_search_config(get_string(j, "class"), sample);
  if (method) {
    *method = j.contains("method") ? get_string(j, "method") : "grid";
  }

  const auto read_box = [&](const char* key, AxisInterval* box) {
    if (!j.contains(key)) return;
    const std::vector<double> pair = number_array(j.at(key), key);
    if (pair.size() != 2) {
      throw ValidationError(std::string("'") + key +
                            "' must be a [lo, hi] pair");
    }
    box->lo = pair[0];
    box->hi = pair[1];
  };
  read_box("c_box", &config.c_box);
  read_box("reserve_box", &config.reserve_box);
  read_box("weight_box", &config.weight_box);
  read_box("boost_box", &config.boost_box);

  if (j.contains("boost_pattern")) {
    const json& pattern = j.at("boost_pattern");
    if (!pattern.is_array()) {
      throw ValidationError("'boost_pattern' must be an array of indices");
    }
    config.boost_pattern.clear();
    for (const json& e : pattern) {
      if (!e.is_number_unsigned() &&
          !(e.is_number_integer() && e.get<std::int64_t>() >= 0)) {
        throw ValidationError(
            "'boost_pattern' must hold nonnegative allocation indices");
      }
      config.boost_pattern.push_back(e.get<std::uint64_t>());
    }
  }
  if (j.contains("vvca_pattern")) {
    const json& pattern = j.at("vvca_pattern");
    if (!pattern.is_array()) {
      throw ValidationError("'vvca_pattern' must be an array of pairs");
    }
    config.vvca_pattern.clear();
    for (const json& e : pattern) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !(e[1].is_number_unsigned() ||
            (e[1].is_number_integer() && e[1].get<std::int64_t>() >= 0))) {
        throw ValidationError(
            "'vvca_pattern' entries must be [bidder, bundle id] pairs");
      }
      config.vvca_pattern.emplace_back(e[0].get<int>(),
                                       e[1].get<std::uint32_t>());
    }
  }
  if (j.contains("resolution")) config.resolution = get_int(j, "resolution");
  if (j.contains("seed")) config.seed = get_uint64(j, "seed");
  if (j.contains("keep_trace")) {
    const json& v = j.at("keep_trace");
    if (!v.is_boolean()) {
      throw ValidationError("'keep_trace' must be a boolean");
    }
    config.keep_trace = v.get<bool>();
  }
  if (j.contains("local")) {
    const json& local = j.at("local");
    if (local.contains("restarts")) {
      config.local.restarts = get_int(local, "restarts");
    }
    if (local.contains("initial_step")) {
      config.local.initial_step = get_double(local, "initial_step");
    }
    if (local.contains("shrink")) {
      config.local.shrink = get_double(local, "shrink");
    }
    if (local.contains("min_step")) {
      config.local.min_step = get_double(local, "min_step");
    }
  }
  if (j.contains("extra_starts")) {
    config.extra_starts =
        number_matrix(j.at("extra_starts"), "'extra_starts'");
  }
  return config;
}

std::string trace_to_csv(const SearchResult& result) {
  std::string out = "iteration";
  const std::size_t dims =
      result.trace.empty() ? result.best_point.size()
                           : result.trace.front().point.size();
  for (std::size_t d = 0; d < dims; ++d) {
    out += ",x" + std::to_string(d);
  }
  out += ",value\n";
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    out += std::to_string(i);
    for (double x : result.trace[i].point) {
      out += ',';
      out += format_double(x);
    }
    out += ',';
    out += format_double(result.trace[i].value);
    out += '\n';
  }
  return out;
}

LowerBoundInstance lb_instance_from_json(const std::string& text) {
  const json j = parse_text(text);
  LowerBoundInstance instance;
  instance.family = lb_family_from_name(get_string(j, "family"));
  instance.n = get_int(j, "n");
  instance.m = get_int(j, "m");
  instance.gamma = get_double(j, "gamma");
  const json& profiles = require(j, "profiles");
  if (!profiles.is_array()) {
    throw ValidationError("'profiles' must be an array");
  }
  for (const json& p : profiles) {
    instance.profiles.push_back(profile_from(p));
  }
  instance.in_h = bitmask_from_hex(get_string(j, "h"),
                                   instance.profiles.size());
  if (j.contains("auction")) {
    instance.auction = auction_from(j.at("auction"));
  }
  if (j.contains("bundle_reserves")) {
    instance.bundle_reserves =
        number_array(j.at("bundle_reserves"), "'bundle_reserves'");
  }
  instance.claims = claims_from(require(j, "claims"));
  if (instance.claims.size() != instance.profiles.size()) {
    throw ValidationError("need exactly one claim per profile");
  }
  return instance;
}

std::string lb_instance_to_json(const LowerBoundInstance& instance) {
  json j;
  j["family"] = lb_family_name(instance.family);
  j["n"] = instance.n;
  j["m"] = instance.m;
  j["gamma"] = instance.gamma;
  j["h"] = bitmask_to_hex(instance.in_h);
  json profiles = json::array();
  for (const ValuationProfile& p : instance.profiles) {
    profiles.push_back(profile_json(p));
  }
  j["profiles"] = std::move(profiles);
  if (instance.auction) j["auction"] = auction_json(*instance.auction);
  if (!instance.bundle_reserves.empty()) {
    j["bundle_reserves"] = instance.bundle_reserves;
  }
  j["claims"] = claims_json(instance.claims);
  return dump(j);
}

std::string lb_report_to_json(const LowerBoundInstance& instance,
                              const LbReport& report) {
  json j;
  j["family"] = lb_family_name(instance.family);
  j["n"] = instance.n;
  j["m"] = instance.m;
  j["gamma"] = instance.gamma;
  j["h"] = bitmask_to_hex(instance.in_h);
  j["all_ok"] = report.all_ok;
  json rows = json::array();
  for (const LbRow& row : report.rows) {
    json r;
    r["index"] = row.index;
    r["in_h"] = row.in_h;
    r["revenue"] = row.revenue;
    r["relation"] = row.claim.relation == ClaimRelation::Equal ? "=" : ">=";
    r["value"] = row.claim.value;
    r["ok"] = row.ok;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return dump(j);
}

std::string lb_report_to_csv(const LbReport& report) {
  std::string out = "index,in_h,revenue,relation,value,ok\n";
  for (const LbRow& row : report.rows) {
    out += std::to_string(row.index);
    out += ',';
    out += row.in_h ? '1' : '0';
    out += ',';
    out += format_double(row.revenue);
    out += ',';
    out += row.claim.relation == ClaimRelation::Equal ? "=" : ">=";
    out += ',';
    out += format_double(row.claim.value);
    out += ',';
    out += row.ok ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string shatter_report_to_json(const ShatterInstance& instance,
                                   const ShatterReport& report) {
  const std::size_t count = instance.samples.size();
  json j;
  j["samples"] = count;
  j["witnesses"] = instance.witnesses;
  json auctions = json::array();
  for (const AuctionParams& params : instance.auctions) {
    auctions.push_back(auction_json(params));
  }
  j["auctions"] = std::move(auctions);
  j["revenue"] = report.revenue;
  json labelings = json::array();
  for (std::uint64_t mask : report.labelings) {
    json bits = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      bits.push_back(static_cast<int>((mask >> i) & 1));
    }
    labelings.push_back(std::move(bits));
  }
  j["labelings"] = std::move(labelings);
  j["achieved"] = report.labelings.size();
  j["shattered"] = report.shattered;
  return dump(j);
}

std::string rademacher_to_json(const RademacherEstimate& estimate) {
  json j;
  j["mean"] = estimate.mean;
  j["std_error"] = estimate.std_error;
  j["draws"] = estimate.draws;
  j["exact"] = estimate.exact;
  return dump(j);
}

std::string uc_report_to_json(const UcReport& report) {
  json j;
  j["seed"] = report.seed;
  j["reference_size"] = report.reference_size;
  j["grid_size"] = report.grid_size;
  json rows = json::array();
  for (const UcRow& row : report.rows) {
    json r;
    r["sample_size"] = row.sample_size;
    r["trials"] = row.trials;
    r["mean_sup_deviation"] = row.mean_sup_deviation;
    r["per_auction_mean_deviation"] = row.per_auction_mean_deviation;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return dump(j);
}

std::string uc_report_to_csv(const UcReport& report) {
  std::string out = "sample_size,trial,sup_deviation\n";
  for (const UcRow& row : report.rows) {
    for (std::size_t t = 0; t < row.per_trial_sup_deviation.size(); ++t) {
      out += std::to_string(row.sample_size);
      out += ',';
      out += std::to_string(t);
      out += ',';
      out += format_double(row.per_trial_sup_deviation[t]);
      out += '\n';
    }
  }
  return out;
}

std::string gap_result_to_json(const GapResult& result) {
  json j;
  j["n"] = result.n;
  j["m"] = result.m;
  j["gamma"] = result.gamma;
  j["n_train"] = result.n_train;
  j["seed"] = result.seed;
  j["family_size"] = result.family_size;
  j["train_indices"] = result.train_indices;
  j["empirical_revenue"] = result.empirical_revenue;
  j["expected_revenue"] = result.expected_revenue;
  j["gap"] = result.gap;
  return dump(j);
}

std::string bound_result_to_json(const BoundQuery& query,
                                 const BoundResult& result) {
  json j;
  j["kind"] = bound_kind_name(query.kind);
  j["n_samples"] = query.n_samples;
  j["value"] = result.value;
  j["order_of_magnitude"] = result.order_of_magnitude;
  return dump(j);
}

std::string format_double(double value) {
  char buffer[64];
  const std::to_chars_result res =
      std::to_chars(buffer, buffer + sizeof buffer, value,
                    std::chars_format::general, 12);
  return std::string(buffer, res.ptr);
}

std::string bitmask_to_hex(const std::vector<bool>& bits) {
  const std::size_t nibbles = (bits.size() + 3) / 4;
  std::string digits;
  for (std::size_t k = nibbles; k-- > 0;) {
    unsigned value = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t i = k * 4 + b;
      if (i < bits.size() && bits[i]) value |= 1u << b;
    }
    if (digits.empty() && value == 0 && k != 0) continue;
    digits.push_back("0123456789abcdef"[value]);
  }
  if (digits.empty()) digits = "0";
  return "0x" + digits;
}

std::vector<bool> bitmask_from_hex(const std::string& text, std::size_t size) {
  std::string_view digits = text;
  if (digits.size() >= 2 && digits[0] == '0' &&
      (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
  }
  if (digits.empty()) {
    throw ValidationError("empty subset mask '" + text + "'");
  }
  std::vector<bool> bits(size, false);
  for (std::size_t pos = 0; pos < digits.size(); ++pos) {
    const char ch = digits[digits.size() - 1 - pos];
    unsigned value = 0;
    if (ch >= '0' && ch <= '9') {
      value = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      value = static_cast<unsigned>(ch - 'a') + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      value = static_cast<unsigned>(ch - 'A') + 10;
    } else {
      throw ValidationError("subset mask '" + text +
                            "' is not a hex literal");
    }
    for (unsigned b = 0; b < 4; ++b) {
      if (!(value & (1u << b))) continue;
      const std::size_t i = pos * 4 + b;
      if (i >= size) {
        throw ValidationError("subset mask '" + text +
                              "' has bits beyond the catalogue size " +
                              std::to_string(size));
      }
      bits[i] = true;
    }
  }
  return bits;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw ValidationError("failed reading '" + path + "'");
  }
  return buffer.str();
}

void write_text_file_atomic(const std::string& path,
                            const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp + "' for writing");
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      throw std::runtime_error("failed writing '" + tmp + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw std::runtime_error("cannot move '" + tmp + "' over '" + path +
                             "': " + ec.message());
  }
}

}  // namespace amd
