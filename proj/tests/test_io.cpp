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

#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "amd/engine.hpp"
#include "amd/errors.hpp"
#include "amd/io.hpp"
#include "amd/learning.hpp"
#include "amd/lower_bounds.hpp"
#include "amd/search.hpp"
#include "amd/valuation.hpp"

namespace {

using namespace amd;
using nlohmann::json;

TEST_CASE("profile wire format, both spellings") {
  const ValuationProfile dense = profile_from_json(
      R"({"n": 2, "m": 2, "valuations": [[0,3,0,3],[0,0,4,4]]})");
  CHECK(dense.values[0] == std::vector<double>{0, 3, 0, 3});

  const ValuationProfile additive = profile_from_json(
      R"({"n": 2, "m": 2, "additive": [[3,0],[0,4]]})");
  CHECK(additive.values == dense.values);

  const std::string text = profile_to_json(dense);
  const ValuationProfile back = profile_from_json(text);
  CHECK(back.values == dense.values);

  const ValuationProfile capped = profile_from_json(
      R"({"n": 1, "m": 1, "valuations": [[0, 2]], "h_v": 5.0})");
  REQUIRE(capped.h_v.has_value());
  CHECK(*capped.h_v == 5.0);
}

TEST_CASE("profile parsing rejects malformed documents") {
  CHECK_THROWS_AS((void)profile_from_json("{"), ValidationError);
  CHECK_THROWS_AS((void)profile_from_json("[]"), ValidationError);
  CHECK_THROWS_AS((void)profile_from_json(R"({"n": 1, "m": 1})"),
                  ValidationError);
  // Exactly one of the two value spellings must appear.
  CHECK_THROWS_AS(
      (void)profile_from_json(
          R"({"n":1,"m":1,"valuations":[[0,1]],"additive":[[1]]})"),
      ValidationError);
  CHECK_THROWS_AS(
      (void)profile_from_json(R"({"n":1,"m":1,"valuations":[[0,1,2]]})"),
      ValidationError);
  CHECK_THROWS_AS(
      (void)profile_from_json(R"({"n":1,"m":1,"valuations":[[1,1]]})"),
      ValidationError);
}

TEST_CASE("sample-set wire format") {
  SampleSet sample;
  sample.seed = 7;
  sample.profiles = {make_profile(1, 1, {{0, 2}}),
                     make_profile(1, 1, {{0, 3}})};
  const SampleSet back = sample_set_from_json(sample_set_to_json(sample));
  CHECK(back.seed == 7);
  REQUIRE(back.profiles.size() == 2);
  CHECK(back.profiles[1].values == sample.profiles[1].values);

  CHECK_THROWS_AS((void)sample_set_from_json(R"({"profiles": []})"),
                  ValidationError);
}

TEST_CASE("auction wire format round-trips every class") {
  const std::vector<std::string> texts = {
      R"({"class":"ama","weights":[1,2],"boosts":{"dense":[0,0,0,0,0,0,0,0,1]}})",
      R"({"class":"ama","weights":[1,1],"boosts":{"sparse":[[4,1.5],[8,2.5]]}})",
      R"({"class":"vvca","weights":[1,1],"c":[[0,0,0,1],[0,0,0,1]]})",
      R"({"class":"lambda","boosts":{"sparse":[[0,2.0]]}})",
      R"({"class":"mba","c":1.5})",
      R"({"class":"mbarp","c":0.5,"reserves":[1,2]})",
  };
  const ValuationProfile p =
      make_profile(2, 2, {{0, 3, 1, 5}, {0, 2, 4, 6}});
  for (const std::string& text : texts) {
    const AuctionParams params = auction_from_json(text);
    const AuctionParams back = auction_from_json(auction_to_json(params));
    // Same revenue through the round trip is the behavioural check.
    CHECK(run_auction(back, p).revenue == run_auction(params, p).revenue);
  }

  const auto list = auction_list_from_json(
      R"([{"class":"mba","c":0},{"class":"mba","c":1}])");
  REQUIRE(list.size() == 2);

  CHECK_THROWS_AS((void)auction_from_json(R"({"class":"nope"})"),
                  ValidationError);
  CHECK_THROWS_AS((void)auction_from_json(R"({"class":"mba","c":-1})"),
                  ValidationError);
  CHECK_THROWS_AS(
      (void)auction_from_json(
          R"({"class":"lambda","boosts":{"dense":[0],"sparse":[]}})"),
      ValidationError);
}

TEST_CASE("outcome and curve serializers expose the documented fields") {
  const ValuationProfile p = make_profile(2, 1, {{0, 3}, {0, 5}});
  const AuctionParams vcg{GeneralAma{{1, 1}, BoostMap::zero()}};
  const json outcome =
      json::parse(outcome_to_json(run_auction(vcg, p)));
  CHECK(outcome["revenue"] == 3.0);
  CHECK(outcome["payments"][1] == 3.0);
  CHECK(outcome["assignee"][0] == 2);

  const json curve = json::parse(
      curve_to_json(build_mba_curve(make_profile(1, 1, {{0, 4}}))));
  CHECK(curve.contains("segments"));
  CHECK(curve.contains("c_star"));
  CHECK(curve.contains("value_after_jump"));
}

TEST_CASE("search config defaults come from the sample") {
  const std::vector<ValuationProfile> sample = {
      make_profile(2, 2, {{0, 3, 3, 3}, {0, 3, 3, 3}})};
  std::string method = "x";
  const SearchConfig defaults =
      search_config_from_json(R"({"class": "mba"})", sample, &method);
  CHECK(method == "grid");
  CHECK(defaults.auction_class == "mba");
  CHECK(defaults.c_box.hi == 6.0);

  const SearchConfig pinned = search_config_from_json(
      R"({"class": "mbarp", "method": "local", "c_box": [0, 2],
          "reserve_box": [0, 3], "resolution": 5, "seed": 9,
          "keep_trace": true, "local": {"restarts": 3}})",
      sample, &method);
  CHECK(method == "local");
  CHECK(pinned.c_box.hi == 2.0);
  CHECK(pinned.reserve_box.hi == 3.0);
  CHECK(pinned.resolution == 5);
  CHECK(pinned.seed == 9);
  CHECK(pinned.keep_trace);
  CHECK(pinned.local.restarts == 3);

  CHECK_THROWS_AS((void)search_config_from_json("{}", sample, &method),
                  ValidationError);
}

TEST_CASE("trace CSV lists iterations with one column per axis") {
  SearchConfig config;
  config.auction_class = "mba";
  config.c_box = {0.0, 3.0};
  config.resolution = 3;
  config.keep_trace = true;
  const SearchResult result = grid_search(
      config, {make_profile(2, 2, {{0, 3, 3, 3}, {0, 3, 3, 3}})});
  const std::string csv = trace_to_csv(result);
  CHECK(csv.rfind("iteration,x0,value\n", 0) == 0);
  CHECK(csv.find("\n3,3,6\n") != std::string::npos);
}

TEST_CASE("family report serializers") {
  const LowerBoundInstance instance =
      build_vvca_lb(3, 0.5, {true, false, true, false, true, false});
  const LbReport report = verify_lower_bound(instance);

  const json j = json::parse(lb_report_to_json(instance, report));
  CHECK(j["all_ok"] == true);
  CHECK(j["family"] == "vvca-lb");
  REQUIRE(j["rows"].is_array());
  CHECK(j["rows"].size() == 6);

  const std::string csv = lb_report_to_csv(report);
  CHECK(csv.rfind("index,in_h,revenue,relation,value,ok\n", 0) == 0);
  // Header plus one line per catalogue profile.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("instance JSON stores membership as a hex mask") {
  const LowerBoundInstance instance =
      build_vvca_lb(3, 0.5, {true, false, true, false, true, false});
  const json j = json::parse(lb_instance_to_json(instance));
  CHECK(j["h"] == "0x15");
  CHECK(j["profiles"].size() == 6);
}

TEST_CASE("deviation report CSV has one row per size and trial") {
  ProfileDistribution dist;
  dist.kind = PointMass{make_profile(1, 1, {{0, 2}})};
  std::vector<AuctionParams> grid = {AuctionParams{Mba{0.0}}};
  const UcReport report = uc_experiment(dist, grid, {5, 10}, 3, 100, 0);
  const std::string csv = uc_report_to_csv(report);
  CHECK(csv.rfind("sample_size,trial,sup_deviation\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 3);
  CHECK(csv.find("\n5,0,0\n") != std::string::npos);
  CHECK(csv.find("\n10,2,0\n") != std::string::npos);

  const json j = json::parse(uc_report_to_json(report));
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["sample_size"] == 5);
}

TEST_CASE("floating-point rendering is plain and capped at 12 digits") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(3.0) == "3");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(format_double(-2.25) == "-2.25");
  CHECK(format_double(1e300) == "1e+300");
}

TEST_CASE("hex membership masks") {
  const std::vector<bool> bits = {true, false, true, true};
  CHECK(bitmask_to_hex(bits) == "0xd");
  CHECK(bitmask_from_hex("0xd", 4) == bits);
  CHECK(bitmask_from_hex("d", 4) == bits);
  CHECK(bitmask_from_hex("0x0", 3) == std::vector<bool>{false, false, false});

  // 64+ element masks exercise the multi-word path.
  std::vector<bool> wide(70, false);
  wide[0] = wide[63] = wide[69] = true;
  CHECK(bitmask_from_hex(bitmask_to_hex(wide), 70) == wide);

  CHECK_THROWS_AS((void)bitmask_from_hex("0xg", 8), ValidationError);
  CHECK_THROWS_AS((void)bitmask_from_hex("", 8), ValidationError);
  // Bit 3 does not fit a 3-element vector.
  CHECK_THROWS_AS((void)bitmask_from_hex("0x8", 3), ValidationError);
}

TEST_CASE("atomic file writes leave no partials behind") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "amdlab-io-test";
  fs::create_directories(dir);
  const fs::path target = dir / "report.json";

  write_text_file_atomic(target.string(), "{\"a\": 1}\n");
  CHECK(read_text_file(target.string()) == "{\"a\": 1}\n");
  write_text_file_atomic(target.string(), "second\n");
  CHECK(read_text_file(target.string()) == "second\n");

  // No stray temporary next to the target.
  int entries = 0;
  for (const auto& it : fs::directory_iterator(dir)) {
    (void)it;
    ++entries;
  }
  CHECK(entries == 1);

  CHECK_THROWS((void)write_text_file_atomic(
      (dir / "missing" / "x.json").string(), "y"));
  CHECK_THROWS_AS((void)read_text_file((dir / "absent.json").string()),
                  ValidationError);
  fs::remove_all(dir);
}

}  // namespace
