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

#ifndef AMD_IO_HPP
#define AMD_IO_HPP

#include <string>
#include <vector>

#include "amd/auction.hpp"
#include "amd/engine.hpp"
#include "amd/learning.hpp"
#include "amd/lower_bounds.hpp"
#include "amd/mba_curve.hpp"
#include "amd/sampling.hpp"
#include "amd/search.hpp"
#include "amd/valuation.hpp"

namespace amd {

// JSON wire formats.  Parsers throw ValidationError on malformed text or
// documents that fail domain validation; serializers emit two-space-indented
// JSON with a trailing newline and deterministic key order.
//
// Profile:   {"n": 2, "m": 2, "valuations": [[0,3,0,3],[0,0,4,4]]}
//            or {"n": 2, "m": 2, "additive": [[3,0],[0,4]]}
// SampleSet: {"seed": 7, "profiles": [<profile>, ...]}
// Auction:   {"class": "ama", "weights": [...], "boosts": {...}}
//            {"class": "vvca", "weights": [...], "c": [[...]]}
//            {"class": "lambda", "boosts": {...}}
//            {"class": "mba", "c": 2.0}
//            {"class": "mbarp", "c": 1.0, "reserves": [...]}
// where boosts is {"dense": [...]} or {"sparse": [[index, value], ...]}.

ValuationProfile profile_from_json(const std::string& text);
std::string profile_to_json(const ValuationProfile& profile);

SampleSet sample_set_from_json(const std::string& text);
std::string sample_set_to_json(const SampleSet& sample);

AuctionParams auction_from_json(const std::string& text);
std::string auction_to_json(const AuctionParams& params);

// A JSON array of auction objects.
std::vector<AuctionParams> auction_list_from_json(const std::string& text);
std::string auction_list_to_json(const std::vector<AuctionParams>& list);

std::string outcome_to_json(const AuctionOutcome& outcome);
std::string curve_to_json(const MbaRevenueCurve& curve);
std::string mba_optimum_to_json(const MbaOptimum& optimum);
std::string search_result_to_json(const SearchResult& result);

// Search configuration JSON: {"class": "mbarp", "method": "local", ...}.
// Boxes and knobs not present in the document keep the sample-derived
// defaults.  `method` receives "grid", "local", or "exact" (default "grid").
SearchConfig search_config_from_json(
    const std::string& text, const std::vector<ValuationProfile>& sample,
    std::string* method);
// "iteration,x0,...,value" rows from a traced search.
std::string trace_to_csv(const SearchResult& result);

LowerBoundInstance lb_instance_from_json(const std::string& text);
std::string lb_instance_to_json(const LowerBoundInstance& instance);
std::string lb_report_to_json(const LowerBoundInstance& instance,
                              const LbReport& report);
// "index,in_h,revenue,relation,value,ok" rows.
std::string lb_report_to_csv(const LbReport& report);

std::string shatter_report_to_json(const ShatterInstance& instance,
                                   const ShatterReport& report);

std::string rademacher_to_json(const RademacherEstimate& estimate);
std::string uc_report_to_json(const UcReport& report);
// One line per (sample size, trial): "sample_size,trial,sup_deviation".
std::string uc_report_to_csv(const UcReport& report);
std::string gap_result_to_json(const GapResult& result);
std::string bound_result_to_json(const BoundQuery& query,
                                 const BoundResult& result);

// Shortest-width decimal rendering with up to 12 significant digits,
// independent of the global locale.
std::string format_double(double value);

// Membership vectors as hex literals ("0x1f"); bit i of the value is
// element i.  Parsing rejects bits at or beyond `size`.
std::string bitmask_to_hex(const std::vector<bool>& bits);
std::vector<bool> bitmask_from_hex(const std::string& text, std::size_t size);

// Whole-file helpers.  Writing goes through a sibling temporary file and an
// atomic rename so readers never observe a partial document.
std::string read_text_file(const std::string& path);
void write_text_file_atomic(const std::string& path,
                            const std::string& content);

}  // namespace amd

#endif  // AMD_IO_HPP
