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

#include "commands.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "amd/engine.hpp"
#include "amd/errors.hpp"
#include "amd/io.hpp"
#include "amd/learning.hpp"
#include "amd/lower_bounds.hpp"
#include "amd/mba_curve.hpp"
#include "amd/parallel.hpp"
#include "amd/sampling.hpp"
#include "amd/search.hpp"

namespace amd {
namespace {

// Print to stdout, or write atomically when a path was given.
void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::fputs(content.c_str(), stdout);
  } else {
    write_text_file_atomic(out_path, content);
  }
}

std::vector<AuctionParams> make_grand_discount_grid(int count, double lo,
                                                    double hi) {
  if (count < 1) {
    throw ValidationError("grid needs at least one point");
  }
  if (!(lo <= hi)) {
    throw ValidationError("grid bounds must satisfy lo <= hi");
  }
  std::vector<AuctionParams> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double c =
        count == 1 ? lo
                   : lo + (static_cast<double>(i) * (hi - lo)) /
                             static_cast<double>(count - 1);
    grid.push_back(AuctionParams{Mba{c}});
  }
  return grid;
}

struct GridFlags {
  std::string grid_file;
  int mba_count = 0;
  double mba_lo = 0.0;
  double mba_hi = 4.0;
};

void add_grid_flags(CLI::App* cmd, GridFlags* flags) {
  cmd->add_option("--grid-file", flags->grid_file,
                  "JSON array of auctions forming the comparison grid");
  cmd->add_option("--mba-grid", flags->mba_count,
                  "use a grand-discount grid with this many points instead");
  cmd->add_option("--mba-lo", flags->mba_lo,
                  "smallest discount in --mba-grid (default 0)");
  cmd->add_option("--mba-hi", flags->mba_hi,
                  "largest discount in --mba-grid (default 4)");
}

std::vector<AuctionParams> load_grid(const GridFlags& flags) {
  const bool has_file = !flags.grid_file.empty();
  const bool has_mba = flags.mba_count > 0;
  if (has_file == has_mba) {
    throw ValidationError(
        "give exactly one of --grid-file or --mba-grid");
  }
  if (has_file) {
    return auction_list_from_json(read_text_file(flags.grid_file));
  }
  return make_grand_discount_grid(flags.mba_count, flags.mba_lo, flags.mba_hi);
}

int cmd_run_auction(const std::string& auction_path,
                    const std::string& profile_path,
                    const std::string& out_path) {
  const AuctionParams params =
      auction_from_json(read_text_file(auction_path));
  const ValuationProfile profile =
      profile_from_json(read_text_file(profile_path));
  emit(out_path, outcome_to_json(run_auction(params, profile)));
  return 0;
}

int cmd_curve(const std::string& profile_path, const std::string& out_path) {
  const ValuationProfile profile =
      profile_from_json(read_text_file(profile_path));
  emit(out_path, curve_to_json(build_mba_curve(profile)));
  return 0;
}

int cmd_optimize(const std::string& config_path,
                 const std::string& sample_path, const std::string& out_path,
                 const std::string& trace_path) {
  const SampleSet sample =
      sample_set_from_json(read_text_file(sample_path));
  std::string method;
  SearchConfig config = search_config_from_json(
      read_text_file(config_path), sample.profiles, &method);
  if (!trace_path.empty()) config.keep_trace = true;

  if (method == "exact") {
    if (config.auction_class != "mba") {
      throw ValidationError(
          "exact optimization is only available for the mba class");
    }
    const MbaOptimum optimum =
        optimize_mba(sample.profiles, config.c_box.hi);
    emit(out_path, mba_optimum_to_json(optimum));
    return 0;
  }

  SearchResult result;
  if (method == "grid") {
    result = grid_search(config, sample.profiles);
  } else if (method == "local") {
    result = local_search_mbarp(config, sample.profiles);
  } else {
    throw ValidationError("unknown method '" + method +
                          "'; expected grid, local, or exact");
  }
  if (!trace_path.empty()) {
    write_text_file_atomic(trace_path, trace_to_csv(result));
  }
  emit(out_path, search_result_to_json(result));
  return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& family,
               int n, int m, double gamma, std::uint64_t subset_seed,
               const std::string& emit_instance_path,
               const std::string& format, const std::string& out_path) {
  LowerBoundInstance instance;
  if (!instance_path.empty()) {
    instance = lb_instance_from_json(read_text_file(instance_path));
  } else {
    const LbFamily kind = lb_family_from_name(family);
    std::size_t size = 0;
    switch (kind) {
      case LbFamily::LambdaDense:
        size = lambda_lb_size(n, m);
        break;
      case LbFamily::VvcaSplit:
        size = vvca_lb_size(m);
        break;
      case LbFamily::BundleReserve:
        size = bundle_reserve_lb_size(m);
        break;
    }
    const std::vector<bool> in_h = random_subset(size, subset_seed);
    switch (kind) {
      case LbFamily::LambdaDense:
        instance = build_lambda_lb(n, m, gamma, in_h);
        break;
      case LbFamily::VvcaSplit:
        instance = build_vvca_lb(m, gamma, in_h);
        break;
      case LbFamily::BundleReserve:
        instance = build_bundle_reserve_lb(m, gamma, in_h);
        break;
    }
  }
  if (!emit_instance_path.empty()) {
    write_text_file_atomic(emit_instance_path, lb_instance_to_json(instance));
  }

  const LbReport report = verify_lower_bound(instance);
  if (format == "csv") {
    emit(out_path, lb_report_to_csv(report));
  } else {
    emit(out_path, lb_report_to_json(instance, report));
  }
  return report.all_ok ? 0 : 1;
}

int cmd_shatter(const std::string& name, int n, int m,
                const std::string& out_path) {
  const ShatterInstance instance = builtin_shatter_instance(name, n, m);
  const ShatterReport report = check_shattering(instance);

  std::string text = "witnesses:";
  for (double z : instance.witnesses) {
    text += ' ';
    text += format_double(z);
  }
  text += '\n';
  for (std::size_t a = 0; a < report.revenue.size(); ++a) {
    text += 'A' + std::to_string(a) + ':';
    for (double r : report.revenue[a]) {
      text += ' ';
      text += format_double(r);
    }
    text += '\n';
  }
  const std::uint64_t want = std::uint64_t{1} << instance.samples.size();
  text += "labelings achieved: " + std::to_string(report.labelings.size()) +
          " of " + std::to_string(want) + '\n';
  text += std::string("shattered: ") +
          (report.shattered ? "true" : "false") + '\n';
  std::fputs(text.c_str(), stdout);

  if (!out_path.empty()) {
    write_text_file_atomic(out_path, shatter_report_to_json(instance, report));
  }
  return report.shattered ? 0 : 1;
}

struct DistFlags {
  std::string kind = "iid";
  int n = 2;
  int m = 2;
  double item_ceiling = 1.0;
  std::string profile_path;
  std::string sample_path;
};

void add_dist_flags(CLI::App* cmd, DistFlags* flags) {
  cmd->add_option("--dist", flags->kind,
                  "profile distribution: iid, point, or finite")
      ->check(CLI::IsMember({"iid", "point", "finite"}));
  cmd->add_option("--n", flags->n, "bidders for --dist iid (default 2)");
  cmd->add_option("--m", flags->m, "items for --dist iid (default 2)");
  cmd->add_option("--item-ceiling", flags->item_ceiling,
                  "per-item value ceiling for --dist iid (default 1)");
  cmd->add_option("--profile", flags->profile_path,
                  "profile JSON for --dist point");
  cmd->add_option("--sample", flags->sample_path,
                  "sample-set JSON whose profiles form --dist finite");
}

ProfileDistribution load_distribution(const DistFlags& flags,
                                      std::uint64_t seed) {
  ProfileDistribution dist;
  dist.seed = seed;
  if (flags.kind == "iid") {
    dist.kind = IidUniformAdditive{flags.n, flags.m, flags.item_ceiling};
  } else if (flags.kind == "point") {
    if (flags.profile_path.empty()) {
      throw ValidationError("--dist point needs --profile");
    }
    dist.kind =
        PointMass{profile_from_json(read_text_file(flags.profile_path))};
  } else {
    if (flags.sample_path.empty()) {
      throw ValidationError("--dist finite needs --sample");
    }
    dist.kind = UniformFiniteSet{
        sample_set_from_json(read_text_file(flags.sample_path)).profiles};
  }
  validate_distribution(dist);
  return dist;
}

int cmd_uc(const DistFlags& dist_flags, const GridFlags& grid_flags,
           std::vector<int> sizes, int trials, int ref_size,
           std::uint64_t seed, const std::string& format,
           const std::string& out_path) {
  const ProfileDistribution dist = load_distribution(dist_flags, seed);
  const std::vector<AuctionParams> grid = load_grid(grid_flags);
  if (ref_size == 0) {
    int largest = 0;
    for (int s : sizes) largest = std::max(largest, s);
    ref_size = 10 * largest;
  }
  const UcReport report =
      uc_experiment(dist, grid, sizes, trials, ref_size, seed);
  if (format == "json") {
    emit(out_path, uc_report_to_json(report));
  } else {
    emit(out_path, uc_report_to_csv(report));
  }
  return 0;
}

int cmd_rademacher(const std::string& sample_path,
                   const GridFlags& grid_flags, std::uint64_t draws,
                   std::uint64_t seed, const std::string& out_path) {
  const SampleSet sample =
      sample_set_from_json(read_text_file(sample_path));
  const std::vector<AuctionParams> grid = load_grid(grid_flags);
  emit(out_path,
       rademacher_to_json(empirical_rademacher(sample, grid, draws, seed)));
  return 0;
}

int cmd_gap(int n, int m, double gamma, int n_train, std::uint64_t seed,
            const std::string& out_path) {
  emit(out_path, gap_result_to_json(
                     lambda_gap_experiment(n, m, gamma, n_train, seed)));
  return 0;
}

int cmd_bounds(const BoundQuery& query, const std::string& out_path) {
  emit(out_path, bound_result_to_json(query, eval_bound(query)));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Deterministic multi-item auction laboratory: evaluate "
               "weighted boosted auctions, search their parameter spaces, "
               "and run the sample-complexity experiment suite.",
               "amdlab"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads,
                 "cap worker threads, 0 = all hardware threads")
      ->check(CLI::NonNegativeNumber);

  // run-auction
  std::string run_auction_path, run_profile_path, run_out;
  CLI::App* run = app.add_subcommand(
      "run-auction", "Evaluate one auction on one valuation profile");
  run->fallthrough();
  run->add_option("--auction", run_auction_path, "auction JSON file")
      ->required();
  run->add_option("--profile", run_profile_path, "profile JSON file")
      ->required();
  run->add_option("--out", run_out, "write outcome JSON here (default stdout)");

  // curve
  std::string curve_profile_path, curve_out;
  CLI::App* curve = app.add_subcommand(
      "curve",
      "Piecewise-linear revenue of the grand-discount auction as a "
      "function of c, for one profile");
  curve->fallthrough();
  curve->add_option("--profile", curve_profile_path, "profile JSON file")
      ->required();
  curve->add_option("--out", curve_out, "write curve JSON here");

  // optimize
  std::string opt_config_path, opt_sample_path, opt_out, opt_trace;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Maximize mean revenue over a sample (grid, local, or "
                  "exact method per the config file)");
  optimize->fallthrough();
  optimize->add_option("--config", opt_config_path, "search config JSON")
      ->required();
  optimize->add_option("--sample", opt_sample_path, "sample-set JSON")
      ->required();
  optimize->add_option("--out", opt_out, "write result JSON here");
  optimize->add_option("--trace-csv", opt_trace,
                       "also write an evaluation trace CSV here");

  // verify
  std::string ver_instance, ver_family, ver_emit, ver_out;
  std::string ver_format = "json";
  int ver_n = 0, ver_m = 0;
  double ver_gamma = 0.5;
  std::uint64_t ver_subset_seed = 0;
  CLI::App* verify = app.add_subcommand(
      "verify", "Build (or load) a hard-instance catalogue and check every "
                "promised revenue against the engine");
  verify->fallthrough();
  CLI::Option* ver_instance_opt = verify->add_option(
      "--instance", ver_instance, "load a serialized instance JSON");
  verify->add_option("--family", ver_family,
                     "family: lambda-lb, vvca-lb, or bundle-reserve-lb")
      ->excludes(ver_instance_opt);
  verify->add_option("--n", ver_n, "bidders (lambda-lb only)");
  verify->add_option("--m", ver_m, "items");
  verify->add_option("--gamma", ver_gamma,
                     "revenue knob in (0,1) (default 0.5)");
  verify->add_option("--subset-seed", ver_subset_seed,
                     "seed for the random H subset (default 0)")
      ->envname("AMD_SEED");
  verify->add_option("--emit-instance", ver_emit,
                     "write the built instance JSON here");
  verify->add_option("--format", ver_format, "report format (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", ver_out, "write the report here");

  // shatter
  std::string sh_name = "mba-table1", sh_out;
  int sh_n = 2, sh_m = 2;
  CLI::App* shatter = app.add_subcommand(
      "shatter", "Print the revenue matrix of a built-in shattering "
                 "certificate and check all labelings are realized");
  shatter->fallthrough();
  shatter->add_option("--instance", sh_name,
                      "certificate name (default mba-table1)");
  shatter->add_option("--n", sh_n, "bidders (default 2)");
  shatter->add_option("--m", sh_m, "items (default 2)");
  shatter->add_option("--out", sh_out, "write report JSON here");

  // uc
  DistFlags uc_dist;
  GridFlags uc_grid;
  std::vector<int> uc_sizes;
  int uc_trials = 10, uc_ref = 0;
  std::uint64_t uc_seed = 0;
  std::string uc_format = "csv", uc_out;
  CLI::App* uc = app.add_subcommand(
      "uc", "Sample-size sweep of |empirical - reference| mean revenue, "
            "maximized over an auction grid");
  uc->fallthrough();
  add_dist_flags(uc, &uc_dist);
  add_grid_flags(uc, &uc_grid);
  uc->add_option("--sizes", uc_sizes, "sample sizes, e.g. 100,400,1600")
      ->required()
      ->delimiter(',');
  uc->add_option("--trials", uc_trials, "trials per size (default 10)");
  uc->add_option("--ref-size", uc_ref,
                 "reference sample size (default 10x the largest size)");
  uc->add_option("--seed", uc_seed, "experiment seed (default 0)")
      ->envname("AMD_SEED");
  uc->add_option("--format", uc_format, "csv or json (default csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  uc->add_option("--out", uc_out, "write the report here");

  // rademacher
  std::string rad_sample, rad_out;
  GridFlags rad_grid;
  std::uint64_t rad_draws = 0, rad_seed = 0;
  CLI::App* rademacher = app.add_subcommand(
      "rademacher", "Sign-symmetrized complexity of an auction grid on a "
                    "fixed sample (exact for small samples)");
  rademacher->fallthrough();
  rademacher->add_option("--sample", rad_sample, "sample-set JSON")
      ->required();
  add_grid_flags(rademacher, &rad_grid);
  rademacher->add_option(
      "--draws", rad_draws,
      "Monte Carlo sign draws; 0 = exact enumeration (default)");
  rademacher->add_option("--seed", rad_seed, "draw seed (default 0)")
      ->envname("AMD_SEED");
  rademacher->add_option("--out", rad_out, "write estimate JSON here");

  // gap
  int gap_n = 0, gap_m = 0, gap_train = 0;
  double gap_gamma = 0.5;
  std::uint64_t gap_seed = 0;
  std::string gap_out;
  CLI::App* gap = app.add_subcommand(
      "gap", "Train-vs-population revenue gap of a catalogue-tuned "
             "boost-table auction");
  gap->fallthrough();
  gap->add_option("--n", gap_n, "bidders")->required();
  gap->add_option("--m", gap_m, "items")->required();
  gap->add_option("--gamma", gap_gamma, "revenue knob in (0,1)");
  gap->add_option("--train", gap_train, "training subset size")->required();
  gap->add_option("--seed", gap_seed, "subset seed (default 0)")
      ->envname("AMD_SEED");
  gap->add_option("--out", gap_out, "write result JSON here");

  // bounds
  BoundQuery query;
  std::string bounds_kind, bounds_out;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "Evaluate a deviation or near-optimality bound formula");
  bounds->fallthrough();
  bounds->add_option("--kind", bounds_kind,
                     "pseudo, rademacher, ama-rademacher, erm-additive, or "
                     "erm-multiplicative")
      ->required();
  bounds->add_option("--d", query.d, "class dimension (pseudo)");
  bounds->add_option("--c", query.c, "range bound of the class (default 1)");
  bounds->add_option("--samples", query.n_samples, "sample count N")
      ->required();
  bounds->add_option("--delta", query.delta,
                     "failure probability (default 0.1)");
  bounds->add_option("--r-n", query.r_n, "complexity at size N (rademacher)");
  bounds->add_option("--epsilon", query.epsilon,
                     "uniform-convergence slack (erm)");
  bounds->add_option("--rho", query.rho, "additive optimisation slack");
  bounds->add_option("--alpha", query.alpha,
                     "relative optimisation slack in [0,1)");
  bounds->add_option("--l-star", query.l_star, "optimal expected loss");
  bounds->add_option("--bidders", query.n, "bidders (ama-rademacher)");
  bounds->add_option("--items", query.m, "items (ama-rademacher)");
  bounds->add_option("--w-lo", query.h_w_lo, "smallest admissible weight");
  bounds->add_option("--w-hi", query.h_w_hi, "largest admissible weight");
  bounds->add_option("--boost-cap", query.h_lambda, "boost magnitude cap");
  bounds->add_option("--value-cap", query.h_v, "valuation cap");
  bounds->add_option("--out", bounds_out, "write result JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  set_max_threads(threads);
  try {
    if (run->parsed()) {
      return cmd_run_auction(run_auction_path, run_profile_path, run_out);
    }
    if (curve->parsed()) {
      return cmd_curve(curve_profile_path, curve_out);
    }
    if (optimize->parsed()) {
      return cmd_optimize(opt_config_path, opt_sample_path, opt_out,
                          opt_trace);
    }
    if (verify->parsed()) {
      if (ver_instance.empty() && ver_family.empty()) {
        std::fputs("verify needs --instance or --family\n", stderr);
        return 2;
      }
      return cmd_verify(ver_instance, ver_family, ver_n, ver_m, ver_gamma,
                        ver_subset_seed, ver_emit, ver_format, ver_out);
    }
    if (shatter->parsed()) {
      return cmd_shatter(sh_name, sh_n, sh_m, sh_out);
    }
    if (uc->parsed()) {
      return cmd_uc(uc_dist, uc_grid, uc_sizes, uc_trials, uc_ref, uc_seed,
                    uc_format, uc_out);
    }
    if (rademacher->parsed()) {
      return cmd_rademacher(rad_sample, rad_grid, rad_draws, rad_seed,
                            rad_out);
    }
    if (gap->parsed()) {
      return cmd_gap(gap_n, gap_m, gap_gamma, gap_train, gap_seed, gap_out);
    }
    if (bounds->parsed()) {
      query.kind = bound_kind_from_name(bounds_kind);
      return cmd_bounds(query, bounds_out);
    }
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  std::fputs("no subcommand given\n", stderr);
  return 2;
}

}  // namespace amd
