// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes: 0 success, 1 usage or parameter
// error, 2 runtime failure (budget, solver, I/O), 3 verification failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seedbank/errors.hpp"
#include "seedbank/genealogy.hpp"
#include "seedbank/io.hpp"
#include "seedbank/oracle.hpp"
#include "seedbank/params.hpp"
#include "seedbank/stats.hpp"
#include "seedbank/urn.hpp"
#include "seedbank/verification.hpp"

namespace {

using seedbank::DimensionError;
using seedbank::DomainError;
using seedbank::InitialDistribution;
using seedbank::SeedBankParams;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    items.push_back(text.substr(pos, comma - pos));
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return items;
}

std::vector<std::int64_t> parse_int_list(const std::string& text,
                                         const std::string& flag) {
  std::vector<std::int64_t> out;
  for (const std::string& item : split_list(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError(flag + ": bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw DomainError(flag + ": empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& flag) {
  std::vector<double> out;
  for (const std::string& item : split_list(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError(flag + ": bad number '" + item + "'");
    }
  }
  if (out.empty()) throw DomainError(flag + ": empty list");
  return out;
}

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string grid_tag(const SeedBankParams& p) {
  return "n" + std::to_string(p.population_size) + "_beta" + fmt_g(p.beta) +
         "_eps" + fmt_g(p.epsilon);
}

void ensure_out_dir(const std::string& out) {
  if (out.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  if (ec) throw seedbank::IoError("cannot create output directory: " + out);
}

void advise_if_beyond_kingman(const SeedBankParams& p) {
  if (p.beta >= 0.25) {
    std::cout << "note: beta=" << fmt_g(p.beta)
              << " is outside the Kingman regime (beta < 1/4); the scaled "
                 "limit need not hold\n";
  }
}

struct TmrcaConfig {
  std::string n_list = "10000";
  std::string beta_list = "0.2";
  std::string eps_list = "0.5";
  int m = 2;
  std::string gamma = "d0";
  std::int64_t replicates = 1000;
  std::uint64_t seed = 1;
  int bins = 40;
  std::string out;
  std::string format = "csv";
  std::int64_t max_events = 10'000'000'000;
  int threads = 0;
};

int run_tmrca(const TmrcaConfig& cfg) {
  bool renormalized = false;
  const InitialDistribution gamma =
      InitialDistribution::parse(cfg.gamma, &renormalized);
  if (renormalized)
    std::cerr << "warning: gamma weights off from 1 by less than 1e-6; "
                 "renormalized\n";
  const auto ns = parse_int_list(cfg.n_list, "--n");
  const auto betas = parse_double_list(cfg.beta_list, "--beta");
  const auto epss = parse_double_list(cfg.eps_list, "--eps");
  ensure_out_dir(cfg.out);
  seedbank::SimLimits limits;
  limits.max_events = cfg.max_events;

  std::printf("%10s %8s %6s %6s %3s %10s %10s %10s %9s\n", "N", "beta", "eps",
              "B", "m", "mean", "std_error", "ks_p", "replicates");
  std::uint64_t grid_index = 0;
  for (const std::int64_t n : ns) {
    for (const double beta : betas) {
      for (const double eps : epss) {
        const SeedBankParams params = SeedBankParams::validated(n, beta, eps);
        gamma.validate_for(params);
        advise_if_beyond_kingman(params);

        const std::uint64_t grid_master = seedbank::stream_seed(cfg.seed, grid_index);
        ++grid_index;
        seedbank::MergerTally tally;
        const seedbank::SampleSet set = seedbank::run_replicates(
            params, cfg.m, gamma, cfg.replicates, grid_master, cfg.threads,
            limits, &tally);
        const seedbank::FitReport fit = seedbank::summarize(set.scaled);
        const seedbank::Histogram hist = seedbank::histogram(set.scaled, cfg.bins);

        std::printf("%10lld %8s %6s %6lld %3d %10.4f %10.4f %10.4g %9lld\n",
                    static_cast<long long>(n), fmt_g(beta).c_str(),
                    fmt_g(eps).c_str(),
                    static_cast<long long>(params.jump_length), cfg.m,
                    fit.mean, fit.std_error, fit.ks_p_value,
                    static_cast<long long>(cfg.replicates));
        if (cfg.m > 2) {
          std::printf(
              "           mergers: double=%lld multiple=%lld simultaneous=%lld\n",
              static_cast<long long>(tally.double_mergers),
              static_cast<long long>(tally.multiple_mergers),
              static_cast<long long>(tally.simultaneous_mergers));
        }

        if (!cfg.out.empty()) {
          const std::string stem =
              cfg.out + "/tmrca_" + grid_tag(params) + "_m" + std::to_string(cfg.m);
          if (cfg.format == "json") {
            seedbank::write_text_file(
                stem + ".json",
                seedbank::sample_set_json(set, fit, hist).dump(2) + "\n");
          } else {
            seedbank::write_text_file(stem + ".csv", seedbank::sample_set_csv(set));
            seedbank::write_text_file(stem + ".fit.csv", seedbank::fit_csv(set, fit));
            seedbank::write_text_file(stem + ".hist.csv",
                                      seedbank::histogram_csv(set, hist));
          }
        }
      }
    }
  }
  return 0;
}

struct MixingConfig {
  std::string n_list = "10000";
  std::string beta_list = "0.2";
  std::string eps_list = "0.5";
  std::string gamma = "worst";
  std::int64_t max_steps = 0;  // 0: ceil(N^(3 beta + 0.1))
  double tail_tol = 1e-6;
  std::string out;
  std::string format = "csv";
  std::int64_t max_cells = 2'000'000'000;
};

int run_mixing(const MixingConfig& cfg) {
  const auto ns = parse_int_list(cfg.n_list, "--n");
  const auto betas = parse_double_list(cfg.beta_list, "--beta");
  const auto epss = parse_double_list(cfg.eps_list, "--eps");
  ensure_out_dir(cfg.out);
  seedbank::ComputeBudget budget;
  budget.max_cells = cfg.max_cells;

  std::printf("%10s %8s %6s %6s %12s %12s %14s %12s\n", "N", "beta", "eps",
              "B", "bound", "first<=1/4", "geo_tv", "tail");
  for (const std::int64_t n : ns) {
    for (const double beta : betas) {
      for (const double eps : epss) {
        const SeedBankParams params = SeedBankParams::validated(n, beta, eps);
        const InitialDistribution gamma =
            cfg.gamma == "worst"
                ? InitialDistribution::delta(params.jump_length - 1)
                : InitialDistribution::parse(cfg.gamma);
        gamma.validate_for(params);

        const double bound =
            std::pow(static_cast<double>(n), 3.0 * beta + 0.1);
        std::int64_t steps = cfg.max_steps;
        if (steps <= 0) steps = static_cast<std::int64_t>(std::ceil(bound));

        seedbank::MixingResult result;
        result.params = params;
        result.gamma = gamma;
        result.curve = seedbank::tv_decay_curve(gamma, steps, params, budget);
        result.first_step_below_quarter = -1;
        for (const seedbank::TvCurvePoint& point : result.curve) {
          if (point.tv <= 0.25) {
            result.first_step_below_quarter = point.step;
            break;
          }
        }
        result.geometric =
            seedbank::geometric_time_tv(gamma, params, cfg.tail_tol, budget);

        std::printf("%10lld %8s %6s %6lld %12.1f %12lld %14.6g %12.3g\n",
                    static_cast<long long>(n), fmt_g(beta).c_str(),
                    fmt_g(eps).c_str(),
                    static_cast<long long>(params.jump_length), bound,
                    static_cast<long long>(result.first_step_below_quarter),
                    result.geometric.tv, result.geometric.tail_bound);

        if (!cfg.out.empty()) {
          const std::string stem = cfg.out + "/mixing_" + grid_tag(params);
          const seedbank::ExactDistribution nu =
              seedbank::stationary_distribution(params);
          if (cfg.format == "json") {
            nlohmann::ordered_json j = seedbank::mixing_json(result);
            j["stationary"] = nu.mass;
            seedbank::write_text_file(stem + ".json", j.dump(2) + "\n");
          } else {
            seedbank::write_text_file(stem + ".csv", seedbank::mixing_csv(result));
            seedbank::write_text_file(
                stem + ".stationary.csv",
                seedbank::distribution_csv(params, nu, "stationary"));
          }
        }
      }
    }
  }
  return 0;
}

struct VerifyConfig {
  bool quick = false;
  std::uint64_t seed = 3;
  int threads = 0;
  bool inject_fault = false;
  std::string out = "verify_report.json";
};

int run_verify(const VerifyConfig& cfg) {
  seedbank::VerifyOptions options;
  options.quick = cfg.quick;
  options.seed = cfg.seed;
  options.threads = cfg.threads;
  options.inject_epsilon_fault = cfg.inject_fault;

  const std::vector<seedbank::CheckResult> results =
      seedbank::run_verification(options);
  for (const seedbank::CheckResult& r : results) {
    std::printf("[%s] %-38s %s\n", r.passed ? "ok" : "FAIL", r.name.c_str(),
                r.details.c_str());
  }
  const bool ok = seedbank::all_passed(results);
  std::printf("%s: %zu checks\n", ok ? "PASS" : "FAIL", results.size());
  if (!cfg.out.empty()) {
    seedbank::write_text_file(
        cfg.out,
        seedbank::verification_json(cfg.seed, cfg.quick, results).dump(2) + "\n");
  }
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seed-bank coalescent simulator and exact-analysis toolkit"};
  app.require_subcommand(1);

  TmrcaConfig tmrca;
  CLI::App* cmd_tmrca =
      app.add_subcommand("tmrca", "simulate coalescence times on a parameter grid");
  cmd_tmrca->add_option("--n", tmrca.n_list, "population sizes, comma separated")
      ->envname("SEEDBANK_N");
  cmd_tmrca->add_option("--beta", tmrca.beta_list, "jump exponents, comma separated")
      ->envname("SEEDBANK_BETA");
  cmd_tmrca->add_option("--eps", tmrca.eps_list, "long-jump probabilities, comma separated")
      ->envname("SEEDBANK_EPS");
  cmd_tmrca->add_option("--m", tmrca.m, "sample size (>= 2)")
      ->check(CLI::Range(2, 1000000))
      ->envname("SEEDBANK_M");
  cmd_tmrca->add_option("--gamma", tmrca.gamma,
                        "initial distribution: d<k>, uniform:<k>, stationary, or s:w,...")
      ->envname("SEEDBANK_GAMMA");
  cmd_tmrca->add_option("--replicates", tmrca.replicates, "replicates per grid point")
      ->check(CLI::Range(static_cast<std::int64_t>(1),
                         static_cast<std::int64_t>(1'000'000'000)))
      ->envname("SEEDBANK_REPLICATES");
  cmd_tmrca->add_option("--seed", tmrca.seed, "master seed")->envname("SEEDBANK_SEED");
  cmd_tmrca->add_option("--bins", tmrca.bins, "histogram bins")
      ->check(CLI::Range(1, 100000))
      ->envname("SEEDBANK_BINS");
  cmd_tmrca->add_option("--out", tmrca.out, "output directory (no files if empty)")
      ->envname("SEEDBANK_OUT");
  cmd_tmrca->add_option("--format", tmrca.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("SEEDBANK_FORMAT");
  cmd_tmrca->add_option("--max-events", tmrca.max_events,
                        "per-replicate renewal event cap")
      ->check(CLI::Range(static_cast<std::int64_t>(1),
                         static_cast<std::int64_t>(1'000'000'000'000'000)))
      ->envname("SEEDBANK_MAX_EVENTS");
  cmd_tmrca->add_option("--threads", tmrca.threads, "worker threads (0 = auto)")
      ->check(CLI::Range(0, 4096))
      ->envname("SEEDBANK_THREADS");

  MixingConfig mixing;
  CLI::App* cmd_mixing =
      app.add_subcommand("mixing", "exact total-variation mixing diagnostics");
  cmd_mixing->add_option("--n", mixing.n_list, "population sizes, comma separated")
      ->envname("SEEDBANK_N");
  cmd_mixing->add_option("--beta", mixing.beta_list, "jump exponents, comma separated")
      ->envname("SEEDBANK_BETA");
  cmd_mixing->add_option("--eps", mixing.eps_list, "long-jump probabilities, comma separated")
      ->envname("SEEDBANK_EPS");
  cmd_mixing->add_option("--gamma", mixing.gamma,
                         "initial distribution ('worst' = delta at B-1)")
      ->envname("SEEDBANK_GAMMA");
  cmd_mixing->add_option("--steps", mixing.max_steps,
                         "curve length (0: ceil(N^(3 beta + 0.1)))")
      ->envname("SEEDBANK_STEPS");
  cmd_mixing->add_option("--tail-tol", mixing.tail_tol,
                         "geometric-time truncation tail tolerance")
      ->envname("SEEDBANK_TAIL_TOL");
  cmd_mixing->add_option("--out", mixing.out, "output directory (no files if empty)")
      ->envname("SEEDBANK_OUT");
  cmd_mixing->add_option("--format", mixing.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("SEEDBANK_FORMAT");
  cmd_mixing->add_option("--max-cells", mixing.max_cells,
                         "exact-analysis cell budget")
      ->envname("SEEDBANK_MAX_CELLS");

  VerifyConfig verify;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "cross-check the samplers against the exact oracles");
  cmd_verify->add_flag("--quick", verify.quick, "reduced grid, finishes in seconds");
  cmd_verify->add_option("--seed", verify.seed, "verification seed")
      ->envname("SEEDBANK_SEED");
  cmd_verify->add_option("--threads", verify.threads, "worker threads (0 = auto)")
      ->check(CLI::Range(0, 4096))
      ->envname("SEEDBANK_THREADS");
  cmd_verify->add_flag("--inject-fault", verify.inject_fault,
                       "negative control: skew epsilon in the fast sampler");
  cmd_verify->add_option("--out", verify.out, "JSON report path ('' = none)")
      ->envname("SEEDBANK_VERIFY_OUT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_tmrca->parsed()) return run_tmrca(tmrca);
    if (cmd_mixing->parsed()) return run_mixing(mixing);
    return run_verify(verify);
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DimensionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
