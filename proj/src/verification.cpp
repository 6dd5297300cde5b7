// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0

#include "seedbank/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <span>

#include "seedbank/genealogy.hpp"
#include "seedbank/oracle.hpp"
#include "seedbank/params.hpp"
#include "seedbank/rng.hpp"
#include "seedbank/stats.hpp"
#include "seedbank/urn.hpp"

namespace seedbank {

namespace {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(std::span<const std::int64_t> values) {
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (const std::int64_t v : values) sum += static_cast<double>(v);
  const double mean = sum / n;
  double ss = 0.0;
  for (const std::int64_t v : values) {
    const double d = static_cast<double>(v) - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / (n - 1.0)) / std::sqrt(n)};
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0,
                double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c, d);
  return buf;
}

double skewed_epsilon(double epsilon) {
  return std::min(0.95, epsilon * 1.35 + 0.03);
}

std::vector<double> to_doubles(const std::vector<std::int64_t>& values) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[i] = static_cast<double>(values[i]);
  return out;
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  const auto add = [&](std::string name, bool passed, std::string details) {
    results.push_back({std::move(name), passed, std::move(details)});
  };
  const InitialDistribution start = InitialDistribution::delta(0);

  const std::vector<std::int64_t> grid_n =
      options.quick ? std::vector<std::int64_t>{4, 20}
                    : std::vector<std::int64_t>{4, 20, 50};
  const std::vector<std::int64_t> grid_b =
      options.quick ? std::vector<std::int64_t>{1, 2}
                    : std::vector<std::int64_t>{1, 2, 4};
  const std::vector<double> grid_eps =
      options.quick ? std::vector<double>{0.2, 0.8}
                    : std::vector<double>{0.2, 0.5, 0.8};
  const std::int64_t reps = options.quick ? 1500 : 4000;

  // Three routes to the pair time on every grid instance: the exact
  // first-step solve anchors two mean checks and the two samplers are
  // compared head to head. The grid carries ~80 z statistics, so the
  // per-check limit is 4 to keep the familywise false-alarm rate near
  // 0.5% for arbitrary seeds; the injected epsilon fault lands at z > 5.
  constexpr double kZLimit = 4.0;
  int instance = 0;
  for (const std::int64_t n : grid_n) {
    for (const std::int64_t b : grid_b) {
      for (const double eps : grid_eps) {
        const SeedBankParams params =
            SeedBankParams::with_jump_length(n, b, eps);
        const SeedBankParams fast_params =
            options.inject_epsilon_fault
                ? SeedBankParams::with_jump_length(n, b, skewed_epsilon(eps))
                : params;
        const double exact = exact_expected_tmrca2(params, start);

        const std::uint64_t brute_master =
            stream_seed(options.seed, static_cast<std::uint64_t>(2 * instance));
        std::vector<std::int64_t> brute(static_cast<std::size_t>(reps));
        for (std::int64_t i = 0; i < reps; ++i) {
          Rng rng(stream_seed(brute_master, static_cast<std::uint64_t>(i)));
          brute[static_cast<std::size_t>(i)] =
              brute_force_tmrca2(params, start, rng);
        }
        const MeanSe mb = mean_se(brute);

        const SampleSet fast = run_replicates(
            fast_params, 2, start, reps,
            stream_seed(options.seed, static_cast<std::uint64_t>(2 * instance + 1)),
            options.threads);
        const MeanSe mf = mean_se(fast.values);

        const double z_brute = std::abs(mb.mean - exact) / mb.se;
        const double z_fast = std::abs(mf.mean - exact) / mf.se;
        const double z_pair = std::abs(mb.mean - mf.mean) /
                              std::sqrt(mb.se * mb.se + mf.se * mf.se);
        const bool ok =
            z_brute <= kZLimit && z_fast <= kZLimit && z_pair <= kZLimit;
        char name[64];
        std::snprintf(name, sizeof(name), "triangle/n%lld_b%lld_e%g",
                      static_cast<long long>(n), static_cast<long long>(b),
                      eps);
        add(name, ok,
            fmt("exact=%.6g z_brute=%.2f z_fast=%.2f z_pair=%.2f", exact,
                z_brute, z_fast, z_pair));
        ++instance;
      }
    }
  }

  // Distribution-level comparison of the two samplers at one instance.
  {
    const std::int64_t n = options.quick ? 20 : 50;
    const std::int64_t b = options.quick ? 2 : 4;
    const std::int64_t ks_reps = options.quick ? 1500 : 5000;
    const SeedBankParams params = SeedBankParams::with_jump_length(n, b, 0.5);
    const SeedBankParams fast_params =
        options.inject_epsilon_fault
            ? SeedBankParams::with_jump_length(n, b, skewed_epsilon(0.5))
            : params;
    const std::uint64_t brute_master = stream_seed(options.seed, 1001);
    std::vector<std::int64_t> brute(static_cast<std::size_t>(ks_reps));
    for (std::int64_t i = 0; i < ks_reps; ++i) {
      Rng rng(stream_seed(brute_master, static_cast<std::uint64_t>(i)));
      brute[static_cast<std::size_t>(i)] =
          brute_force_tmrca2(params, start, rng);
    }
    const SampleSet fast =
        run_replicates(fast_params, 2, start, ks_reps,
                       stream_seed(options.seed, 1002), options.threads);
    const std::vector<double> da = to_doubles(brute);
    const std::vector<double> db = to_doubles(fast.values);
    const KsResult ks = ks_two_sample(da, db);
    add("triangle/ks_brute_vs_fast", ks.p_value >= 0.001,
        fmt("D=%.4f p=%.4g n=%g", ks.statistic, ks.p_value,
            static_cast<double>(ks_reps)));
  }

  // The event-driven process restricted to two lines must match the
  // skip-ahead sampler in distribution.
  {
    const std::int64_t n = options.quick ? 20 : 50;
    const std::int64_t b = options.quick ? 2 : 4;
    const std::int64_t ks_reps = options.quick ? 1500 : 4000;
    const SeedBankParams params = SeedBankParams::with_jump_length(n, b, 0.5);
    const SeedBankParams fast_params =
        options.inject_epsilon_fault
            ? SeedBankParams::with_jump_length(n, b, skewed_epsilon(0.5))
            : params;
    const std::uint64_t process_master = stream_seed(options.seed, 1003);
    std::vector<std::int64_t> process(static_cast<std::size_t>(ks_reps));
    for (std::int64_t i = 0; i < ks_reps; ++i) {
      Rng rng(stream_seed(process_master, static_cast<std::uint64_t>(i)));
      process[static_cast<std::size_t>(i)] =
          simulate_ancestral_process(params, 2, start, rng).final_time;
    }
    const SampleSet fast =
        run_replicates(fast_params, 2, start, ks_reps,
                       stream_seed(options.seed, 1004), options.threads);
    const std::vector<double> da = to_doubles(process);
    const std::vector<double> db = to_doubles(fast.values);
    const KsResult ks = ks_two_sample(da, db);
    add("triangle/ks_process_vs_fast", ks.p_value >= 0.001,
        fmt("D=%.4f p=%.4g n=%g", ks.statistic, ks.p_value,
            static_cast<double>(ks_reps)));
  }

  // Stationarity is a fixed point of the exact push-forward.
  {
    bool ok = true;
    double worst = 0.0;
    for (const std::int64_t b : {1, 2, 7, 40}) {
      for (const double eps : {0.1, 0.5, 0.9}) {
        const SeedBankParams params =
            SeedBankParams::with_jump_length(1000, b, eps);
        const ExactDistribution nu = stationary_distribution(params);
        const double tv = total_variation(evolve_exact(nu, 1, params), nu);
        worst = std::max(worst, tv);
        ok = ok && tv <= 1e-14;
      }
    }
    add("property/stationary_fixed_point", ok, fmt("worst_tv=%.3g", worst));
  }

  // Exact TV to stationarity never increases along the chain.
  {
    const SeedBankParams params = SeedBankParams::with_jump_length(100, 8, 0.3);
    const auto curve = tv_decay_curve(
        InitialDistribution::delta(params.jump_length - 1), 400, params);
    bool ok = true;
    for (std::size_t i = 1; i < curve.size(); ++i)
      ok = ok && curve[i].tv <= curve[i - 1].tv + 1e-12;
    add("property/tv_monotone", ok,
        fmt("tv0=%.4f tv_end=%.3g", curve.front().tv, curve.back().tv));
  }

  // A Geometric(q)-fold sum of iid Geometric(p) variables is Geometric(pq).
  {
    const double p = 0.2;
    const double q = 0.35;
    const std::int64_t n = options.quick ? 30000 : 100000;
    Rng rng(stream_seed(options.seed, 1005));
    const GeometricSampler inner(p);
    const GeometricSampler outer(q);
    std::vector<std::int64_t> sums(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      const std::int64_t count = outer.draw(rng);
      std::int64_t total = 0;
      for (std::int64_t j = 0; j < count; ++j) total += inner.draw(rng);
      sums[static_cast<std::size_t>(i)] = total;
    }
    const KsResult ks = ks_geometric(sums, p * q);
    const MeanSe ms = mean_se(sums);
    const double z = std::abs(ms.mean - 1.0 / (p * q)) / ms.se;
    add("property/geometric_composition", ks.p_value >= 0.001 && z <= 4.0,
        fmt("D=%.4f p=%.4g mean_z=%.2f", ks.statistic, ks.p_value, z));
  }

  // Generation gaps take only the values 1 and jump_length, the long one
  // with frequency epsilon.
  {
    const SeedBankParams params = SeedBankParams::with_jump_length(1000, 7, 0.37);
    const std::int64_t n = options.quick ? 50000 : 200000;
    Rng rng(stream_seed(options.seed, 1006));
    std::int64_t longs = 0;
    bool values_ok = true;
    for (std::int64_t i = 0; i < n; ++i) {
      const std::int64_t gap = sample_increment(params, rng);
      if (gap == params.jump_length) {
        ++longs;
      } else if (gap != 1) {
        values_ok = false;
      }
    }
    const double freq = static_cast<double>(longs) / static_cast<double>(n);
    const double se =
        std::sqrt(0.37 * 0.63 / static_cast<double>(n));
    add("property/increment_law", values_ok && std::abs(freq - 0.37) <= 4 * se,
        fmt("freq=%.4f target=%.4f se=%.5f", freq, 0.37, se));
  }

  // Kingman total tree height for m = 5 has mean 2(1 - 1/5).
  {
    const std::int64_t n = options.quick ? 5000 : 20000;
    Rng rng(stream_seed(options.seed, 1007));
    std::vector<double> totals(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      double total = 0.0;
      for (const KingmanLevel& level : kingman_simulate(5, rng))
        total += level.holding_time;
      totals[static_cast<std::size_t>(i)] = total;
    }
    const FitReport fit = summarize(totals);
    const double se = fit.std_error / std::sqrt(static_cast<double>(n));
    const double z = std::abs(fit.mean - 1.6) / se;
    add("property/kingman_height", z <= 4.0,
        fmt("mean=%.4f target=1.6 z=%.2f", fit.mean, z));
  }

  // Replicate output must not depend on the thread count, and scaling is
  // the exact elementwise division by the Kingman divisor.
  {
    const SeedBankParams params = SeedBankParams::with_jump_length(200, 3, 0.4);
    const std::uint64_t master = stream_seed(options.seed, 1008);
    const SampleSet one = run_replicates(params, 2, start, 4000, master, 1);
    const SampleSet three = run_replicates(params, 2, start, 4000, master, 3);
    const SampleSet again = run_replicates(params, 2, start, 4000, master, 1);
    bool ok = one.values == three.values && one.values == again.values &&
              one.scaled == three.scaled;
    const double scale = params.kingman_scale();
    for (std::size_t i = 0; i < one.values.size(); ++i)
      ok = ok && one.scaled[i] == static_cast<double>(one.values[i]) / scale;
    add("property/replicate_determinism", ok,
        fmt("replicates=%g threads={1,3}", 4000.0));
  }

  return results;
}

}  // namespace seedbank
