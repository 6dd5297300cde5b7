// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: nine numbered criteria, one [PASS]/[FAIL] line each.
// Run with no arguments for all criteria, or name them: acceptance C4 C7.
// Exit code 0 iff every selected criterion passed.
//
// C1 is known-red. The asymptotic band it demands assumes the mean gap
// 1 + eps(B-1) is interchangeable with eps N^beta, but at N=1e4 and
// beta=0.2 the integer jump length (6 vs 6.31) plus the short-gap term
// leave a +23% finite-size offset, confirmed here by an exact linear
// solve printed next to the measurement. The criterion is implemented
// faithfully and reports its honest result.

#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "seedbank/genealogy.hpp"
#include "seedbank/io.hpp"
#include "seedbank/oracle.hpp"
#include "seedbank/params.hpp"
#include "seedbank/rng.hpp"
#include "seedbank/stats.hpp"
#include "seedbank/urn.hpp"

using namespace seedbank;

namespace {

const InitialDistribution kDelta0 = InitialDistribution::delta(0);

void detail(const char* format, ...) {
  va_list args;
  va_start(args, format);
  std::printf("         ");
  std::vprintf(format, args);
  std::printf("\n");
  va_end(args);
}

bool verdict(int criterion, bool passed, const std::string& line) {
  std::printf("[%s] C%d: %s\n", passed ? "PASS" : "FAIL", criterion,
              line.c_str());
  return passed;
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(const std::vector<std::int64_t>& values) {
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

double scaled_mean(const SampleSet& set) {
  double sum = 0.0;
  for (const double v : set.scaled) sum += v;
  return sum / static_cast<double>(set.scaled.size());
}

// C1: pair and five-sample coalescence at N=1e4, beta=0.2, eps=0.5.
// Scaled pair mean demanded within [0.9, 1.1]; five-sample scaled mean
// within 10% of 1.6. The exact pair expectation sits 23% above the band.
bool criterion1() {
  const SeedBankParams p = SeedBankParams::validated(10000, 0.2, 0.5);
  const std::int64_t reps = 5000;
  const std::uint64_t seed = 7;

  const SampleSet pair = run_replicates(p, 2, kDelta0, reps, stream_seed(seed, 2));
  const FitReport pair_fit = summarize(pair.scaled);
  const double pair_mean = pair_fit.mean;
  const double pair_se =
      pair_fit.std_error / std::sqrt(static_cast<double>(reps));
  const SampleSet five = run_replicates(p, 5, kDelta0, reps, stream_seed(seed, 5));
  const double five_mean = scaled_mean(five);

  // Exact finite-size value for the pair, from the joint-age linear solve;
  // N (1 + eps(B-1))^2 over eps^2 N^(1.4) in closed form.
  const double exact_pair = exact_expected_tmrca2(p, kDelta0);
  const double exact_scaled = exact_pair / p.kingman_scale();

  detail("pair scaled mean %.4f (se %.4f), band [0.90, 1.10]", pair_mean,
         pair_se);
  detail("exact solve: E[T] = %.1f generations, scaled %.5f", exact_pair,
         exact_scaled);
  detail("five-sample scaled mean %.4f, band [1.44, 1.76]", five_mean);
  detail("finite-size offset: mean gap 1+eps(B-1) = %.2f vs eps N^beta = %.4f;",
         p.mean_jump, p.epsilon * std::pow(10000.0, 0.2));
  detail("the squared ratio %.5f is the exact scaled mean, outside the band",
         exact_scaled);
  detail("for any correct sampler at this N; measurement agrees with the");
  detail("solve, so the miss is the band, not the simulation");

  const bool pair_ok = pair_mean >= 0.9 && pair_mean <= 1.1;
  const bool five_ok = five_mean >= 1.44 && five_mean <= 1.76;
  char line[160];
  std::snprintf(line, sizeof(line),
                "asymptotic bands at N=1e4: pair %.4f in [0.90,1.10] %s, "
                "five %.4f in [1.44,1.76] %s",
                pair_mean, pair_ok ? "yes" : "no", five_mean,
                five_ok ? "yes" : "no");
  return verdict(1, pair_ok && five_ok, line);
}

// C2: exponential fit of the scaled pair time at beta in {1/3, 1/2},
// eps in {0.25, 0.5}: KS-vs-Exponential(mean) above p = 0.01, and the
// fitted mean moves toward 1 as eps grows at fixed beta.
bool criterion2() {
  const std::uint64_t seed = 8;
  bool all_ok = true;
  char line[128];
  for (const double beta : {1.0 / 3.0, 0.5}) {
    double previous_gap = -1.0;
    for (const double eps : {0.25, 0.5}) {
      const SeedBankParams p = SeedBankParams::validated(10000, beta, eps);
      // Common master seed across eps at fixed beta: the trend comparison
      // reuses replicate streams, shrinking its variance.
      const SampleSet set = run_replicates(p, 2, kDelta0, 2000, seed);
      const FitReport fit = summarize(set.scaled);
      const double gap = std::abs(fit.mean - 1.0);
      const bool ks_ok = fit.ks_p_value > 0.01;
      const bool trend_ok = previous_gap < 0.0 || gap < previous_gap;
      detail("beta=%.4g eps=%.2f: mean %.4f |mean-1| %.4f ks_p %.4g%s%s",
             beta, eps, fit.mean, gap, fit.ks_p_value,
             ks_ok ? "" : " [ks fail]", trend_ok ? "" : " [trend fail]");
      all_ok = all_ok && ks_ok && trend_ok;
      previous_gap = gap;
    }
  }
  std::snprintf(line, sizeof(line),
                "exponential fit and eps-trend on 4 grid points");
  return verdict(2, all_ok, line);
}

// C3: the stationary law is an exact fixed point of the exact
// push-forward over 1e6 steps, and its zero mass is exactly the
// reciprocal mean gap.
bool criterion3() {
  bool all_ok = true;
  double worst = 0.0;
  for (const std::int64_t n : {100ll, 10000ll}) {
    for (const double beta : {0.2, 0.5}) {
      for (const double eps : {0.1, 0.5, 0.9}) {
        const SeedBankParams p = SeedBankParams::validated(n, beta, eps);
        const ExactDistribution nu = stationary_distribution(p);
        const ExactDistribution pushed = evolve_exact(nu, 1000000, p);
        double drift = 0.0;
        for (std::size_t k = 0; k < nu.mass.size(); ++k)
          drift = std::max(drift, std::abs(pushed.mass[k] - nu.mass[k]));
        worst = std::max(worst, drift);
        const bool fixed_ok = drift <= 1e-12;
        const bool zero_ok =
            nu.mass[0] ==
            1.0 / (1.0 + eps * static_cast<double>(p.jump_length - 1));
        if (!fixed_ok || !zero_ok)
          detail("n=%lld beta=%g eps=%g: drift %.3g zero_exact %s",
                 static_cast<long long>(n), beta, eps, drift,
                 zero_ok ? "yes" : "no");
        all_ok = all_ok && fixed_ok && zero_ok;
      }
    }
  }
  char line[128];
  std::snprintf(line, sizeof(line),
                "stationarity under 1e6 exact steps, worst drift %.3g "
                "(tol 1e-12), zero mass exact on all 12 points",
                worst);
  return verdict(3, all_ok, line);
}

// C4: three independent routes to the pair time agree on the full small
// grid: exact solve vs brute-force mean vs fast-sampler mean pairwise
// within 3 standard errors, plus a two-sample KS at n=5000.
bool criterion4() {
  const std::uint64_t seed = 6;
  const std::int64_t reps = 5000;
  bool all_ok = true;
  double worst_z = 0.0;
  int instance = 0;
  for (const std::int64_t n : {4ll, 20ll, 50ll}) {
    for (const std::int64_t b : {1ll, 2ll, 4ll}) {
      for (const double eps : {0.2, 0.5, 0.8}) {
        const SeedBankParams p = SeedBankParams::with_jump_length(n, b, eps);
        const double exact = exact_expected_tmrca2(p, kDelta0);

        std::vector<std::int64_t> brute(static_cast<std::size_t>(reps));
        for (std::int64_t i = 0; i < reps; ++i) {
          Rng rng(stream_seed(stream_seed(seed, static_cast<std::uint64_t>(2 * instance)),
                              static_cast<std::uint64_t>(i)));
          brute[static_cast<std::size_t>(i)] = brute_force_tmrca2(p, kDelta0, rng);
        }
        const SampleSet fast = run_replicates(
            p, 2, kDelta0, reps,
            stream_seed(seed, static_cast<std::uint64_t>(2 * instance + 1)));
        ++instance;

        const MeanSe mb = mean_se(brute);
        const MeanSe mf = mean_se(fast.values);
        const double z_brute = std::abs(mb.mean - exact) / mb.se;
        const double z_fast = std::abs(mf.mean - exact) / mf.se;
        const double z_pair = std::abs(mb.mean - mf.mean) /
                              std::sqrt(mb.se * mb.se + mf.se * mf.se);
        const double z = std::max({z_brute, z_fast, z_pair});
        worst_z = std::max(worst_z, z);
        if (z > 3.0) {
          detail("n=%lld B=%lld eps=%g: exact %.4g z_brute %.2f z_fast %.2f "
                 "z_pair %.2f",
                 static_cast<long long>(n), static_cast<long long>(b), eps,
                 exact, z_brute, z_fast, z_pair);
          all_ok = false;
        }
      }
    }
  }

  // Distribution-level agreement at one representative instance.
  const SeedBankParams p = SeedBankParams::with_jump_length(50, 4, 0.5);
  std::vector<double> brute(5000);
  for (std::size_t i = 0; i < brute.size(); ++i) {
    Rng rng(stream_seed(stream_seed(seed, 999), static_cast<std::uint64_t>(i)));
    brute[i] = static_cast<double>(brute_force_tmrca2(p, kDelta0, rng));
  }
  const SampleSet fast =
      run_replicates(p, 2, kDelta0, 5000, stream_seed(seed, 1000));
  std::vector<double> fastd(fast.values.size());
  for (std::size_t i = 0; i < fastd.size(); ++i)
    fastd[i] = static_cast<double>(fast.values[i]);
  const KsResult ks = ks_two_sample(brute, fastd);
  detail("ks brute-vs-fast at n=50 B=4 eps=0.5: D %.4f p %.4g", ks.statistic,
         ks.p_value);
  all_ok = all_ok && ks.p_value > 0.01;

  char line[128];
  std::snprintf(line, sizeof(line),
                "oracle triangle on 27 instances, worst z %.2f (limit 3), "
                "ks p %.3g (floor 0.01)",
                worst_z, ks.p_value);
  return verdict(4, all_ok, line);
}

// C5: the empirical pair mean clears the coarse lower bound
// max(eps N^(1+beta), N) on every grid point used by C1 and C2.
bool criterion5() {
  struct Point {
    double beta;
    double eps;
    std::uint64_t master;
    std::int64_t reps;
  };
  // The exact replicate streams of C1 and C2.
  const std::vector<Point> points = {
      {0.2, 0.5, stream_seed(7, 2), 5000},
      {1.0 / 3.0, 0.25, 8, 2000},
      {1.0 / 3.0, 0.5, 8, 2000},
      {0.5, 0.25, 8, 2000},
      {0.5, 0.5, 8, 2000},
  };
  bool all_ok = true;
  for (const Point& point : points) {
    const SeedBankParams p =
        SeedBankParams::validated(10000, point.beta, point.eps);
    const SampleSet set =
        run_replicates(p, 2, kDelta0, point.reps, point.master);
    const MeanSe m = mean_se(set.values);
    const double bound =
        std::max(point.eps * std::pow(10000.0, 1.0 + point.beta), 10000.0);
    const bool ok = m.mean >= bound;
    detail("beta=%.4g eps=%.2f: mean %.0f >= bound %.0f %s (ratio %.2f)",
           point.beta, point.eps, m.mean, bound, ok ? "yes" : "no",
           m.mean / bound);
    all_ok = all_ok && ok;
  }
  return verdict(5, all_ok, "pair mean clears max(eps N^(1+beta), N) on all "
                            "C1/C2 grid points");
}

// C6: exact TV decay from the worst deterministic start is nonincreasing
// and crosses 1/4 within N^(3 beta + 0.1) steps.
bool criterion6() {
  bool all_ok = true;
  for (const std::int64_t n : {1000ll, 10000ll}) {
    for (const double beta : {0.1, 0.2}) {
      const SeedBankParams p = SeedBankParams::validated(n, beta, 0.5);
      const double bound = std::pow(static_cast<double>(n), 3.0 * beta + 0.1);
      const auto steps = static_cast<std::int64_t>(std::ceil(bound));
      const auto curve = tv_decay_curve(
          InitialDistribution::delta(p.jump_length - 1), steps, p);
      bool monotone = true;
      for (std::size_t i = 1; i < curve.size(); ++i)
        monotone = monotone && curve[i].tv <= curve[i - 1].tv + 1e-15;
      std::int64_t first = -1;
      for (const TvCurvePoint& point : curve) {
        if (point.tv <= 0.25) {
          first = point.step;
          break;
        }
      }
      const bool ok = monotone && first >= 0 &&
                      static_cast<double>(first) <= bound;
      detail("n=%lld beta=%g: first step with tv<=1/4 is %lld, bound %.1f, "
             "monotone %s",
             static_cast<long long>(n), beta, static_cast<long long>(first),
             bound, monotone ? "yes" : "no");
      all_ok = all_ok && ok;
    }
  }
  return verdict(6, all_ok,
                 "exact tv decay monotone, crossing before N^(3 beta + 0.1) "
                 "on all 4 points");
}

// C7: multiple and simultaneous mergers are rare at N=1e4 and rarer at
// N=1e5 (five-sample genealogy, fraction of merger events).
bool criterion7() {
  const SeedBankParams p4 = SeedBankParams::validated(10000, 0.2, 0.5);
  const SeedBankParams p5 = SeedBankParams::validated(100000, 0.2, 0.5);
  const std::uint64_t seed = 41;

  MergerTally tally4;
  run_replicates(p4, 5, kDelta0, 10000, stream_seed(seed, 4), 1, {}, &tally4);
  const double frac4 = static_cast<double>(tally4.multiple_mergers +
                                           tally4.simultaneous_mergers) /
                       static_cast<double>(tally4.total());

  MergerTally tally5;
  run_replicates(p5, 5, kDelta0, 1000, stream_seed(seed, 5), 1, {}, &tally5);
  const double frac5 = static_cast<double>(tally5.multiple_mergers +
                                           tally5.simultaneous_mergers) /
                       static_cast<double>(tally5.total());

  detail("N=1e4: %lld multiple + %lld simultaneous of %lld events "
         "(fraction %.3g)",
         static_cast<long long>(tally4.multiple_mergers),
         static_cast<long long>(tally4.simultaneous_mergers),
         static_cast<long long>(tally4.total()), frac4);
  detail("N=1e5: %lld multiple + %lld simultaneous of %lld events "
         "(fraction %.3g)",
         static_cast<long long>(tally5.multiple_mergers),
         static_cast<long long>(tally5.simultaneous_mergers),
         static_cast<long long>(tally5.total()), frac5);

  const bool ok = frac4 < 0.01 && frac5 < frac4;
  char line[128];
  std::snprintf(line, sizeof(line),
                "non-binary merger fraction %.3g < 1%% at N=1e4 and drops "
                "to %.3g at N=1e5",
                frac4, frac5);
  return verdict(7, ok, line);
}

// C8: a Geometric(q) number of iid Geometric(p) gaps sums to a
// Geometric(pq) variable; this composition is what lets the pair sampler
// skip between meeting checkpoints.
bool criterion8() {
  Rng rng(80);
  const double p = 0.1, q = 0.1;
  GeometricSampler gaps(p);
  GeometricSampler count(q);
  std::vector<std::int64_t> totals(100000);
  for (auto& total : totals) {
    const std::int64_t k = count.draw(rng);
    std::int64_t sum = 0;
    for (std::int64_t j = 0; j < k; ++j) sum += gaps.draw(rng);
    total = sum;
  }
  const KsResult ks = ks_geometric(totals, p * q);
  char line[128];
  std::snprintf(line, sizeof(line),
                "geometric composition ks p %.3g (floor 0.01) at n=1e5",
                ks.p_value);
  return verdict(8, ks.p_value > 0.01, line);
}

// C9: identical (config, seed) gives byte-identical serialized output at
// any thread count.
bool criterion9() {
  const SeedBankParams p = SeedBankParams::validated(2000, 0.25, 0.4);
  bool all_ok = true;

  const SampleSet one = run_replicates(p, 5, kDelta0, 400, 90, 1);
  const SampleSet four = run_replicates(p, 5, kDelta0, 400, 90, 4);
  const SampleSet rerun = run_replicates(p, 5, kDelta0, 400, 90, 3);

  const FitReport fit = summarize(one.scaled);
  const Histogram hist = histogram(one.scaled, 30);
  const std::string csv = sample_set_csv(one);
  all_ok = all_ok && csv == sample_set_csv(four);
  all_ok = all_ok && csv == sample_set_csv(rerun);
  all_ok = all_ok &&
           sample_set_json(one, fit, hist).dump() ==
               sample_set_json(four, summarize(four.scaled),
                               histogram(four.scaled, 30)).dump();

  // And through the filesystem, as the CLI writes them.
  write_text_file("acceptance_c9_a.csv", sample_set_csv(one));
  write_text_file("acceptance_c9_b.csv", sample_set_csv(four));
  const bool files_equal =
      read_text_file("acceptance_c9_a.csv") == read_text_file("acceptance_c9_b.csv");
  std::remove("acceptance_c9_a.csv");
  std::remove("acceptance_c9_b.csv");
  all_ok = all_ok && files_equal;

  const SampleSet pair1 = run_replicates(p, 2, kDelta0, 4000, 91, 1);
  const SampleSet pair4 = run_replicates(p, 2, kDelta0, 4000, 91, 4);
  all_ok = all_ok && pair1.values == pair4.values &&
           pair1.scaled == pair4.scaled;

  return verdict(9, all_ok,
                 "serialized outputs byte-identical across threads "
                 "{1, 3, 4} and reruns");
}

}  // namespace

int main(int argc, char** argv) {
  bool selected[10] = {};
  if (argc <= 1) {
    for (int c = 1; c <= 9; ++c) selected[c] = true;
  } else {
    for (int i = 1; i < argc; ++i) {
      const char* arg = argv[i];
      if ((arg[0] == 'C' || arg[0] == 'c') && arg[1] >= '1' && arg[1] <= '9' &&
          arg[2] == '\0') {
        selected[arg[1] - '0'] = true;
      } else {
        std::fprintf(stderr, "unknown criterion '%s' (use C1..C9)\n", arg);
        return 2;
      }
    }
  }

  bool (*criteria[10])() = {nullptr,    criterion1, criterion2, criterion3,
                            criterion4, criterion5, criterion6, criterion7,
                            criterion8, criterion9};
  bool all_ok = true;
  for (int c = 1; c <= 9; ++c) {
    if (!selected[c]) continue;
    bool ok = false;
    try {
      ok = criteria[c]();
    } catch (const std::exception& e) {
      std::printf("[FAIL] C%d: exception: %s\n", c, e.what());
    }
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
