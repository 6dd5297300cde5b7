// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "seedbank/errors.hpp"
#include "seedbank/rng.hpp"
#include "seedbank/stats.hpp"

using namespace seedbank;

TEST_SUITE("stats") {

TEST_CASE("summarize reports sample moments") {
  const std::vector<double> values = {1.0, 2.0, 3.0};
  const FitReport fit = summarize(values);
  CHECK(fit.mean == doctest::Approx(2.0).epsilon(1e-15));
  // std_error is the sample standard deviation, the scale diagnostic for
  // an exponential fit (sd equals mean under the fitted law).
  CHECK(fit.std_error == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fit.n == 3);
  CHECK(fit.ks_statistic > 0.0);
}

TEST_CASE("summarize input contract") {
  CHECK_THROWS_AS(summarize(std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(summarize(std::vector<double>{1.0}), DomainError);
  CHECK_THROWS_AS(summarize(std::vector<double>{1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(summarize(std::vector<double>{1.0, -2.0}), DomainError);
}

TEST_CASE("summarize on a true exponential sample") {
  Rng rng(11);
  std::vector<double> values(50000);
  for (auto& v : values) v = rng.exponential(2.5);
  const FitReport fit = summarize(values);
  CHECK(std::abs(fit.mean - 2.5) <= 4.0 * 2.5 / std::sqrt(50000.0));
  // Exponential: sd tracks the mean.
  CHECK(fit.std_error == doctest::Approx(fit.mean).epsilon(0.05));
  CHECK(fit.ks_p_value > 0.01);
}

TEST_CASE("histogram spans zero to the maximum") {
  const std::vector<double> values = {1.0, 2.0, 4.0};
  const Histogram h = histogram(values, 4);
  REQUIRE(h.bin_edges.size() == 5);
  CHECK(h.bin_edges.front() == 0.0);
  CHECK(h.bin_edges.back() == doctest::Approx(4.0));
  REQUIRE(h.densities.size() == 4);
  // Counts per unit-width bin: {0,1,1,1} over n=3 values.
  CHECK(h.densities[0] == doctest::Approx(0.0));
  CHECK(h.densities[1] == doctest::Approx(1.0 / 3.0));
  CHECK(h.densities[2] == doctest::Approx(1.0 / 3.0));
  CHECK(h.densities[3] == doctest::Approx(1.0 / 3.0));
  double integral = 0.0;
  for (std::size_t i = 0; i < h.densities.size(); ++i)
    integral += h.densities[i] * (h.bin_edges[i + 1] - h.bin_edges[i]);
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(h.n == 3);
}

TEST_CASE("histogram contract and edge cases") {
  CHECK_NOTHROW(histogram(std::vector<double>{3.0}, 2));  // single sample
  CHECK_THROWS_AS(histogram(std::vector<double>{}, 4), DomainError);
  CHECK_THROWS_AS(histogram(std::vector<double>{1.0}, 0), DomainError);
  CHECK_THROWS_AS(histogram(std::vector<double>{0.0}, 4), DomainError);
  CHECK_THROWS_AS(histogram(std::vector<double>{-1.0, 2.0}, 4), DomainError);
  // The maximum itself lands in the last bin.
  const Histogram h = histogram(std::vector<double>{1.0, 2.0}, 2);
  CHECK(h.densities[1] > 0.0);
}

TEST_CASE("histogram bin masses match the exponential law") {
  Rng rng(17);
  const int n = 100000;
  std::vector<double> values(n);
  for (auto& v : values) v = rng.exponential(1.0);
  const Histogram h = histogram(values, 20);
  const double width = h.bin_edges[1] - h.bin_edges[0];
  for (int i = 0; i < 20; ++i) {
    const double lo = h.bin_edges[static_cast<std::size_t>(i)];
    const double hi = h.bin_edges[static_cast<std::size_t>(i) + 1];
    const double mass = std::exp(-lo) - std::exp(-hi);
    const double observed = h.densities[static_cast<std::size_t>(i)] * width;
    const double sd = std::sqrt(mass * (1.0 - mass) / n);
    CHECK(std::abs(observed - mass) <= 4.0 * sd + 1.0 / n);
  }
}

TEST_CASE("kolmogorov tail anchors and shape") {
  CHECK(kolmogorov_tail(1.358) == doctest::Approx(0.0500).epsilon(2e-3));
  CHECK(kolmogorov_tail(1.628) == doctest::Approx(0.0100).epsilon(2e-3));
  CHECK(kolmogorov_tail(0.0) == doctest::Approx(1.0));
  CHECK(kolmogorov_tail(1e-9) == doctest::Approx(1.0));
  CHECK(kolmogorov_tail(8.0) <= 1e-20);
  // Monotone nonincreasing across the series split at 1.18.
  double prev = 1.0;
  for (double x = 0.05; x < 3.0; x += 0.01) {
    const double q = kolmogorov_tail(x);
    CHECK(q <= prev + 1e-12);
    CHECK(q >= 0.0);
    CHECK(q <= 1.0);
    prev = q;
  }
}

TEST_CASE("one sample ks statistic by hand") {
  // Two points against Exponential(1): CDF F(x) = 1 - exp(-x).
  // Order stats x=(ln 2, ln 4): F = (0.5, 0.75); ECDF steps at 0.5, 1.
  // D = max(|0.5-0|, |0.5-0.5|, |0.75-0.5|, |0.75-1|) = 0.5.
  const std::vector<double> values = {std::log(2.0), std::log(4.0)};
  const KsResult ks = ks_exponential(values, 1.0);
  CHECK(ks.statistic == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("ks p-values are calibrated under the null") {
  // Under the null with a FIXED mean the p-value is asymptotically
  // uniform: the fraction below 0.1 over 1000 independent trials is
  // Binomial(1000, ~0.1).
  Rng rng(123);
  int below_01 = 0, below_05 = 0;
  const int trials = 1000, n = 400;
  std::vector<double> sample(n);
  for (int t = 0; t < trials; ++t) {
    for (auto& v : sample) v = rng.exponential(1.0);
    const double p = ks_exponential(sample, 1.0).p_value;
    below_01 += p < 0.1 ? 1 : 0;
    below_05 += p < 0.5 ? 1 : 0;
  }
  CHECK(std::abs(below_01 - 100.0) <= 4.0 * std::sqrt(1000 * 0.1 * 0.9) + 5);
  CHECK(std::abs(below_05 - 500.0) <= 4.0 * std::sqrt(1000 * 0.25) + 5);
}

TEST_CASE("two sample ks") {
  const std::vector<double> a = {1.0, 2.0, 3.0};
  CHECK(ks_two_sample(a, a).statistic == doctest::Approx(0.0));
  const std::vector<double> lo = {1.0, 2.0};
  const std::vector<double> hi = {3.0, 4.0};
  CHECK(ks_two_sample(lo, hi).statistic == doctest::Approx(1.0));
  // Hand case with a tie: a={1,2}, b={2,3}. After the shared value 2 the
  // ECDFs are (1, 0.5); D = 0.5.
  const std::vector<double> t1 = {1.0, 2.0};
  const std::vector<double> t2 = {2.0, 3.0};
  CHECK(ks_two_sample(t1, t2).statistic == doctest::Approx(0.5));
  CHECK_THROWS_AS(ks_two_sample(std::vector<double>{}, a), DomainError);
}

TEST_CASE("two sample ks accepts equal laws") {
  Rng rng(31);
  std::vector<double> a(4000), b(6000);
  for (auto& v : a) v = rng.exponential(1.0);
  for (auto& v : b) v = rng.exponential(1.0);
  CHECK(ks_two_sample(a, b).p_value > 0.01);
}

TEST_CASE("geometric ks statistic by hand") {
  // Sample {1,1,2} against Geometric(0.5): F(1)=0.5, F(2)=0.75, and both
  // CDFs are right-continuous step functions on the integers, so
  // D = max(|2/3 - 0.5|, |1 - 0.75|) = 0.25.
  const std::vector<std::int64_t> values = {1, 1, 2};
  const KsResult ks = ks_geometric(values, 0.5);
  CHECK(ks.statistic == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("geometric ks contract") {
  CHECK_THROWS_AS(ks_geometric(std::vector<std::int64_t>{}, 0.5), DomainError);
  CHECK_THROWS_AS(ks_geometric(std::vector<std::int64_t>{0}, 0.5), DomainError);
  CHECK_THROWS_AS(ks_geometric(std::vector<std::int64_t>{1}, 0.0), DomainError);
  CHECK_THROWS_AS(ks_geometric(std::vector<std::int64_t>{1}, 1.0), DomainError);
}

TEST_CASE("geometric ks separates nearby parameters") {
  Rng rng(77);
  std::vector<std::int64_t> sample(100000);
  for (auto& v : sample) v = geometric(rng, 0.1);
  CHECK(ks_geometric(sample, 0.1).p_value > 0.01);
  CHECK(ks_geometric(sample, 0.11).p_value < 1e-6);
}

}  // TEST_SUITE
