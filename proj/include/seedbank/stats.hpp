// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEEDBANK_STATS_HPP
#define SEEDBANK_STATS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace seedbank {

struct FitReport {
  double mean = 0.0;          // fitted exponential mean (sample mean)
  double std_error = 0.0;     // sample standard deviation; tracks the mean
                              // when the data is close to exponential
  double ks_statistic = 0.0;  // against Exponential(mean), plug-in
  double ks_p_value = 0.0;    // asymptotic (Kolmogorov tail)
  std::int64_t n = 0;
};

struct Histogram {
  std::vector<double> bin_edges;  // size bins+1, equal width over [0, max]
  std::vector<double> densities;  // size bins, integrates to 1
  std::int64_t n = 0;
};

struct KsResult {
  double statistic = 0.0;
  double p_value = 0.0;
};

// Mean, sample standard deviation, and a plug-in exponential KS fit.
// DomainError on fewer than two values or any nonpositive value.
FitReport summarize(std::span<const double> values);

// Equal-width density histogram over [0, max]. DomainError if values is
// empty, bins < 1, or max <= 0.
Histogram histogram(std::span<const double> values, int bins);

// One-sample KS against Exponential with the given mean (CDF 1-exp(-x/m)).
// p-value is the asymptotic Kolmogorov tail at sqrt(n) * D.
KsResult ks_exponential(std::span<const double> values, double mean);

// Two-sample KS with tie handling; p-value uses the asymptotic tail at
// sqrt(n1*n2/(n1+n2)) * D.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

// One-sample KS for integer samples against the Geometric(p) law on
// {1,2,...}. The statistic is exact; the p-value reuses the continuous
// asymptotic tail, which is conservative for discrete laws.
KsResult ks_geometric(std::span<const std::int64_t> values, double p);

// P(K > x) for the Kolmogorov distribution. Series split at x = 1.18
// between the theta-function form (small x) and the alternating
// exponential form (large x); both converge to double precision there.
double kolmogorov_tail(double x);

}  // namespace seedbank

#endif  // SEEDBANK_STATS_HPP
