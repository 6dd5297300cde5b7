// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0

#include "seedbank/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seedbank/errors.hpp"

namespace seedbank {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double ks_against_cdf(std::span<const double> sorted,
                      const std::vector<double>& cdf_at_points) {
  // D = max over order statistics of max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n)
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf_at_points[i];
    d = std::max(d, static_cast<double>(i + 1) / n - f);
    d = std::max(d, f - static_cast<double>(i) / n);
  }
  return d;
}

}  // namespace

double kolmogorov_tail(double x) {
  if (!(x > 0.0)) return 1.0;
  if (x < 1.18) {
    // P(K <= x) = sqrt(2*pi)/x * sum_{j>=1,odd squares} exp(-pi^2 j^2 / (8 x^2))
    const double t = std::exp(-kPi * kPi / (8.0 * x * x));
    double cdf = 0.0;
    for (int j = 1; j <= 9; j += 2) {
      const double term = std::pow(t, static_cast<double>(j) * j);
      cdf += term;
      if (term < 1e-18) break;
    }
    cdf *= std::sqrt(2.0 * kPi) / x;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  // P(K > x) = 2 * sum_{j>=1} (-1)^(j-1) exp(-2 j^2 x^2)
  double tail = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 12; ++j) {
    const double term = std::exp(-2.0 * static_cast<double>(j) * j * x * x);
    tail += sign * term;
    sign = -sign;
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * tail, 0.0, 1.0);
}

FitReport summarize(std::span<const double> values) {
  if (values.size() < 2) throw DomainError("summarize: need at least 2 values");
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (const double v : values) {
    if (!(v > 0.0)) throw DomainError("summarize: values must be positive");
    sum += v;
  }
  const double mean = sum / n;
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);

  FitReport report;
  report.mean = mean;
  // Sample standard deviation, not sd/sqrt(n): for exponential data it
  // should track the mean, which is the diagnostic being reported.
  report.std_error = std::sqrt(ss / (n - 1.0));
  report.n = static_cast<std::int64_t>(values.size());
  const KsResult ks = ks_exponential(values, mean);
  report.ks_statistic = ks.statistic;
  report.ks_p_value = ks.p_value;
  return report;
}

Histogram histogram(std::span<const double> values, int bins) {
  if (values.empty()) throw DomainError("histogram: no values");
  if (bins < 1) throw DomainError("histogram: need at least one bin");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  if (*lo_it < 0.0)
    throw DomainError("histogram: values must be nonnegative");
  const double hi = *hi_it;
  if (!(hi > 0.0)) throw DomainError("histogram: maximum must be positive");

  Histogram h;
  h.n = static_cast<std::int64_t>(values.size());
  const double width = hi / bins;
  h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int k = 0; k <= bins; ++k)
    h.bin_edges[static_cast<std::size_t>(k)] = width * k;
  h.bin_edges.back() = hi;  // closed top edge, immune to rounding

  std::vector<std::int64_t> counts(static_cast<std::size_t>(bins), 0);
  for (const double v : values) {
    auto k = static_cast<std::int64_t>(v / width);
    if (k >= bins) k = bins - 1;
    counts[static_cast<std::size_t>(k)]++;
  }
  h.densities.resize(static_cast<std::size_t>(bins));
  const double denom = static_cast<double>(values.size()) * width;
  for (int k = 0; k < bins; ++k)
    h.densities[static_cast<std::size_t>(k)] =
        static_cast<double>(counts[static_cast<std::size_t>(k)]) / denom;
  return h;
}

KsResult ks_exponential(std::span<const double> values, double mean) {
  if (values.empty()) throw DomainError("ks_exponential: no values");
  if (!(mean > 0.0)) throw DomainError("ks_exponential: mean must be positive");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> cdf(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    cdf[i] = -std::expm1(-sorted[i] / mean);
  const double d = ks_against_cdf(sorted, cdf);
  const double root_n = std::sqrt(static_cast<double>(sorted.size()));
  return {d, kolmogorov_tail(root_n * d)};
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());

  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    // Advance past ties in both samples before comparing the ECDFs.
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == x) ++i;
    while (j < sb.size() && sb[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  const double effective = std::sqrt(na * nb / (na + nb));
  return {d, kolmogorov_tail(effective * d)};
}

KsResult ks_geometric(std::span<const std::int64_t> values, double p) {
  if (values.empty()) throw DomainError("ks_geometric: no values");
  if (!(p > 0.0) || !(p < 1.0))
    throw DomainError("ks_geometric: p must lie in (0,1)");
  std::vector<std::int64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1)
    throw DomainError("ks_geometric: values must be >= 1");

  // Both CDFs are integer step functions, and the ECDF is constant between
  // observed values, so the sup is attained at an observed value or one
  // step before it. F(k) = 1 - (1-p)^k, F(0) = 0.
  const auto n = static_cast<double>(sorted.size());
  const double log_q = std::log1p(-p);
  const auto model_cdf = [log_q](std::int64_t k) {
    return k <= 0 ? 0.0 : -std::expm1(static_cast<double>(k) * log_q);
  };
  double d = 0.0;
  std::size_t idx = 0;
  while (idx < sorted.size()) {
    const std::int64_t v = sorted[idx];
    d = std::max(d, std::abs(static_cast<double>(idx) / n - model_cdf(v - 1)));
    while (idx < sorted.size() && sorted[idx] == v) ++idx;
    d = std::max(d, std::abs(static_cast<double>(idx) / n - model_cdf(v)));
  }
  const double root_n = std::sqrt(n);
  return {d, kolmogorov_tail(root_n * d)};
}

}  // namespace seedbank
