// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0

#include "seedbank/urn.hpp"

#include <cmath>
#include <string>

#include "seedbank/errors.hpp"

namespace seedbank {

namespace {

// Dense state vector with a rotating origin. Slot (origin + k) % size holds
// the mass of state k, so the deterministic downward shift is a single
// origin increment and only state 0's mass is rewritten each step. The two
// writes per step are the same floating-point operations, in the same
// order, as the naive full-vector update.
class RingVector {
 public:
  explicit RingVector(std::vector<double> mass)
      : buf_(std::move(mass)), origin_(0) {}

  void step(double epsilon) {
    const std::int64_t b = size();
    if (b == 1) return;
    const double at_zero = buf_[static_cast<std::size_t>(origin_)];
    // This slot becomes state b-1 after the shift; the slot after it
    // becomes state 0 and absorbs the stay-put mass.
    buf_[static_cast<std::size_t>(origin_)] = epsilon * at_zero;
    origin_ = origin_ + 1 == b ? 0 : origin_ + 1;
    buf_[static_cast<std::size_t>(origin_)] += (1.0 - epsilon) * at_zero;
  }

  double tv_against(const std::vector<double>& other) const {
    double sum = 0.0;
    const std::int64_t b = size();
    std::int64_t slot = origin_;
    for (std::int64_t k = 0; k < b; ++k) {
      sum += std::abs(buf_[static_cast<std::size_t>(slot)] -
                      other[static_cast<std::size_t>(k)]);
      slot = slot + 1 == b ? 0 : slot + 1;
    }
    return 0.5 * sum;
  }

  void accumulate_into(std::vector<double>& acc, double weight) const {
    const std::int64_t b = size();
    std::int64_t slot = origin_;
    for (std::int64_t k = 0; k < b; ++k) {
      acc[static_cast<std::size_t>(k)] +=
          weight * buf_[static_cast<std::size_t>(slot)];
      slot = slot + 1 == b ? 0 : slot + 1;
    }
  }

  std::vector<double> unrotated() const {
    const std::int64_t b = size();
    std::vector<double> out(static_cast<std::size_t>(b));
    std::int64_t slot = origin_;
    for (std::int64_t k = 0; k < b; ++k) {
      out[static_cast<std::size_t>(k)] = buf_[static_cast<std::size_t>(slot)];
      slot = slot + 1 == b ? 0 : slot + 1;
    }
    return out;
  }

  std::int64_t size() const { return static_cast<std::int64_t>(buf_.size()); }

 private:
  std::vector<double> buf_;
  std::int64_t origin_;
};

}  // namespace

ExactDistribution ExactDistribution::delta(std::int64_t state,
                                           std::int64_t size) {
  if (size < 1) throw DomainError("distribution size must be positive");
  if (state < 0 || state >= size)
    throw DomainError("delta state outside {0,...,size-1}");
  ExactDistribution d;
  d.mass.assign(static_cast<std::size_t>(size), 0.0);
  d.mass[static_cast<std::size_t>(state)] = 1.0;
  return d;
}

void ExactDistribution::check(std::int64_t expected_size) const {
  if (size() != expected_size)
    throw DimensionError("distribution has " + std::to_string(size()) +
                         " states, expected " + std::to_string(expected_size));
  double sum = 0.0;
  for (const double m : mass) {
    if (!(m >= 0.0)) throw DomainError("distribution has a negative entry");
    sum += m;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw DomainError("distribution mass sums to " + std::to_string(sum));
}

UrnState urn_step(UrnState state, const SeedBankParams& params, Rng& rng) {
  if (state.position > 0) return {state.position - 1};
  return {rng.bernoulli(params.epsilon) ? params.jump_length - 1 : 0};
}

ExactDistribution stationary_distribution(const SeedBankParams& params) {
  ExactDistribution nu;
  nu.mass.assign(static_cast<std::size_t>(params.jump_length),
                 params.epsilon / params.mean_jump);
  nu.mass[0] = 1.0 / params.mean_jump;
  return nu;
}

ExactDistribution evolve_exact(const ExactDistribution& dist,
                               std::int64_t steps,
                               const SeedBankParams& params) {
  dist.check(params.jump_length);
  if (steps < 0) throw DomainError("step count must be nonnegative");
  RingVector ring(dist.mass);
  for (std::int64_t s = 0; s < steps; ++s) ring.step(params.epsilon);
  ExactDistribution out;
  out.mass = ring.unrotated();
  return out;
}

double total_variation(const ExactDistribution& a, const ExactDistribution& b) {
  if (a.size() != b.size())
    throw DimensionError("total variation needs equal sizes, got " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  double sum = 0.0;
  for (std::size_t k = 0; k < a.mass.size(); ++k)
    sum += std::abs(a.mass[k] - b.mass[k]);
  return 0.5 * sum;
}

ExactDistribution resolve_initial(const InitialDistribution& gamma,
                                  const SeedBankParams& params) {
  if (gamma.kind == InitialDistribution::Kind::kStationary)
    return stationary_distribution(params);
  gamma.validate_for(params);
  ExactDistribution d;
  d.mass.assign(static_cast<std::size_t>(params.jump_length), 0.0);
  for (const auto& [state, weight] : gamma.support)
    d.mass[static_cast<std::size_t>(state)] = weight;
  d.check(params.jump_length);
  return d;
}

std::int64_t sample_from(const ExactDistribution& dist, Rng& rng) {
  const double u = rng.uniform01();
  double cdf = 0.0;
  std::int64_t last_positive = 0;
  for (std::int64_t k = 0; k < dist.size(); ++k) {
    const double m = dist.mass[static_cast<std::size_t>(k)];
    if (m > 0.0) last_positive = k;
    cdf += m;
    if (u < cdf) return k;
  }
  // Rounding can leave cdf a hair under 1; land on the last carried state.
  return last_positive;
}

std::vector<TvCurvePoint> tv_decay_curve(const InitialDistribution& gamma,
                                         std::int64_t max_steps,
                                         const SeedBankParams& params,
                                         const ComputeBudget& budget) {
  if (max_steps < 0) throw DomainError("step count must be nonnegative");
  const std::int64_t cells = (max_steps + 1) * params.jump_length;
  if (cells > budget.max_cells)
    throw ResourceError("tv_decay_curve needs " + std::to_string(cells) +
                        " cells, budget is " +
                        std::to_string(budget.max_cells));

  const ExactDistribution nu = stationary_distribution(params);
  RingVector ring(resolve_initial(gamma, params).mass);
  std::vector<TvCurvePoint> curve;
  curve.reserve(static_cast<std::size_t>(max_steps + 1));
  curve.push_back({0, ring.tv_against(nu.mass)});
  for (std::int64_t s = 1; s <= max_steps; ++s) {
    ring.step(params.epsilon);
    curve.push_back({s, ring.tv_against(nu.mass)});
  }
  return curve;
}

GeometricTimeTv geometric_time_tv(const InitialDistribution& gamma,
                                  const SeedBankParams& params,
                                  double tail_tol, const ComputeBudget& budget) {
  if (!(tail_tol > 0.0) || !(tail_tol < 1.0))
    throw DomainError("tail tolerance must lie strictly in (0,1)");
  if (params.jump_length == 1) return {0.0, 0.0, 0};

  // Observation time is Geometric(1/N) on {1,2,...}. Tail beyond h is
  // (1-1/N)^h; pick the smallest h at or below tail_tol.
  const double p = 1.0 / static_cast<double>(params.population_size);
  const double log_q = std::log1p(-p);
  const auto horizon = static_cast<std::int64_t>(
      std::ceil(std::log(tail_tol) / log_q));
  const std::int64_t cells = horizon * params.jump_length;
  if (cells > budget.max_cells)
    throw ResourceError("geometric_time_tv needs " + std::to_string(cells) +
                        " cells, budget is " +
                        std::to_string(budget.max_cells));

  const ExactDistribution nu = stationary_distribution(params);
  RingVector ring(resolve_initial(gamma, params).mass);
  std::vector<double> acc(static_cast<std::size_t>(params.jump_length), 0.0);
  double weight = p;  // P(T = k) = (1-p)^(k-1) p, walked iteratively
  for (std::int64_t k = 1; k <= horizon; ++k) {
    ring.step(params.epsilon);
    ring.accumulate_into(acc, weight);
    weight *= 1.0 - p;
  }
  const double tail = std::exp(static_cast<double>(horizon) * log_q);
  double sum = 0.0;
  for (std::size_t k = 0; k < acc.size(); ++k)
    sum += std::abs(acc[k] + tail * nu.mass[k] - nu.mass[k]);
  return {0.5 * sum, tail, horizon};
}

}  // namespace seedbank
