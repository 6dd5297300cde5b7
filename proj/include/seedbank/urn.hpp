// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0
//
// Age chain of a single ancestral line, viewed backwards in time: state is
// the number of generations until the line's next ancestor. From 0 the
// chain stays at 0 with probability 1-epsilon or jumps to jump_length-1
// with probability epsilon; from k > 0 it steps down to k-1. Visits to 0
// are exactly the generations in which the line has an ancestor.

#ifndef SEEDBANK_URN_HPP
#define SEEDBANK_URN_HPP

#include <cstdint>
#include <vector>

#include "seedbank/params.hpp"
#include "seedbank/rng.hpp"

namespace seedbank {

struct UrnState {
  std::int64_t position = 0;  // in {0,...,jump_length-1}
};

// Probability vector over {0,...,jump_length-1}. mass[k] is the weight of
// state k; entries are kept nonnegative and summing to 1 within 1e-12.
struct ExactDistribution {
  std::vector<double> mass;

  std::int64_t size() const { return static_cast<std::int64_t>(mass.size()); }
  static ExactDistribution delta(std::int64_t state, std::int64_t size);
  // Throws DomainError unless sizes match, entries are >= 0 and sum to 1.
  void check(std::int64_t expected_size) const;
};

// Budget for exact-analysis loops, measured in state-vector cells touched
// (roughly steps * jump_length).
struct ComputeBudget {
  std::int64_t max_cells = 2'000'000'000;
};

// One transition of the age chain.
UrnState urn_step(UrnState state, const SeedBankParams& params, Rng& rng);

// Stationary law: mass 1/mean_jump at 0 and epsilon/mean_jump elsewhere.
ExactDistribution stationary_distribution(const SeedBankParams& params);

// Exact push-forward of dist through `steps` transitions. O(1) work per
// step via a rotating origin; bit-identical to the naive matrix step.
ExactDistribution evolve_exact(const ExactDistribution& dist,
                               std::int64_t steps,
                               const SeedBankParams& params);

// Total variation distance, (1/2) sum |a_k - b_k|.
double total_variation(const ExactDistribution& a, const ExactDistribution& b);

// Concrete law of an InitialDistribution under these parameters.
ExactDistribution resolve_initial(const InitialDistribution& gamma,
                                  const SeedBankParams& params);

// One draw from an explicit law (linear CDF scan; support is small).
std::int64_t sample_from(const ExactDistribution& dist, Rng& rng);

struct TvCurvePoint {
  std::int64_t step = 0;
  double tv = 0.0;
};

// TV distance to stationarity after 0,1,...,max_steps steps, exactly.
// ResourceError if (max_steps+1) * jump_length exceeds the budget.
std::vector<TvCurvePoint> tv_decay_curve(const InitialDistribution& gamma,
                                         std::int64_t max_steps,
                                         const SeedBankParams& params,
                                         const ComputeBudget& budget = {});

struct GeometricTimeTv {
  double tv = 0.0;          // distance computed from the truncated mixture
  double tail_bound = 0.0;  // geometric mass beyond the horizon
  std::int64_t horizon = 0;
};

// TV between the law of the chain observed at an independent
// Geometric(1/N) time and the stationary law. The geometric time is
// truncated at the first horizon whose tail mass is <= tail_tol; the
// truncated tail is assigned to the stationary law, so the reported tv is
// within tail_bound of the untruncated value.
GeometricTimeTv geometric_time_tv(const InitialDistribution& gamma,
                                  const SeedBankParams& params,
                                  double tail_tol = 1e-6,
                                  const ComputeBudget& budget = {});

}  // namespace seedbank

#endif  // SEEDBANK_URN_HPP
