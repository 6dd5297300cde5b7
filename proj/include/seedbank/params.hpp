// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEEDBANK_PARAMS_HPP
#define SEEDBANK_PARAMS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seedbank/rng.hpp"

namespace seedbank {

// Model parameters. Generation gaps back to the parent are 1 with
// probability 1-epsilon and jump_length with probability epsilon, where
// jump_length = floor(N^beta); mean_jump is the mean gap.
struct SeedBankParams {
  std::int64_t population_size = 0;  // N
  double beta = 0.0;                 // jump exponent, > 0
  double epsilon = 0.0;              // long-jump probability, 0 < epsilon < 1
  std::int64_t jump_length = 1;      // B = floor(N^beta), >= 1
  double mean_jump = 1.0;            // 1 + epsilon * (jump_length - 1)

  // Validates and derives jump_length/mean_jump from (N, beta, epsilon).
  static SeedBankParams validated(std::int64_t population_size, double beta,
                                  double epsilon);

  // Same model with jump_length given directly (beta recorded as 0).
  // jump_length = 1 collapses to plain Wright-Fisher gaps.
  static SeedBankParams with_jump_length(std::int64_t population_size,
                                         std::int64_t jump_length,
                                         double epsilon);

  // Pair-coalescence time divisor in the Kingman regime:
  // epsilon^2 * N^(1 + 2*beta), with the real exponent (no floor).
  double kingman_scale() const;

  // The Kingman limit needs beta < 1/4; larger beta still simulates.
  bool in_kingman_regime() const { return beta < 0.25; }
};

// floor(N^beta) with a relative-tolerance nudge: std::pow can return a hair
// below an exact integer power ((1e4)^0.5 -> 99.999...), and a raw floor
// would then be off by one.
std::int64_t jump_length_for(std::int64_t population_size, double beta);

// One generation gap: 1 or jump_length. Uses one uniform draw.
std::int64_t sample_increment(const SeedBankParams& params, Rng& rng);

// Initial age distribution for a line, over {0,...,jump_length-1}.
// Either an explicit finite weight list or the urn chain's stationary law
// (resolved against concrete parameters at use time).
struct InitialDistribution {
  enum class Kind { kExplicit, kStationary };

  Kind kind = Kind::kExplicit;
  // (state, weight) pairs, states distinct and >= 0, weights positive and
  // summing to 1. Empty iff kind == kStationary.
  std::vector<std::pair<std::int64_t, double>> support;

  static InitialDistribution delta(std::int64_t state);
  // Uniform on {0,...,max_state}.
  static InitialDistribution uniform_range(std::int64_t max_state);
  static InitialDistribution stationary();
  // Weights off by at most 1e-6 are renormalized (flagged through
  // *renormalized when beyond 1e-12); larger deviations are DomainErrors.
  static InitialDistribution from_weights(
      std::vector<std::pair<std::int64_t, double>> weights,
      bool* renormalized = nullptr);

  // Checks support fits in {0,...,jump_length-1} for these parameters.
  void validate_for(const SeedBankParams& params) const;

  // Canonical text form: "d0", "uniform:k", "stationary", or "s:w,s:w,...".
  std::string describe() const;

  // Parses the text form accepted by the command line.
  static InitialDistribution parse(const std::string& text,
                                   bool* renormalized = nullptr);
};

}  // namespace seedbank

#endif  // SEEDBANK_PARAMS_HPP
