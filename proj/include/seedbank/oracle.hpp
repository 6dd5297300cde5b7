// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent cross-checks for the pair simulator, feasible at small N and
// jump_length only. Three routes to the same law: a literal
// generation-by-generation simulation, an exact first-step linear solve on
// the joint age chain, and (elsewhere) the production skip-ahead sampler.
// Agreement of all three is the correctness argument for the simulator.

#ifndef SEEDBANK_ORACLE_HPP
#define SEEDBANK_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "seedbank/params.hpp"
#include "seedbank/rng.hpp"

namespace seedbank {

struct OracleLimits {
  std::int64_t max_states = 4096;              // joint states B^2 for the solve
  std::int64_t max_generations = 100'000'000;  // per brute-force replicate
};

// Product of two independent age chains on {0,...,B-1}^2. Coalescence is
// not part of the kernel; it is a 1/N thinning applied whenever the joint
// chain is at (0,0), handled by the consumers below.
class JointUrnChain {
 public:
  explicit JointUrnChain(const SeedBankParams& params);

  std::int64_t state_count() const { return states_; }
  std::int64_t index(std::int64_t x, std::int64_t y) const {
    return x * side_ + y;
  }

  struct Arc {
    std::int64_t to_x = 0;
    std::int64_t to_y = 0;
    double probability = 0.0;
  };
  // Outgoing arcs from (x,y); at most four, probabilities sum to 1.
  std::vector<Arc> arcs(std::int64_t x, std::int64_t y) const;

  const SeedBankParams& params() const { return params_; }

 private:
  SeedBankParams params_;
  std::int64_t side_ = 0;
  std::int64_t states_ = 0;
};

// Pair coalescence time simulated generation by generation: two renewal
// lines walk their visit sequences, and every commonly visited generation
// k >= 1 draws two parent labels that match with probability 1/N. No
// skip-ahead, no shared machinery with the production sampler.
std::int64_t brute_force_tmrca2(const SeedBankParams& params,
                                const InitialDistribution& gamma, Rng& rng,
                                const OracleLimits& limits = {});

struct SolveDiagnostics {
  double residual = 0.0;  // max abs row residual of the solved system
};

// E[T] for the pair, exactly: first-step equations for the expected
// absorption time of the joint age chain with a 1/N success check at each
// visit to (0,0) after time zero, solved densely. DomainError if B^2
// exceeds limits.max_states; SingularSystemError if the residual is bad.
double exact_expected_tmrca2(const SeedBankParams& params,
                             const InitialDistribution& gamma,
                             const OracleLimits& limits = {},
                             SolveDiagnostics* diagnostics = nullptr);

}  // namespace seedbank

#endif  // SEEDBANK_ORACLE_HPP
