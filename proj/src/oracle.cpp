// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0

#include "seedbank/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "seedbank/errors.hpp"
#include "seedbank/urn.hpp"

namespace seedbank {

JointUrnChain::JointUrnChain(const SeedBankParams& params)
    : params_(params),
      side_(params.jump_length),
      states_(params.jump_length * params.jump_length) {}

std::vector<JointUrnChain::Arc> JointUrnChain::arcs(std::int64_t x,
                                                    std::int64_t y) const {
  const double eps = params_.epsilon;
  const std::int64_t top = side_ - 1;
  // Per-coordinate moves; from 0 with top == 0 both branches collapse.
  struct Move {
    std::int64_t to;
    double p;
  };
  const auto moves_from = [&](std::int64_t s) {
    std::vector<Move> moves;
    if (s > 0) {
      moves.push_back({s - 1, 1.0});
    } else if (top == 0) {
      moves.push_back({0, 1.0});
    } else {
      moves.push_back({0, 1.0 - eps});
      moves.push_back({top, eps});
    }
    return moves;
  };
  std::vector<Arc> out;
  for (const Move& mx : moves_from(x))
    for (const Move& my : moves_from(y))
      out.push_back({mx.to, my.to, mx.p * my.p});
  return out;
}

std::int64_t brute_force_tmrca2(const SeedBankParams& params,
                                const InitialDistribution& gamma, Rng& rng,
                                const OracleLimits& limits) {
  const ExactDistribution initial = resolve_initial(gamma, params);
  // next_x/next_y are the generations of the lines' next ancestors.
  std::int64_t next_x = sample_from(initial, rng);
  std::int64_t next_y = sample_from(initial, rng);
  const std::int64_t n = params.population_size;

  for (std::int64_t k = 0; k <= limits.max_generations; ++k) {
    const bool visit_x = next_x == k;
    const bool visit_y = next_y == k;
    if (visit_x && visit_y && k > 0) {
      const std::int64_t label_x = rng.uniform_int(n);
      const std::int64_t label_y = rng.uniform_int(n);
      if (label_x == label_y) return k;
    }
    if (visit_x) next_x += sample_increment(params, rng);
    if (visit_y) next_y += sample_increment(params, rng);
  }
  throw ResourceError("brute-force pair run exceeded " +
                      std::to_string(limits.max_generations) + " generations");
}

double exact_expected_tmrca2(const SeedBankParams& params,
                             const InitialDistribution& gamma,
                             const OracleLimits& limits,
                             SolveDiagnostics* diagnostics) {
  const JointUrnChain chain(params);
  const std::int64_t states = chain.state_count();
  if (states > limits.max_states)
    throw DomainError("joint chain has " + std::to_string(states) +
                      " states, oracle limit is " +
                      std::to_string(limits.max_states));

  // h(s) = expected remaining time from s, one step already pending:
  //   h(s) = 1 + sum_s' P(s,s') * w(s') * h(s')
  // where w(s') = 1 - 1/N at s' = (0,0) (the label check fails and the
  // walk continues) and 1 elsewhere. Absorption contributes no further
  // time, so (I - P W) h = 1.
  const std::int64_t side = params.jump_length;
  const double miss = 1.0 - 1.0 / static_cast<double>(params.population_size);
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(states, states);
  for (std::int64_t x = 0; x < side; ++x) {
    for (std::int64_t y = 0; y < side; ++y) {
      const std::int64_t row = chain.index(x, y);
      for (const JointUrnChain::Arc& arc : chain.arcs(x, y)) {
        const double weight =
            (arc.to_x == 0 && arc.to_y == 0) ? arc.probability * miss
                                             : arc.probability;
        a(row, chain.index(arc.to_x, arc.to_y)) -= weight;
      }
    }
  }
  const Eigen::VectorXd rhs = Eigen::VectorXd::Ones(states);
  const Eigen::VectorXd h = a.partialPivLu().solve(rhs);
  const double residual = (a * h - rhs).cwiseAbs().maxCoeff();
  if (diagnostics != nullptr) diagnostics->residual = residual;
  if (!(residual < 1e-9) || !h.allFinite())
    throw SingularSystemError("first-step system residual " +
                              std::to_string(residual));

  // Start from gamma x gamma; time 0 never hosts a label check, so the
  // expectation is the plain mixture of h even when gamma charges 0.
  const ExactDistribution start = resolve_initial(gamma, params);
  double expectation = 0.0;
  for (std::int64_t x = 0; x < side; ++x) {
    const double px = start.mass[static_cast<std::size_t>(x)];
    if (px == 0.0) continue;
    for (std::int64_t y = 0; y < side; ++y) {
      const double py = start.mass[static_cast<std::size_t>(y)];
      if (py == 0.0) continue;
      expectation += px * py * h(chain.index(x, y));
    }
  }
  return expectation;
}

}  // namespace seedbank
