// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0
//
// Backwards-in-time genealogy of a sample under rare long generation gaps.
// Each sampled individual's ancestral line visits a sparse set of
// generations: consecutive visited generations are sample_increment apart
// (1 with probability 1-epsilon, jump_length with probability epsilon).
// When several lines visit the same generation, each draws a uniform
// parent label in {1,...,N}; lines with equal labels merge. The pair
// coalescence time T is the first positive generation where two lines
// meet and agree.

#ifndef SEEDBANK_GENEALOGY_HPP
#define SEEDBANK_GENEALOGY_HPP

#include <cstdint>
#include <vector>

#include "seedbank/params.hpp"
#include "seedbank/rng.hpp"

namespace seedbank {

// A single ancestral line: the next generation (counting backwards from
// the sample) at which it has an ancestor.
struct RenewalLine {
  std::int64_t next_visit = 0;
};

// Advances the line to its following visited generation; returns the gap.
std::int64_t advance_line(RenewalLine& line, const SeedBankParams& params,
                          Rng& rng);

enum class MergerKind {
  kDouble,        // one group of exactly two lines
  kMultiple,      // one group of three or more
  kSimultaneous,  // two or more disjoint groups in the same generation
};

// One coalescence generation. Each group lists the ids of the blocks that
// merged there (a block id is the smallest sample index it contains);
// groups are disjoint and each has at least two members.
struct MergerEvent {
  std::int64_t time = 0;
  std::vector<std::vector<int>> groups;
  MergerKind kind = MergerKind::kDouble;
};

struct PartitionTrace {
  int sample_size = 0;
  std::vector<MergerEvent> events;
  std::int64_t final_time = 0;  // generation of the last merger (MRCA)
};

struct SimLimits {
  // Renewal advancements allowed per replicate before ResourceError.
  std::int64_t max_events = 10'000'000'000;
};

// Full ancestral process for a sample of size m >= 2, run to the MRCA.
// Initial line ages are iid draws from gamma. Lines alone at a generation
// advance without label draws (a lone line cannot merge); co-visiting
// lines draw labels only at generations > 0.
PartitionTrace simulate_ancestral_process(const SeedBankParams& params,
                                          int sample_size,
                                          const InitialDistribution& gamma,
                                          Rng& rng,
                                          const SimLimits& limits = {});

// Pair coalescence time by checkpoint skipping: candidate meeting times
// arrive as iid Geometric(1/N) gaps, and both age chains are advanced to
// each checkpoint by deterministic descent plus geometrically many
// stay-at-zero steps; T is the first checkpoint with both ages zero.
// Equal in law to the m = 2 ancestral process, orders of magnitude fewer
// draws when jump_length << N.
std::int64_t simulate_tmrca2_fast(const SeedBankParams& params,
                                  const InitialDistribution& gamma, Rng& rng,
                                  const SimLimits& limits = {});

// One Kingman coalescent run: exponential holding time at each block
// count from sample_size down to 2 (rate k(k-1)/2 while k blocks remain).
struct KingmanLevel {
  int block_count = 0;
  double holding_time = 0.0;
};
std::vector<KingmanLevel> kingman_simulate(int sample_size, Rng& rng);

// Generations to coalescent time units: t / (epsilon^2 N^(1+2 beta)).
double scale_time(std::int64_t generations, const SeedBankParams& params);

// Replicated pair or sample coalescence times with fixed per-replicate
// seed streams: output is identical for any thread count.
struct SampleSet {
  SeedBankParams params;
  InitialDistribution gamma;
  int sample_size = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> values;  // T in generations, per replicate
  std::vector<double> scaled;        // values / kingman_scale, elementwise
};

struct MergerTally {
  std::int64_t double_mergers = 0;
  std::int64_t multiple_mergers = 0;
  std::int64_t simultaneous_mergers = 0;

  std::int64_t total() const {
    return double_mergers + multiple_mergers + simultaneous_mergers;
  }
};

// Runs `replicates` independent simulations. Replicate i uses the rng
// stream stream_seed(master_seed, i) regardless of scheduling; for
// sample_size == 2 the fast pair sampler is used, otherwise the full
// ancestral process (tallying merger kinds into *tally if given).
// threads <= 0 picks the hardware concurrency.
SampleSet run_replicates(const SeedBankParams& params, int sample_size,
                         const InitialDistribution& gamma,
                         std::int64_t replicates, std::uint64_t master_seed,
                         int threads = 1, const SimLimits& limits = {},
                         MergerTally* tally = nullptr);

}  // namespace seedbank

#endif  // SEEDBANK_GENEALOGY_HPP
