// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0

#include "seedbank/genealogy.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "seedbank/errors.hpp"
#include "seedbank/urn.hpp"

namespace seedbank {

namespace {

struct HeapEntry {
  std::int64_t generation = 0;
  int block_id = 0;  // smallest sample index in the block, 1-based

  // Min-heap order; ids are unique, so the order is total and pops are
  // deterministic (ascending id within a generation).
  bool greater_than(const HeapEntry& other) const {
    if (generation != other.generation) return generation > other.generation;
    return block_id > other.block_id;
  }
};

struct HeapCompare {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    return a.greater_than(b);
  }
};

void bump_events(std::int64_t& used, const SimLimits& limits) {
  if (++used > limits.max_events)
    throw ResourceError("renewal event budget of " +
                        std::to_string(limits.max_events) + " exhausted");
}

// Advance an age chain by `steps` transitions, consuming one geometric
// dwell draw per stay-at-zero stretch. Dropping the unfinished remainder
// of a dwell when the target time lands inside it is exact: the dwell is
// memoryless.
std::int64_t advance_age(std::int64_t age, std::int64_t steps,
                         std::int64_t jump_length,
                         const GeometricSampler& dwell, Rng& rng,
                         std::int64_t& events_used, const SimLimits& limits) {
  if (jump_length == 1) return 0;
  if (age > 0) {
    const std::int64_t down = std::min(age, steps);
    age -= down;
    steps -= down;
  }
  while (steps > 0) {
    bump_events(events_used, limits);
    const std::int64_t leave_after = dwell.draw(rng);
    if (leave_after > steps) return 0;
    steps -= leave_after;
    age = jump_length - 1;
    const std::int64_t down = std::min(age, steps);
    age -= down;
    steps -= down;
  }
  return age;
}

MergerKind classify(const std::vector<std::vector<int>>& groups) {
  if (groups.size() >= 2) return MergerKind::kSimultaneous;
  return groups[0].size() >= 3 ? MergerKind::kMultiple : MergerKind::kDouble;
}

}  // namespace

std::int64_t advance_line(RenewalLine& line, const SeedBankParams& params,
                          Rng& rng) {
  const std::int64_t gap = sample_increment(params, rng);
  line.next_visit += gap;
  return gap;
}

PartitionTrace simulate_ancestral_process(const SeedBankParams& params,
                                          int sample_size,
                                          const InitialDistribution& gamma,
                                          Rng& rng, const SimLimits& limits) {
  if (sample_size < 2) throw DomainError("sample size must be at least 2");
  const ExactDistribution initial = resolve_initial(gamma, params);
  const std::int64_t n = params.population_size;

  std::vector<HeapEntry> heap;
  heap.reserve(static_cast<std::size_t>(sample_size));
  for (int id = 0; id < sample_size; ++id) {
    heap.push_back({sample_from(initial, rng), id});
    std::push_heap(heap.begin(), heap.end(), HeapCompare{});
  }

  PartitionTrace trace;
  trace.sample_size = sample_size;
  std::int64_t events_used = 0;
  std::vector<HeapEntry> present;
  std::vector<std::int64_t> labels;

  while (heap.size() > 1) {
    std::pop_heap(heap.begin(), heap.end(), HeapCompare{});
    HeapEntry lead = heap.back();
    heap.pop_back();

    // A line strictly ahead of every other is alone at its generation and
    // cannot merge; advance it without label draws until it catches up.
    const std::int64_t chase = heap.front().generation;
    if (lead.generation < chase) {
      while (lead.generation < chase) {
        bump_events(events_used, limits);
        lead.generation += rng.bernoulli(params.epsilon) ? params.jump_length : 1;
      }
      heap.push_back(lead);
      std::push_heap(heap.begin(), heap.end(), HeapCompare{});
      continue;
    }

    // lead.generation == chase: gather every block at this generation.
    // Pops come out in ascending block id, fixing the label-draw order.
    present.clear();
    present.push_back(lead);
    while (!heap.empty() && heap.front().generation == lead.generation) {
      std::pop_heap(heap.begin(), heap.end(), HeapCompare{});
      present.push_back(heap.back());
      heap.pop_back();
    }

    // Parent labels only exist at generations after the sample itself.
    if (lead.generation > 0) {
      labels.clear();
      for (std::size_t i = 0; i < present.size(); ++i)
        labels.push_back(rng.uniform_int(n));

      std::vector<std::vector<int>> groups;
      std::vector<bool> grouped(present.size(), false);
      std::vector<std::size_t> survivors;
      for (std::size_t i = 0; i < present.size(); ++i) {
        if (grouped[i]) continue;
        std::vector<int> group{present[i].block_id};
        for (std::size_t j = i + 1; j < present.size(); ++j) {
          if (!grouped[j] && labels[j] == labels[i]) {
            grouped[j] = true;
            group.push_back(present[j].block_id);
          }
        }
        survivors.push_back(i);  // merged block keeps the smallest id
        if (group.size() >= 2) groups.push_back(std::move(group));
      }
      if (!groups.empty()) {
        MergerEvent event;
        event.time = lead.generation;
        event.kind = classify(groups);
        event.groups = std::move(groups);
        trace.events.push_back(std::move(event));
      }
      if (survivors.size() == 1 && heap.empty()) {
        trace.final_time = lead.generation;
        return trace;
      }
      // Advance the surviving blocks past this generation.
      for (const std::size_t i : survivors) {
        bump_events(events_used, limits);
        HeapEntry entry = present[i];
        entry.generation += rng.bernoulli(params.epsilon) ? params.jump_length : 1;
        heap.push_back(entry);
        std::push_heap(heap.begin(), heap.end(), HeapCompare{});
      }
    } else {
      for (const HeapEntry& entry : present) {
        bump_events(events_used, limits);
        HeapEntry moved = entry;
        moved.generation += rng.bernoulli(params.epsilon) ? params.jump_length : 1;
        heap.push_back(moved);
        std::push_heap(heap.begin(), heap.end(), HeapCompare{});
      }
    }
  }
  // Unreachable: the loop only exits through the single-survivor return.
  throw ResourceError("ancestral process ended with no merger");
}

std::int64_t simulate_tmrca2_fast(const SeedBankParams& params,
                                  const InitialDistribution& gamma, Rng& rng,
                                  const SimLimits& limits) {
  const ExactDistribution initial = resolve_initial(gamma, params);
  std::int64_t x = sample_from(initial, rng);
  std::int64_t y = sample_from(initial, rng);
  const GeometricSampler dwell(params.epsilon);
  const GeometricSampler checkpoint(1.0 / static_cast<double>(params.population_size));
  const std::int64_t b = params.jump_length;

  std::int64_t t = 0;
  std::int64_t events_used = 0;
  for (;;) {
    bump_events(events_used, limits);
    const std::int64_t gap = checkpoint.draw(rng);
    t += gap;
    x = advance_age(x, gap, b, dwell, rng, events_used, limits);
    y = advance_age(y, gap, b, dwell, rng, events_used, limits);
    if (x == 0 && y == 0) return t;
  }
}

std::vector<KingmanLevel> kingman_simulate(int sample_size, Rng& rng) {
  if (sample_size < 2) throw DomainError("sample size must be at least 2");
  std::vector<KingmanLevel> levels;
  levels.reserve(static_cast<std::size_t>(sample_size) - 1);
  for (int k = sample_size; k >= 2; --k) {
    const double rate = 0.5 * k * (k - 1);
    levels.push_back({k, rng.exponential(1.0 / rate)});
  }
  return levels;
}

double scale_time(std::int64_t generations, const SeedBankParams& params) {
  return static_cast<double>(generations) / params.kingman_scale();
}

SampleSet run_replicates(const SeedBankParams& params, int sample_size,
                         const InitialDistribution& gamma,
                         std::int64_t replicates, std::uint64_t master_seed,
                         int threads, const SimLimits& limits,
                         MergerTally* tally) {
  if (sample_size < 2) throw DomainError("sample size must be at least 2");
  if (replicates < 1) throw DomainError("need at least one replicate");
  gamma.validate_for(params);

  SampleSet out;
  out.params = params;
  out.gamma = gamma;
  out.sample_size = sample_size;
  out.seed = master_seed;
  out.values.resize(static_cast<std::size_t>(replicates));
  out.scaled.resize(static_cast<std::size_t>(replicates));
  const double scale = params.kingman_scale();

  int worker_count = threads;
  if (worker_count <= 0) {
    worker_count = static_cast<int>(std::thread::hardware_concurrency());
    if (worker_count < 1) worker_count = 1;
  }
  if (static_cast<std::int64_t>(worker_count) > replicates)
    worker_count = static_cast<int>(replicates);

  std::atomic<std::int64_t> next{0};
  std::mutex merge_mutex;
  MergerTally total_tally;
  std::int64_t failed_replicate = -1;
  std::exception_ptr failure;

  auto worker = [&] {
    MergerTally local_tally;
    for (;;) {
      const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= replicates) break;
      try {
        Rng rng(stream_seed(master_seed, static_cast<std::uint64_t>(i)));
        std::int64_t value = 0;
        if (sample_size == 2) {
          value = simulate_tmrca2_fast(params, gamma, rng, limits);
        } else {
          const PartitionTrace trace = simulate_ancestral_process(
              params, sample_size, gamma, rng, limits);
          value = trace.final_time;
          for (const MergerEvent& event : trace.events) {
            switch (event.kind) {
              case MergerKind::kDouble: local_tally.double_mergers++; break;
              case MergerKind::kMultiple: local_tally.multiple_mergers++; break;
              case MergerKind::kSimultaneous:
                local_tally.simultaneous_mergers++;
                break;
            }
          }
        }
        out.values[static_cast<std::size_t>(i)] = value;
        out.scaled[static_cast<std::size_t>(i)] =
            static_cast<double>(value) / scale;
      } catch (...) {
        {
          const std::lock_guard<std::mutex> lock(merge_mutex);
          // Indices are handed out in order, so every index below a failing
          // one was started and runs to completion; keeping the smallest
          // failing index makes the reported error scheduling-independent.
          if (failed_replicate < 0 || i < failed_replicate) {
            failed_replicate = i;
            failure = std::current_exception();
          }
        }
        next.store(replicates, std::memory_order_relaxed);
        break;
      }
    }
    const std::lock_guard<std::mutex> lock(merge_mutex);
    total_tally.double_mergers += local_tally.double_mergers;
    total_tally.multiple_mergers += local_tally.multiple_mergers;
    total_tally.simultaneous_mergers += local_tally.simultaneous_mergers;
  };

  if (worker_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  if (failed_replicate >= 0) {
    const std::string where =
        "replicate " + std::to_string(failed_replicate) + ": ";
    try {
      std::rethrow_exception(failure);
    } catch (const ResourceError& e) {
      throw ResourceError(where + e.what());
    } catch (const DomainError& e) {
      throw DomainError(where + e.what());
    } catch (const std::exception& e) {
      throw ResourceError(where + e.what());
    }
  }
  if (tally != nullptr) *tally = total_tally;
  return out;
}

}  // namespace seedbank
