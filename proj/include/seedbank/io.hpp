// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic serialization: every file embeds the generating
// configuration and seed, floats print shortest-round-trip, and nothing
// scheduling- or time-dependent is written.

#ifndef SEEDBANK_IO_HPP
#define SEEDBANK_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "seedbank/genealogy.hpp"
#include "seedbank/stats.hpp"
#include "seedbank/urn.hpp"
#include "seedbank/verification.hpp"

namespace seedbank {

// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

// Whole-file write; IoError with the path on failure.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

nlohmann::ordered_json params_json(const SeedBankParams& params);

std::string sample_set_csv(const SampleSet& set);
std::string fit_csv(const SampleSet& set, const FitReport& fit);
std::string histogram_csv(const SampleSet& set, const Histogram& hist);
nlohmann::ordered_json sample_set_json(const SampleSet& set,
                                       const FitReport& fit,
                                       const Histogram& hist);

std::string distribution_csv(const SeedBankParams& params,
                             const ExactDistribution& dist,
                             const std::string& label);
nlohmann::ordered_json distribution_json(const SeedBankParams& params,
                                         const ExactDistribution& dist,
                                         const std::string& label);

// Aggregated mixing diagnostics for one grid point.
struct MixingResult {
  SeedBankParams params;
  InitialDistribution gamma;
  std::vector<TvCurvePoint> curve;
  std::int64_t first_step_below_quarter = -1;  // -1 if never within range
  GeometricTimeTv geometric;
};

std::string mixing_csv(const MixingResult& result);
nlohmann::ordered_json mixing_json(const MixingResult& result);

nlohmann::ordered_json verification_json(std::uint64_t seed, bool quick,
                                         const std::vector<CheckResult>& results);

}  // namespace seedbank

#endif  // SEEDBANK_IO_HPP
