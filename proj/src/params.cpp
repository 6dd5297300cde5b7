// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0

#include "seedbank/params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "seedbank/errors.hpp"

namespace seedbank {

namespace {

std::string describe_weight(double w) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw DomainError("initial distribution: bad number '" + text + "'");
  return value;
}

std::int64_t parse_int(const std::string& text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw DomainError("initial distribution: bad integer '" + text + "'");
  return value;
}

}  // namespace

std::int64_t jump_length_for(std::int64_t population_size, double beta) {
  const double raw = std::pow(static_cast<double>(population_size), beta);
  // Relative nudge: if raw sits within ~8 ulp-scale units below an integer,
  // floor to that integer instead of the one below.
  const double nudged = raw * (1.0 + 8.0 * std::numeric_limits<double>::epsilon());
  return static_cast<std::int64_t>(std::floor(nudged));
}

SeedBankParams SeedBankParams::validated(std::int64_t population_size,
                                         double beta, double epsilon) {
  if (population_size < 2)
    throw DomainError("population size must be at least 2");
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw DomainError("epsilon must lie strictly in (0,1)");

  SeedBankParams p;
  p.population_size = population_size;
  p.beta = beta;
  p.epsilon = epsilon;
  p.jump_length = jump_length_for(population_size, beta);
  p.mean_jump = 1.0 + epsilon * static_cast<double>(p.jump_length - 1);
  return p;
}

SeedBankParams SeedBankParams::with_jump_length(std::int64_t population_size,
                                                std::int64_t jump_length,
                                                double epsilon) {
  if (population_size < 2)
    throw DomainError("population size must be at least 2");
  if (jump_length < 1) throw DomainError("jump length must be at least 1");
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw DomainError("epsilon must lie strictly in (0,1)");

  SeedBankParams p;
  p.population_size = population_size;
  p.beta = 0.0;  // not derived from an exponent
  p.epsilon = epsilon;
  p.jump_length = jump_length;
  p.mean_jump = 1.0 + epsilon * static_cast<double>(jump_length - 1);
  return p;
}

double SeedBankParams::kingman_scale() const {
  const double n = static_cast<double>(population_size);
  return epsilon * epsilon * std::pow(n, 1.0 + 2.0 * beta);
}

std::int64_t sample_increment(const SeedBankParams& params, Rng& rng) {
  return rng.bernoulli(params.epsilon) ? params.jump_length : 1;
}

InitialDistribution InitialDistribution::delta(std::int64_t state) {
  if (state < 0) throw DomainError("initial state must be nonnegative");
  InitialDistribution d;
  d.support = {{state, 1.0}};
  return d;
}

InitialDistribution InitialDistribution::uniform_range(std::int64_t max_state) {
  if (max_state < 0) throw DomainError("uniform range endpoint must be nonnegative");
  InitialDistribution d;
  const double w = 1.0 / static_cast<double>(max_state + 1);
  for (std::int64_t s = 0; s <= max_state; ++s) d.support.emplace_back(s, w);
  return d;
}

InitialDistribution InitialDistribution::stationary() {
  InitialDistribution d;
  d.kind = Kind::kStationary;
  return d;
}

InitialDistribution InitialDistribution::from_weights(
    std::vector<std::pair<std::int64_t, double>> weights, bool* renormalized) {
  if (weights.empty()) throw DomainError("initial distribution needs at least one state");
  std::sort(weights.begin(), weights.end());
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].first < 0)
      throw DomainError("initial states must be nonnegative");
    if (i > 0 && weights[i].first == weights[i - 1].first)
      throw DomainError("initial states must be distinct");
    if (!(weights[i].second > 0.0))
      throw DomainError("initial weights must be positive");
    total += weights[i].second;
  }
  // Small drift is renormalized (and reported via the out-flag so the
  // caller can warn); anything larger is a typo, not rounding.
  if (std::abs(total - 1.0) > 1e-6)
    throw DomainError("initial weights sum to " + std::to_string(total) +
                      ", expected 1");
  if (renormalized != nullptr) *renormalized = std::abs(total - 1.0) > 1e-12;
  for (auto& [state, weight] : weights) weight /= total;
  InitialDistribution d;
  d.support = std::move(weights);
  return d;
}

void InitialDistribution::validate_for(const SeedBankParams& params) const {
  if (kind == Kind::kStationary) return;
  for (const auto& [state, weight] : support) {
    (void)weight;
    if (state >= params.jump_length)
      throw DomainError("initial state " + std::to_string(state) +
                        " outside {0,...," +
                        std::to_string(params.jump_length - 1) + "}");
  }
}

std::string InitialDistribution::describe() const {
  if (kind == Kind::kStationary) return "stationary";
  if (support.size() == 1 && support[0].second == 1.0)
    return "d" + std::to_string(support[0].first);
  // Contiguous equal weights from 0 print as uniform:k.
  const auto k = static_cast<std::int64_t>(support.size()) - 1;
  bool uniform = support[0].first == 0 && support.back().first == k;
  for (const auto& [state, weight] : support)
    uniform = uniform && std::abs(weight - support[0].second) < 1e-15;
  if (uniform && k > 0) return "uniform:" + std::to_string(k);
  std::string out;
  for (const auto& [state, weight] : support) {
    if (!out.empty()) out += ',';
    out += std::to_string(state) + ':' + describe_weight(weight);
  }
  return out;
}

InitialDistribution InitialDistribution::parse(const std::string& text,
                                               bool* renormalized) {
  if (renormalized != nullptr) *renormalized = false;
  if (text.empty()) throw DomainError("initial distribution: empty spec");
  if (text == "stationary") return stationary();
  if (text[0] == 'd' && text.find(':') == std::string::npos &&
      text.find(',') == std::string::npos)
    return delta(parse_int(text.substr(1)));
  if (text.rfind("uniform:", 0) == 0)
    return uniform_range(parse_int(text.substr(8)));

  // state:weight list, comma separated
  std::vector<std::pair<std::int64_t, double>> weights;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw DomainError("initial distribution: expected state:weight, got '" +
                        item + "'");
    weights.emplace_back(parse_int(item.substr(0, colon)),
                         parse_double(item.substr(colon + 1)));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return from_weights(std::move(weights), renormalized);
}

}  // namespace seedbank
