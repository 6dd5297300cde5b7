// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0

#include "seedbank/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "seedbank/errors.hpp"

namespace seedbank {

namespace {

std::string config_comment(const SampleSet& set) {
  const SeedBankParams& p = set.params;
  std::string line = "# n=" + std::to_string(p.population_size) +
                     " beta=" + format_double(p.beta) +
                     " epsilon=" + format_double(p.epsilon) +
                     " jump_length=" + std::to_string(p.jump_length) +
                     " mean_jump=" + format_double(p.mean_jump) + "\n";
  line += "# m=" + std::to_string(set.sample_size) +
          " gamma=" + set.gamma.describe() +
          " replicates=" + std::to_string(static_cast<long long>(set.values.size())) +
          " seed=" + std::to_string(set.seed) +
          " scale=" + format_double(p.kingman_scale()) + "\n";
  return line;
}

std::string params_comment(const SeedBankParams& p) {
  return "# n=" + std::to_string(p.population_size) +
         " beta=" + format_double(p.beta) +
         " epsilon=" + format_double(p.epsilon) +
         " jump_length=" + std::to_string(p.jump_length) +
         " mean_jump=" + format_double(p.mean_jump) + "\n";
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return buffer.str();
}

nlohmann::ordered_json params_json(const SeedBankParams& params) {
  return nlohmann::ordered_json{{"n", params.population_size},
                                {"beta", params.beta},
                                {"epsilon", params.epsilon},
                                {"jump_length", params.jump_length},
                                {"mean_jump", params.mean_jump}};
}

std::string sample_set_csv(const SampleSet& set) {
  std::string out = "# seedbank samples v1\n";
  out += config_comment(set);
  out += "index,t_mrca,scaled\n";
  for (std::size_t i = 0; i < set.values.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += std::to_string(static_cast<long long>(set.values[i]));
    out += ',';
    out += format_double(set.scaled[i]);
    out += '\n';
  }
  return out;
}

std::string fit_csv(const SampleSet& set, const FitReport& fit) {
  std::string out = "# seedbank fit v1\n";
  out += config_comment(set);
  out += "mean,std_error,ks_statistic,ks_p_value,n\n";
  out += format_double(fit.mean) + ',' + format_double(fit.std_error) + ',' +
         format_double(fit.ks_statistic) + ',' + format_double(fit.ks_p_value) +
         ',' + std::to_string(fit.n) + '\n';
  return out;
}

std::string histogram_csv(const SampleSet& set, const Histogram& hist) {
  std::string out = "# seedbank histogram v1\n";
  out += config_comment(set);
  out += "bin_lo,bin_hi,density\n";
  for (std::size_t k = 0; k < hist.densities.size(); ++k) {
    out += format_double(hist.bin_edges[k]) + ',' +
           format_double(hist.bin_edges[k + 1]) + ',' +
           format_double(hist.densities[k]) + '\n';
  }
  return out;
}

nlohmann::ordered_json sample_set_json(const SampleSet& set,
                                       const FitReport& fit,
                                       const Histogram& hist) {
  nlohmann::ordered_json j;
  j["format"] = "seedbank samples v1";
  j["config"] = params_json(set.params);
  j["config"]["m"] = set.sample_size;
  j["config"]["gamma"] = set.gamma.describe();
  j["config"]["replicates"] = set.values.size();
  j["config"]["seed"] = set.seed;
  j["config"]["scale"] = set.params.kingman_scale();
  j["fit"] = {{"mean", fit.mean},
              {"std_error", fit.std_error},
              {"ks_statistic", fit.ks_statistic},
              {"ks_p_value", fit.ks_p_value},
              {"n", fit.n},
              {"p_value_asymptotic", fit.n >= 100}};
  j["histogram"] = {{"bin_edges", hist.bin_edges},
                    {"densities", hist.densities},
                    {"n", hist.n}};
  j["values"] = set.values;
  j["scaled"] = set.scaled;
  return j;
}

std::string distribution_csv(const SeedBankParams& params,
                             const ExactDistribution& dist,
                             const std::string& label) {
  std::string out = "# seedbank distribution v1 label=" + label + "\n";
  out += params_comment(params);
  out += "index,mass\n";
  for (std::int64_t k = 0; k < dist.size(); ++k) {
    out += std::to_string(k) + ',' +
           format_double(dist.mass[static_cast<std::size_t>(k)]) + '\n';
  }
  return out;
}

nlohmann::ordered_json distribution_json(const SeedBankParams& params,
                                         const ExactDistribution& dist,
                                         const std::string& label) {
  nlohmann::ordered_json j;
  j["format"] = "seedbank distribution v1";
  j["label"] = label;
  j["config"] = params_json(params);
  j["mass"] = dist.mass;
  return j;
}

std::string mixing_csv(const MixingResult& result) {
  std::string out = "# seedbank mixing v1\n";
  out += params_comment(result.params);
  out += "# gamma=" + result.gamma.describe() +
         " first_step_tv_le_quarter=" +
         std::to_string(result.first_step_below_quarter) +
         " geometric_time_tv=" + format_double(result.geometric.tv) +
         " tail_bound=" + format_double(result.geometric.tail_bound) +
         " horizon=" + std::to_string(result.geometric.horizon) + "\n";
  out += "step,tv\n";
  for (const TvCurvePoint& point : result.curve) {
    out += std::to_string(point.step) + ',' + format_double(point.tv) + '\n';
  }
  return out;
}

nlohmann::ordered_json mixing_json(const MixingResult& result) {
  nlohmann::ordered_json j;
  j["format"] = "seedbank mixing v1";
  j["config"] = params_json(result.params);
  j["config"]["gamma"] = result.gamma.describe();
  j["first_step_tv_le_quarter"] = result.first_step_below_quarter;
  j["geometric_time_tv"] = {{"tv", result.geometric.tv},
                            {"tail_bound", result.geometric.tail_bound},
                            {"horizon", result.geometric.horizon}};
  nlohmann::ordered_json curve = nlohmann::ordered_json::array();
  for (const TvCurvePoint& point : result.curve)
    curve.push_back({{"step", point.step}, {"tv", point.tv}});
  j["curve"] = std::move(curve);
  return j;
}

nlohmann::ordered_json verification_json(std::uint64_t seed, bool quick,
                                         const std::vector<CheckResult>& results) {
  nlohmann::ordered_json j;
  j["format"] = "seedbank verification v1";
  j["seed"] = seed;
  j["quick"] = quick;
  j["all_passed"] = all_passed(results);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& r : results)
    checks.push_back(
        {{"name", r.name}, {"passed", r.passed}, {"details", r.details}});
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace seedbank
