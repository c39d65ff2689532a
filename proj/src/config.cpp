// Copyright 2026 The qrex authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrex/config.hpp"

#include <fstream>
#include <sstream>

#include "nlohmann/json.hpp"
#include "qrex/errors.hpp"

namespace qrex {

const char* to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::json:
      return "json";
    default:
      return "both";
  }
}

RunConfig default_run_config() {
  RunConfig config;
  config.calibration = default_calibration();
  config.sweep_min = config.calibration.sweep_min;
  config.sweep_max = config.calibration.sweep_max;
  return config;
}

namespace {

Method method_from_string(const std::string& s) {
  if (s == "trotterization") return Method::trotterization;
  if (s == "qubitization") return Method::qubitization;
  throw ValidationError("unknown method '" + s + "'");
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "space_optimized") return Strategy::space_optimized;
  if (s == "time_optimized") return Strategy::time_optimized;
  throw ValidationError("unknown strategy '" + s + "'");
}

Ansatz ansatz_from_string(const std::string& s) {
  if (s == "linear_depth") return Ansatz::linear_depth;
  if (s == "k_upccgsd") return Ansatz::k_upccgsd;
  if (s == "puccd") return Ansatz::puccd;
  throw ValidationError("unknown ansatz '" + s + "'");
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "both") return OutputFormat::both;
  throw ValidationError("unknown output format '" + s + "'");
}

void apply_json(RunConfig& config, const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("config root must be a JSON object");

  if (j.contains("calibration_file"))
    config.calibration = load_calibration_file(j.at("calibration_file").get<std::string>());
  if (j.contains("epsilon")) config.calibration.epsilon = j.at("epsilon").get<double>();
  if (!(config.calibration.epsilon > 0)) throw ValidationError("epsilon must be positive");

  if (j.contains("threshold")) config.thresholds = {j.at("threshold").get<double>()};
  if (j.contains("thresholds")) config.thresholds = j.at("thresholds").get<std::vector<double>>();

  if (j.contains("methods")) {
    config.methods.clear();
    for (const auto& m : j.at("methods")) config.methods.push_back(method_from_string(m));
  }
  if (j.contains("strategies")) {
    config.strategies.clear();
    for (const auto& s : j.at("strategies"))
      config.strategies.push_back(strategy_from_string(s));
  }
  if (j.contains("error_rates"))
    config.error_rates = j.at("error_rates").get<std::vector<double>>();

  if (j.contains("input")) {
    const auto& input = j.at("input");
    if (input.contains("fcidump")) config.fcidump_path = input.at("fcidump").get<std::string>();
    if (input.contains("summary")) {
      const auto& s = input.at("summary");
      config.summary = stats_from_summary(
          s.at("n_orbitals").get<int>(), s.at("n_electrons").get<int>(),
          s.at("n_terms").get<std::uint64_t>(), s.at("lambda").get<double>());
    }
  }

  if (j.contains("sweep")) {
    const auto& s = j.at("sweep");
    if (s.contains("min")) config.sweep_min = s.at("min").get<int>();
    if (s.contains("max")) config.sweep_max = s.at("max").get<int>();
    if (s.contains("error_rates"))
      config.sweep_error_rates = s.at("error_rates").get<std::vector<double>>();
    if (s.contains("include_vqe")) config.sweep_include_vqe = s.at("include_vqe").get<bool>();
    if (s.contains("corpus")) {
      for (const auto& [key, value] : s.at("corpus").items())
        config.sweep_corpus[std::stoi(key)] = value.get<std::string>();
    }
  }

  if (j.contains("machines")) {
    for (const auto& m : j.at("machines")) {
      ClassicalMachine machine{m.at("name").get<std::string>(), m.at("flops").get<double>()};
      if (!(machine.flops > 0)) throw ValidationError("machine FLOPS must be positive");
      config.calibration.machines.push_back(machine);
    }
  }

  if (j.contains("vqe")) {
    const auto& v = j.at("vqe");
    auto& vqe = config.calibration.vqe;
    if (v.contains("ansatz")) vqe.ansatz = ansatz_from_string(v.at("ansatz"));
    if (v.contains("two_qubit_gate_time"))
      vqe.two_qubit_gate_time = v.at("two_qubit_gate_time").get<double>();
    if (v.contains("measure_reset_time"))
      vqe.measure_reset_time = v.at("measure_reset_time").get<double>();
    if (v.contains("parallel_factor")) vqe.parallel_factor = v.at("parallel_factor").get<double>();
    if (v.contains("shot_grouping_factor"))
      vqe.shot_grouping_factor = v.at("shot_grouping_factor").get<double>();
  }

  if (j.contains("output")) {
    const auto& o = j.at("output");
    if (o.contains("dir")) config.output_dir = o.at("dir").get<std::string>();
    if (o.contains("format")) config.format = format_from_string(o.at("format"));
  }

  if (config.methods.empty()) throw ValidationError("config needs at least one method");
  if (config.error_rates.empty())
    throw ValidationError("config needs at least one hardware error rate");
  if (config.calibration.machines.empty())
    throw ValidationError("config needs at least one classical machine");
}

}  // namespace

RunConfig run_config_from_json_text(const std::string& text) {
  RunConfig config = default_run_config();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  apply_json(config, j);
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return run_config_from_json_text(text.str());
}

SweepOptions sweep_options_from_config(const RunConfig& config) {
  SweepOptions options;
  options.n_min = config.sweep_min;
  options.n_max = config.sweep_max;
  options.methods = config.methods;
  options.strategies = config.strategies;
  options.physical_error_rates = config.sweep_error_rates;
  options.include_vqe = config.sweep_include_vqe;
  for (const auto& [n, path] : config.sweep_corpus) {
    const FciDump dump = parse_fcidump_file(path);
    options.provided_stats[n] = sparsify(dump, config.thresholds.front());
  }
  return options;
}

}  // namespace qrex
