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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrex/calibration.hpp"
#include "qrex/crossover.hpp"

namespace qrex {

enum class OutputFormat { csv, json, both };

// Run configuration with full defaulting: an empty config file reproduces
// the calibrated defaults end to end.
struct RunConfig {
  Calibration calibration;

  std::vector<double> thresholds{0.0};  // sparsification thresholds to report
  std::vector<Method> methods{Method::trotterization, Method::qubitization};
  std::vector<Strategy> strategies{Strategy::space_optimized, Strategy::time_optimized};
  std::vector<double> error_rates{1e-3, 1e-6};

  // Estimation input: an integral file, or direct summary stats.
  std::string fcidump_path;
  std::optional<HamiltonianStats> summary;

  // Sweep settings; corpus maps an N to an instance file.
  int sweep_min = 8;
  int sweep_max = 34;
  std::vector<double> sweep_error_rates{1e-3};
  bool sweep_include_vqe = true;
  std::map<int, std::string> sweep_corpus;

  std::string output_dir = ".";
  OutputFormat format = OutputFormat::both;
};

RunConfig default_run_config();

// Loads a JSON config; every key optional. Throws ParseError / Error on
// malformed content.
RunConfig load_run_config(const std::string& path);
RunConfig run_config_from_json_text(const std::string& text);

// Translates the sweep-related settings into crossover::SweepOptions,
// parsing any corpus files listed.
SweepOptions sweep_options_from_config(const RunConfig& config);

const char* to_string(OutputFormat format);

}  // namespace qrex
