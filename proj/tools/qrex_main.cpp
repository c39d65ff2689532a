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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "qrex/config.hpp"
#include "qrex/errors.hpp"
#include "qrex/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;    // estimation or internal failure
constexpr int kExitInputError = 2; // missing files, parse errors, bad config

struct CommonFlags {
  std::string config_path;
  std::string calibration_path;
  double epsilon = 0.0;        // 0 = keep config value
  std::string threshold;       // string so "inf" is accepted
  std::string output_dir;
  std::string format;
  std::string range;           // "A:B"
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_range) {
  cmd->add_option("--config", flags.config_path, "JSON run configuration");
  cmd->add_option("--calibration", flags.calibration_path,
                  "calibration file overriding the built-in constants");
  cmd->add_option("--epsilon", flags.epsilon, "precision target in Hartree");
  cmd->add_option("--threshold", flags.threshold,
                  "coefficient truncation threshold (accepts inf)");
  cmd->add_option("--output", flags.output_dir, "output directory");
  cmd->add_option("--format", flags.format, "report format: csv, json or both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  if (with_range) cmd->add_option("--range", flags.range, "sweep range A:B");
}

double parse_threshold(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "infinity")
    return std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  const double value = std::stod(text, &pos);
  if (pos != text.size()) throw qrex::ValidationError("bad threshold '" + text + "'");
  return value;
}

qrex::RunConfig resolve_config(const CommonFlags& flags) {
  qrex::RunConfig config = flags.config_path.empty()
                               ? qrex::default_run_config()
                               : qrex::load_run_config(flags.config_path);
  if (!flags.calibration_path.empty())
    config.calibration = qrex::load_calibration_file(flags.calibration_path);
  if (flags.epsilon != 0.0) {
    if (!(flags.epsilon > 0)) throw qrex::ValidationError("epsilon must be positive");
    config.calibration.epsilon = flags.epsilon;
  }
  if (!flags.threshold.empty()) config.thresholds = {parse_threshold(flags.threshold)};
  if (!flags.output_dir.empty()) {
    config.output_dir = flags.output_dir;
  } else if (const char* env = std::getenv("QREX_OUTPUT_DIR"); env && *env) {
    config.output_dir = env;
  }
  if (flags.format == "csv") config.format = qrex::OutputFormat::csv;
  if (flags.format == "json") config.format = qrex::OutputFormat::json;
  if (flags.format == "both") config.format = qrex::OutputFormat::both;
  if (!flags.range.empty()) {
    const auto colon = flags.range.find(':');
    if (colon == std::string::npos)
      throw qrex::ValidationError("range must be given as A:B");
    config.sweep_min = std::stoi(flags.range.substr(0, colon));
    config.sweep_max = std::stoi(flags.range.substr(colon + 1));
  }
  return config;
}

std::filesystem::path prepare_output_dir(const qrex::RunConfig& config) {
  std::filesystem::path dir(config.output_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw qrex::Error("cannot write '" + path.string() + "'");
  out << content;
  std::cout << "wrote " << path.string() << '\n';
}

void print_estimate_table(const std::vector<qrex::ResourceEstimate>& rows) {
  std::printf("%-15s %-16s %-6s %9s %9s %14s  %s\n", "method", "strategy", "p", "logical",
              "distance", "physical", "runtime");
  for (const auto& r : rows) {
    std::printf("%-15s %-16s %-6.0e %9llu %9d %14.3e  %s\n", qrex::to_string(r.method),
                qrex::to_string(r.strategy), r.physical_error_rate,
                static_cast<unsigned long long>(r.logical_qubits), r.code_distance,
                static_cast<double>(r.physical_qubits_total),
                qrex::format_duration(r.wallclock_seconds).c_str());
  }
}

int cmd_parse(const std::string& path, const CommonFlags& flags) {
  const qrex::RunConfig config = resolve_config(flags);
  const qrex::FciDump dump = qrex::parse_fcidump_file(path);
  for (double threshold : config.thresholds) {
    if (config.thresholds.size() > 1)
      std::cout << "# threshold = " << threshold << '\n';
    const auto stats = qrex::sparsify(dump, threshold);
    std::cout << stats_to_kv(stats);
  }
  return kExitOk;
}

int cmd_estimate(const CommonFlags& flags, bool table2) {
  const qrex::RunConfig config = resolve_config(flags);
  const qrex::Calibration& cal = config.calibration;

  std::vector<qrex::ResourceEstimate> rows;
  nlohmann::ordered_json report;
  report["schema_version"] = 1;
  report["epsilon"] = cal.epsilon;

  if (table2) {
    rows = qrex::reference_estimates(cal);
    report["input"] = "cr2_26_26_calibrated";
    report["stats"] = qrex::stats_to_json(cal.cr2_sparse_stats());
  } else {
    qrex::HamiltonianStats stats;
    if (!config.fcidump_path.empty()) {
      const qrex::FciDump dump = qrex::parse_fcidump_file(config.fcidump_path);
      stats = qrex::sparsify(dump, config.thresholds.front());
      report["input"] = config.fcidump_path;
    } else if (config.summary) {
      stats = *config.summary;
      report["input"] = "summary";
    } else {
      throw qrex::ValidationError(
          "no input: pass --table2, or a config with input.fcidump or input.summary");
    }
    report["stats"] = qrex::stats_to_json(stats);
    for (qrex::Method method : config.methods) {
      const qrex::AlgorithmCost cost =
          method == qrex::Method::trotterization
              ? qrex::trotter_t_count(stats, cal.epsilon, cal.trotter)
              : qrex::qubitization_cost(stats, cal.epsilon, cal.qubitization);
      for (double p : config.error_rates) {
        for (qrex::Strategy strategy : config.strategies) {
          try {
            rows.push_back(qrex::estimate_calibrated(cost, p, strategy, cal));
          } catch (const qrex::Error& e) {
            std::fprintf(stderr, "qrex: estimate failed for %s/%s p=%.0e: %s\n",
                         qrex::to_string(method), qrex::to_string(strategy), p, e.what());
            return kExitFailure;
          }
        }
      }
    }
  }

  report["estimates"] = qrex::estimates_to_json(rows);
  const auto dir = prepare_output_dir(config);
  if (config.format != qrex::OutputFormat::json)
    write_file(dir / "estimate.csv", qrex::estimates_to_csv(rows));
  if (config.format != qrex::OutputFormat::csv)
    write_file(dir / "estimate.json", report.dump(2) + "\n");
  print_estimate_table(rows);
  return kExitOk;
}

int cmd_sweep(const CommonFlags& flags) {
  const qrex::RunConfig config = resolve_config(flags);
  const qrex::SweepOptions options = qrex::sweep_options_from_config(config);
  const auto points = qrex::run_sweep(options, config.calibration);
  const auto crossover = qrex::find_crossover(points);

  const auto dir = prepare_output_dir(config);
  if (config.format != qrex::OutputFormat::json) {
    write_file(dir / "sweep.csv", qrex::sweep_to_csv(points));
    write_file(dir / "crossover.csv", qrex::crossover_to_csv(crossover));
  }
  if (config.format != qrex::OutputFormat::csv) {
    write_file(dir / "sweep.json",
               qrex::sweep_to_json(points, crossover).dump(2) + "\n");
  }
  for (const auto& [name, content] : qrex::sweep_plot_data(points))
    write_file(dir / name, content);

  for (const auto& e : crossover.entries) {
    if (e.crossover_n) {
      std::printf("crossover %-15s %-16s p=%-6.0e vs %-8s N=%d (quantum %s)\n",
                  qrex::to_string(e.method), qrex::to_string(e.strategy),
                  e.physical_error_rate, e.machine.c_str(), *e.crossover_n,
                  qrex::format_duration(e.quantum_seconds_at_crossover).c_str());
    } else {
      std::printf("crossover %-15s %-16s p=%-6.0e vs %-8s none in range\n",
                  qrex::to_string(e.method), qrex::to_string(e.strategy),
                  e.physical_error_rate, e.machine.c_str());
    }
  }
  return kExitOk;
}

int cmd_calibrate(const CommonFlags& flags) {
  const qrex::RunConfig config = resolve_config(flags);
  const qrex::Calibration cal = qrex::default_calibration();
  const auto dir = prepare_output_dir(config);
  qrex::write_calibration_file(cal, (dir / "calibration.cfg").string());
  std::cout << "wrote " << (dir / "calibration.cfg").string() << '\n';
  print_estimate_table(qrex::reference_estimates(cal));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fault-tolerant quantum resource estimation for active-space chemistry"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string parse_path;
  bool table2 = false;

  CLI::App* parse_cmd =
      app.add_subcommand("parse", "parse an FCIDUMP file and print Hamiltonian stats");
  parse_cmd->add_option("path", parse_path, "FCIDUMP file")->required();
  add_common_flags(parse_cmd, flags, false);

  CLI::App* estimate_cmd =
      app.add_subcommand("estimate", "fault-tolerant resource estimates for one Hamiltonian");
  estimate_cmd->add_flag("--table2", table2,
                         "emit the calibrated Cr2 (26,26) reference grid");
  add_common_flags(estimate_cmd, flags, false);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "sweep CAS sizes and report the quantum-classical crossover");
  add_common_flags(sweep_cmd, flags, true);

  CLI::App* calibrate_cmd =
      app.add_subcommand("calibrate", "recompute model constants and write the calibration file");
  add_common_flags(calibrate_cmd, flags, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse_cmd->parsed()) return cmd_parse(parse_path, flags);
    if (estimate_cmd->parsed()) return cmd_estimate(flags, table2);
    if (sweep_cmd->parsed()) return cmd_sweep(flags);
    if (calibrate_cmd->parsed()) return cmd_calibrate(flags);
  } catch (const qrex::ParseError& e) {
    std::fprintf(stderr, "qrex: %s\n", e.what());
    return kExitInputError;
  } catch (const qrex::Error& e) {
    const std::string what = e.what();
    std::fprintf(stderr, "qrex: %s\n", what.c_str());
    return what.rfind("cannot open", 0) == 0 ? kExitInputError : kExitFailure;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qrex: %s\n", e.what());
    return kExitFailure;
  }
  return kExitOk;
}
