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

#include "qrex/report.hpp"

#include <cstdio>
#include <sstream>

#include "nlohmann/json.hpp"
#include "qrex/calibration.hpp"

namespace qrex {

namespace {

// Shortest decimal form that parses back to the same double.
std::string fmt(double v) {
  char buf[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::stod(buf) == v) break;
  }
  return buf;
}

std::string fmt_rate(double p) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.0e", p);
  return buf;
}

std::string curve_name(Method method, Strategy strategy, double p) {
  return std::string(to_string(method)) + "_" +
         (strategy == Strategy::space_optimized ? "space" : "time") + "_p" + fmt_rate(p);
}

}  // namespace

std::string format_duration(double seconds) {
  char buf[64];
  if (seconds >= kSecondsPerYear) {
    std::snprintf(buf, sizeof(buf), "%.3g years", seconds / kSecondsPerYear);
  } else if (seconds >= kSecondsPerDay) {
    std::snprintf(buf, sizeof(buf), "%.3g days", seconds / kSecondsPerDay);
  } else if (seconds >= kSecondsPerHour) {
    std::snprintf(buf, sizeof(buf), "%.3g hours", seconds / kSecondsPerHour);
  } else {
    std::snprintf(buf, sizeof(buf), "%.3g s", seconds);
  }
  return buf;
}

std::string stats_to_kv(const HamiltonianStats& stats) {
  std::ostringstream out;
  out << "n_orbitals = " << stats.n_orbitals << '\n'
      << "n_electrons = " << stats.n_electrons << '\n'
      << "n_terms = " << stats.n_terms << '\n'
      << "lambda = " << fmt(stats.lambda_one_norm) << '\n'
      << "truncation_threshold = " << fmt(stats.truncation_threshold) << '\n'
      << "source = " << to_string(stats.source) << '\n';
  return out.str();
}

nlohmann::ordered_json stats_to_json(const HamiltonianStats& stats) {
  nlohmann::ordered_json j;
  j["n_orbitals"] = stats.n_orbitals;
  j["n_electrons"] = stats.n_electrons;
  j["n_terms"] = stats.n_terms;
  j["lambda"] = stats.lambda_one_norm;
  j["truncation_threshold"] = stats.truncation_threshold;
  j["source"] = to_string(stats.source);
  return j;
}

std::string estimates_to_csv(const std::vector<ResourceEstimate>& estimates) {
  std::ostringstream out;
  out << "method,strategy,p,code_distance,physical_qubits_total,wallclock_seconds,"
         "spacetime_qubitseconds\n";
  for (const auto& e : estimates) {
    out << to_string(e.method) << ',' << to_string(e.strategy) << ','
        << fmt_rate(e.physical_error_rate) << ',' << e.code_distance << ','
        << e.physical_qubits_total << ',' << fmt(e.wallclock_seconds) << ','
        << fmt(e.spacetime_qubitseconds) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json estimates_to_json(const std::vector<ResourceEstimate>& estimates) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : estimates) {
    nlohmann::ordered_json j;
    j["method"] = to_string(e.method);
    j["strategy"] = to_string(e.strategy);
    j["p"] = e.physical_error_rate;
    j["code_distance"] = e.code_distance;
    j["logical_qubits"] = e.logical_qubits;
    j["non_clifford_count"] = e.non_clifford_count;
    j["physical_qubits_total"] = e.physical_qubits_total;
    j["physical_qubits_data"] = e.physical_qubits_data;
    j["physical_qubits_factories"] = e.physical_qubits_factories;
    j["wallclock_seconds"] = e.wallclock_seconds;
    j["wallclock_human"] = format_duration(e.wallclock_seconds);
    j["factory_qubitseconds"] = e.factory_qubitseconds;
    j["spacetime_qubitseconds"] = e.spacetime_qubitseconds;
    rows.push_back(std::move(j));
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points) {
  std::ostringstream out;
  out << "n_orbitals,method,strategy,p,machine,quantum_seconds,classical_seconds,"
         "vqe_seconds,physical_qubits_total,code_distance,stats_source,extrapolated\n";
  for (const auto& point : points) {
    for (const auto& curve : point.quantum) {
      for (const auto& [machine, classical] : point.classical_seconds) {
        out << point.n_orbitals << ',' << to_string(curve.method) << ','
            << to_string(curve.strategy) << ',' << fmt_rate(curve.physical_error_rate) << ','
            << machine << ',' << fmt(curve.estimate.wallclock_seconds) << ','
            << fmt(classical) << ','
            << (point.vqe_seconds ? fmt(*point.vqe_seconds) : std::string()) << ','
            << curve.estimate.physical_qubits_total << ',' << curve.estimate.code_distance
            << ',' << to_string(point.stats.source) << ',' << (point.extrapolated ? 1 : 0)
            << '\n';
      }
    }
  }
  return out.str();
}

nlohmann::ordered_json sweep_to_json(const std::vector<SweepPoint>& points,
                                     const CrossoverReport& crossover) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json point_rows = nlohmann::ordered_json::array();
  for (const auto& point : points) {
    nlohmann::ordered_json p;
    p["n_orbitals"] = point.n_orbitals;
    p["n_electrons"] = point.n_electrons;
    p["stats"] = stats_to_json(point.stats);
    p["extrapolated"] = point.extrapolated;
    nlohmann::ordered_json quantum = nlohmann::ordered_json::array();
    for (const auto& curve : point.quantum) {
      nlohmann::ordered_json q;
      q["method"] = to_string(curve.method);
      q["strategy"] = to_string(curve.strategy);
      q["p"] = curve.physical_error_rate;
      q["wallclock_seconds"] = curve.estimate.wallclock_seconds;
      q["physical_qubits_total"] = curve.estimate.physical_qubits_total;
      q["code_distance"] = curve.estimate.code_distance;
      quantum.push_back(std::move(q));
    }
    p["quantum"] = std::move(quantum);
    nlohmann::ordered_json classical;
    for (const auto& [machine, seconds] : point.classical_seconds) classical[machine] = seconds;
    p["classical_seconds"] = std::move(classical);
    if (point.vqe_seconds) p["vqe_seconds"] = *point.vqe_seconds;
    if (!point.errors.empty()) p["errors"] = point.errors;
    point_rows.push_back(std::move(p));
  }
  j["points"] = std::move(point_rows);

  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& entry : crossover.entries) {
    nlohmann::ordered_json e;
    e["method"] = to_string(entry.method);
    e["strategy"] = to_string(entry.strategy);
    e["p"] = entry.physical_error_rate;
    e["machine"] = entry.machine;
    if (entry.crossover_n) {
      e["crossover_n"] = *entry.crossover_n;
      e["quantum_seconds_at_crossover"] = entry.quantum_seconds_at_crossover;
      e["classical_seconds_at_crossover"] = entry.classical_seconds_at_crossover;
    } else {
      e["crossover_n"] = "none in range";
    }
    if (entry.classical_non_monotone) e["classical_non_monotone"] = true;
    entries.push_back(std::move(e));
  }
  j["crossover"] = std::move(entries);
  return j;
}

std::string crossover_to_csv(const CrossoverReport& report) {
  std::ostringstream out;
  out << "method,strategy,p,machine,crossover_n,quantum_seconds,classical_seconds\n";
  for (const auto& e : report.entries) {
    out << to_string(e.method) << ',' << to_string(e.strategy) << ','
        << fmt_rate(e.physical_error_rate) << ',' << e.machine << ',';
    if (e.crossover_n) {
      out << *e.crossover_n << ',' << fmt(e.quantum_seconds_at_crossover) << ','
          << fmt(e.classical_seconds_at_crossover);
    } else {
      out << "none in range,,";
    }
    out << '\n';
  }
  return out.str();
}

std::map<std::string, std::string> sweep_plot_data(const std::vector<SweepPoint>& points) {
  std::map<std::string, std::string> files;
  std::map<std::string, std::ostringstream> streams;
  for (const auto& point : points) {
    for (const auto& curve : point.quantum) {
      streams[curve_name(curve.method, curve.strategy, curve.physical_error_rate)]
          << point.n_orbitals << ' ' << fmt(curve.estimate.wallclock_seconds) << '\n';
    }
    for (const auto& [machine, seconds] : point.classical_seconds) {
      streams["classical_" + machine] << point.n_orbitals << ' ' << fmt(seconds) << '\n';
    }
    if (point.vqe_seconds) {
      streams["vqe_iteration"] << point.n_orbitals << ' ' << fmt(*point.vqe_seconds) << '\n';
    }
  }
  for (auto& [name, stream] : streams) {
    files["plot_" + name + ".dat"] = "# n_orbitals seconds\n" + stream.str();
  }
  return files;
}

}  // namespace qrex
