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
#include <string>
#include <vector>

#include "nlohmann/json_fwd.hpp"
#include "qrex/crossover.hpp"
#include "qrex/fault_tolerance.hpp"
#include "qrex/fcidump.hpp"

namespace qrex {

// Seconds rendered with a human unit (s / hours / days / years); internal
// math stays in seconds, this is presentation only.
std::string format_duration(double seconds);

// Flat key-value rendering of Hamiltonian stats.
std::string stats_to_kv(const HamiltonianStats& stats);
nlohmann::ordered_json stats_to_json(const HamiltonianStats& stats);

// CSV schema v1: method,strategy,p,code_distance,physical_qubits_total,
// wallclock_seconds,spacetime_qubitseconds
std::string estimates_to_csv(const std::vector<ResourceEstimate>& estimates);
nlohmann::ordered_json estimates_to_json(const std::vector<ResourceEstimate>& estimates);

// Sweep CSV schema v1: one row per (N, method, strategy, p, machine).
std::string sweep_to_csv(const std::vector<SweepPoint>& points);
nlohmann::ordered_json sweep_to_json(const std::vector<SweepPoint>& points,
                                     const CrossoverReport& crossover);
std::string crossover_to_csv(const CrossoverReport& report);

// Per-curve plot data, filename -> "N seconds" rows, ready for external
// plotting tools.
std::map<std::string, std::string> sweep_plot_data(const std::vector<SweepPoint>& points);

}  // namespace qrex
