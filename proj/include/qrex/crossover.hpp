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
#include "qrex/fault_tolerance.hpp"
#include "qrex/fcidump.hpp"

namespace qrex {

// Least-squares power-law fit of d(N) and lambda(N) in log-log space,
// evaluated at target_n. Needs at least two anchors with distinct N and
// positive values; d is clamped to the symmetry-expanded maximum. The
// result is labeled source = summary and uses the (N, N) CAS convention
// for the electron count.
HamiltonianStats extrapolate_stats(const std::vector<HamiltonianStats>& anchors, int target_n);

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;  // value at N = 1
};

// The log-log fit behind extrapolate_stats, exposed for scaling checks.
PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

struct SweepOptions {
  int n_min = 8;
  int n_max = 34;
  std::vector<Method> methods{Method::trotterization, Method::qubitization};
  std::vector<Strategy> strategies{Strategy::space_optimized, Strategy::time_optimized};
  std::vector<double> physical_error_rates{1e-3};
  bool include_vqe = true;
  // Stats parsed from instance files, keyed by N; sweep sizes not listed
  // here fall back to the calibrated power-law extrapolation.
  std::map<int, HamiltonianStats> provided_stats;
};

struct QuantumCurvePoint {
  Method method = Method::trotterization;
  Strategy strategy = Strategy::space_optimized;
  double physical_error_rate = 0.0;
  ResourceEstimate estimate;
};

struct SweepPoint {
  int n_orbitals = 0;
  int n_electrons = 0;
  HamiltonianStats stats;
  bool extrapolated = false;
  std::vector<QuantumCurvePoint> quantum;
  std::vector<std::pair<std::string, double>> classical_seconds;  // per machine
  std::optional<double> vqe_seconds;
  std::vector<std::string> errors;  // per-point failures, sweep continues
};

// Evaluates every (N, method, strategy, error rate, machine) combination.
// Points are independent and evaluated concurrently; the returned list is
// ordered by N.
std::vector<SweepPoint> run_sweep(const SweepOptions& options, const Calibration& cal);

struct CrossoverEntry {
  Method method = Method::trotterization;
  Strategy strategy = Strategy::space_optimized;
  double physical_error_rate = 0.0;
  std::string machine;
  std::optional<int> crossover_n;  // empty = none in range
  double quantum_seconds_at_crossover = 0.0;
  double classical_seconds_at_crossover = 0.0;
  bool classical_non_monotone = false;
};

struct CrossoverReport {
  std::vector<CrossoverEntry> entries;
};

// Smallest N where the quantum wallclock beats the classical runtime, per
// (method, strategy, error rate, machine) pair. Points must be sorted by N.
CrossoverReport find_crossover(const std::vector<SweepPoint>& points);

}  // namespace qrex
