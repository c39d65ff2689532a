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

#include <cstdint>
#include <string>
#include <vector>

#include "qrex/baselines.hpp"
#include "qrex/fault_tolerance.hpp"
#include "qrex/fcidump.hpp"
#include "qrex/qubitization.hpp"
#include "qrex/trotter.hpp"

namespace qrex {

constexpr double kSecondsPerHour = 3600.0;
constexpr double kSecondsPerDay = 86400.0;
constexpr double kSecondsPerYear = 365.25 * 86400.0;  // Julian year

// One reference anchor row: target physical-qubit count and runtime for
// a Cr2 (26,26) ground-state estimation.
struct ReferenceRow {
  Method method;
  double physical_error_rate;
  Strategy strategy;
  double physical_qubits;
  double runtime_seconds;
};

// The eight Cr2 (26,26) anchor rows the calibration is fitted against.
const std::vector<ReferenceRow>& reference_rows();

// Reference logical-qubit counts for Cr2 (26,26).
constexpr std::uint64_t kReferenceTrotterLogicalQubits = 53;
constexpr std::uint64_t kReferenceQubitizationLogicalQubits = 1366;

// Every tunable constant of the toolkit, pinned by the calibration run.
struct Calibration {
  int version = 1;
  double epsilon = 1.6e-3;  // chemical accuracy, Hartree
  double truncation_threshold = 0.0;

  TrotterCostModel trotter;
  QubitizationCostModel qubitization;
  EstimateOptions options;

  double cycle_time = 1e-6;
  double surface_threshold = 1e-2;
  double logical_prefactor = 0.1;
  std::vector<double> physical_error_rates{1e-3, 1e-6};

  // Cr2 (26,26) Hamiltonian anchors chosen by the calibration (the sparse
  // set feeds qubitization; the untruncated set feeds Trotterization).
  int cr2_n_orbitals = 26;
  std::uint64_t cr2_d_sparse = 120000;
  std::uint64_t cr2_d_full = 160000;
  double cr2_lambda = 425.0;
  double cr2_lambda_full = 472.0;

  // Power-law anchors for extrapolating d(N) and lambda(N) over a sweep.
  std::vector<HamiltonianStats> sweep_anchors;

  // Factory presets per (gate kind, error rate, strategy).
  std::vector<FactoryModel> t_factories;        // index: profile*2 + strategy
  std::vector<FactoryModel> toffoli_factories;  // same layout

  std::vector<ClassicalMachine> machines;
  double casci_n_iterations = 10.0;
  double casci_flop_coefficient = 1.0;
  VqeConfig vqe;

  int abp_n_orbitals = 1569;
  int abp_n_electrons = 90;

  int sweep_min = 8;
  int sweep_max = 34;

  HardwareProfile profile(double physical_error_rate) const;
  const FactoryModel& factory(Method method, double physical_error_rate,
                              Strategy strategy) const;
  HamiltonianStats cr2_sparse_stats() const;
  HamiltonianStats cr2_full_stats() const;
};

// Derives the full constant set from the reference rows. Deterministic;
// this is what the `calibrate` command runs.
Calibration default_calibration();

// The eight calibrated estimates matching reference_rows(), in order.
std::vector<ResourceEstimate> reference_estimates(const Calibration& cal);

ResourceEstimate estimate_calibrated(const AlgorithmCost& cost, double physical_error_rate,
                                     Strategy strategy, const Calibration& cal);

// Flat `key = value` serialization with provenance comments.
std::string calibration_to_string(const Calibration& cal);
void write_calibration_file(const Calibration& cal, const std::string& path);
Calibration load_calibration_file(const std::string& path);

}  // namespace qrex
