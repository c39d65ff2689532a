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

#include "qrex/algorithm_cost.hpp"

namespace qrex {

// Surface-code hardware assumptions. The logical failure rate per qubit
// per logical timestep is modeled as A * (p / p_th)^((d+1)/2).
struct HardwareProfile {
  double physical_error_rate = 1e-3;  // p
  double cycle_time = 1e-6;           // seconds per code cycle
  double threshold = 1e-2;            // p_th
  double logical_prefactor = 0.1;     // A
};

enum class GateKind { t_gate, toffoli };
enum class Strategy { space_optimized, time_optimized };

const char* to_string(Strategy strategy);
const char* to_string(GateKind kind);

// Magic-state production region. Throughput is set by the spacetime price
// of one gate: a block of `footprint` qubits emits one non-Clifford gate
// every qubitseconds_per_gate / footprint seconds.
struct FactoryModel {
  GateKind gate_kind = GateKind::t_gate;
  double qubitseconds_per_gate = 14.0;  // 24.0 for Toffoli factories
  std::uint64_t footprint = 1;          // physical qubits per factory
  std::uint64_t n_factories = 1;
  Strategy strategy = Strategy::space_optimized;
  double pipeline_factor = 1.0;  // logical-clock parallelism of consumption

  std::uint64_t total_qubits() const { return footprint * n_factories; }
};

FactoryModel default_t_factory();        // 14 qubitseconds per T gate
FactoryModel default_toffoli_factory();  // 24 qubitseconds per Toffoli

struct EstimateOptions {
  double failure_budget = 1e-2;  // total-run failure probability
  double layout_factor = 2.0;    // physical qubits per logical = factor * d^2
  int max_code_distance = 99;
};

// End-to-end physical resources for one algorithm run.
struct ResourceEstimate {
  Method method = Method::trotterization;
  Strategy strategy = Strategy::space_optimized;
  double physical_error_rate = 0.0;
  int code_distance = 0;
  std::uint64_t physical_qubits_total = 0;
  std::uint64_t physical_qubits_data = 0;
  std::uint64_t physical_qubits_factories = 0;
  double wallclock_seconds = 0.0;
  double factory_qubitseconds = 0.0;    // = gate count x qubitseconds_per_gate
  double spacetime_qubitseconds = 0.0;  // factory share + data qubits x wallclock
  std::uint64_t logical_qubits = 0;
  std::uint64_t non_clifford_count = 0;
};

// Smallest odd code distance >= 3 whose total logical failure stays inside
// the budget. Throws on inputs no distance <= max_code_distance can satisfy.
int code_distance(std::uint64_t n_logical, std::uint64_t n_logical_timesteps,
                  const HardwareProfile& profile, double failure_budget,
                  int max_code_distance = 99);

struct PhysicalLayout {
  std::uint64_t data_qubits = 0;
  std::uint64_t factory_qubits = 0;
};

PhysicalLayout physical_layout(const AlgorithmCost& cost, int distance,
                               const FactoryModel& factory, double layout_factor = 2.0);

// Wallclock = max(factory-limited, logical-clock-limited) time.
double wallclock(const AlgorithmCost& cost, const FactoryModel& factory, int distance,
                 const HardwareProfile& profile);

ResourceEstimate estimate(const AlgorithmCost& cost, const HardwareProfile& profile,
                          const FactoryModel& factory,
                          const EstimateOptions& options = EstimateOptions{});

}  // namespace qrex
