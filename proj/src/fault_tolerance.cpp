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

#include "qrex/fault_tolerance.hpp"

#include <algorithm>
#include <cmath>

#include "qrex/errors.hpp"

namespace qrex {

const char* to_string(Strategy strategy) {
  return strategy == Strategy::space_optimized ? "space_optimized" : "time_optimized";
}

const char* to_string(GateKind kind) { return kind == GateKind::t_gate ? "T" : "Toffoli"; }

FactoryModel default_t_factory() {
  FactoryModel f;
  f.gate_kind = GateKind::t_gate;
  f.qubitseconds_per_gate = 14.0;
  return f;
}

FactoryModel default_toffoli_factory() {
  FactoryModel f;
  f.gate_kind = GateKind::toffoli;
  f.qubitseconds_per_gate = 24.0;
  return f;
}

namespace {

void validate(const HardwareProfile& profile) {
  if (!(profile.physical_error_rate > 0) || !(profile.physical_error_rate < profile.threshold))
    throw ValidationError("physical error rate must lie in (0, threshold)");
  if (!(profile.threshold < 1)) throw ValidationError("threshold must be below 1");
  if (!(profile.cycle_time > 0)) throw ValidationError("cycle time must be positive");
  if (!(profile.logical_prefactor > 0))
    throw ValidationError("logical prefactor must be positive");
}

void validate(const FactoryModel& factory) {
  if (!(factory.qubitseconds_per_gate > 0))
    throw ValidationError("qubitseconds_per_gate must be positive");
  if (!(factory.pipeline_factor >= 1))
    throw ValidationError("pipeline_factor must be at least 1");
}

}  // namespace

int code_distance(std::uint64_t n_logical, std::uint64_t n_logical_timesteps,
                  const HardwareProfile& profile, double failure_budget,
                  int max_code_distance) {
  validate(profile);
  if (n_logical == 0) throw ValidationError("need at least one logical qubit");
  if (!(failure_budget > 0) || !(failure_budget < 1))
    throw ValidationError("failure budget must lie in (0, 1)");
  n_logical_timesteps = std::max<std::uint64_t>(n_logical_timesteps, 1);

  // Work in logs: ln(n*T*A) + ((d+1)/2) ln(p/p_th) <= ln(budget).
  const double log_workload = std::log(static_cast<double>(n_logical)) +
                              std::log(static_cast<double>(n_logical_timesteps)) +
                              std::log(profile.logical_prefactor);
  const double log_suppression =
      std::log(profile.physical_error_rate / profile.threshold);  // negative
  for (int d = 3; d <= max_code_distance; d += 2) {
    const double log_failure = log_workload + 0.5 * (d + 1) * log_suppression;
    if (log_failure <= std::log(failure_budget)) return d;
  }
  throw ValidationError("code distance overflow: no distance <= " +
                        std::to_string(max_code_distance) + " meets the failure budget");
}

PhysicalLayout physical_layout(const AlgorithmCost& cost, int distance,
                               const FactoryModel& factory, double layout_factor) {
  if (distance < 3 || distance % 2 == 0)
    throw ValidationError("code distance must be odd and at least 3");
  if (!(layout_factor > 0)) throw ValidationError("layout factor must be positive");
  PhysicalLayout layout;
  const double data = layout_factor * static_cast<double>(distance) * distance *
                      static_cast<double>(cost.logical_qubits);
  layout.data_qubits = static_cast<std::uint64_t>(std::llround(data));
  layout.factory_qubits = factory.total_qubits();
  return layout;
}

double wallclock(const AlgorithmCost& cost, const FactoryModel& factory, int distance,
                 const HardwareProfile& profile) {
  validate(profile);
  validate(factory);
  const double clock_limited = static_cast<double>(cost.logical_depth) * distance *
                               profile.cycle_time / factory.pipeline_factor;
  const std::uint64_t gates = cost.non_clifford_count();
  if (gates == 0) return clock_limited;
  if (factory.total_qubits() == 0)
    throw ValidationError("non-Clifford gates require at least one factory qubit");
  const double factory_limited = static_cast<double>(gates) * factory.qubitseconds_per_gate /
                                 static_cast<double>(factory.total_qubits());
  return std::max(factory_limited, clock_limited);
}

ResourceEstimate estimate(const AlgorithmCost& cost, const HardwareProfile& profile,
                          const FactoryModel& factory, const EstimateOptions& options) {
  ResourceEstimate r;
  r.method = cost.method;
  r.strategy = factory.strategy;
  r.physical_error_rate = profile.physical_error_rate;
  r.logical_qubits = cost.logical_qubits;
  r.non_clifford_count = cost.non_clifford_count();
  r.code_distance = code_distance(cost.logical_qubits, cost.logical_depth, profile,
                                  options.failure_budget, options.max_code_distance);
  const PhysicalLayout layout =
      physical_layout(cost, r.code_distance, factory, options.layout_factor);
  r.physical_qubits_data = layout.data_qubits;
  r.physical_qubits_factories = layout.factory_qubits;
  r.physical_qubits_total = layout.data_qubits + layout.factory_qubits;
  r.wallclock_seconds = wallclock(cost, factory, r.code_distance, profile);
  r.factory_qubitseconds =
      static_cast<double>(r.non_clifford_count) * factory.qubitseconds_per_gate;
  r.spacetime_qubitseconds =
      r.factory_qubitseconds + static_cast<double>(r.physical_qubits_data) * r.wallclock_seconds;
  return r;
}

}  // namespace qrex
