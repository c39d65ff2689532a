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

#include "qrex/baselines.hpp"

#include <cmath>

#include "qrex/errors.hpp"

namespace qrex {

ClassicalMachine desktop_machine() { return {"desktop", 1.2e12}; }

ClassicalMachine hpc_machine() { return {"hpc", 1.25e17}; }

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace

BigInt determinant_count(int n_orbitals, int n_electrons) {
  if (n_orbitals < 1) throw ValidationError("n_orbitals must be at least 1");
  if (n_electrons < 0 || n_electrons > 2 * n_orbitals)
    throw ValidationError("n_electrons must lie in [0, 2*n_orbitals]");
  const int n_alpha = (n_electrons + 1) / 2;
  const int n_beta = n_electrons / 2;
  return binomial(n_orbitals, n_alpha) * binomial(n_orbitals, n_beta);
}

double casci_runtime(int n_orbitals, int n_electrons, const ClassicalMachine& machine,
                     double n_iterations, double flop_coefficient) {
  if (!(machine.flops > 0)) throw ValidationError("machine FLOPS must be positive");
  if (!(n_iterations > 0) || !(flop_coefficient > 0))
    throw ValidationError("iteration count and flop coefficient must be positive");
  const double determinants = static_cast<double>(determinant_count(n_orbitals, n_electrons));
  const double n4 = std::pow(static_cast<double>(n_orbitals), 4);
  return n_iterations * flop_coefficient * determinants * n4 / machine.flops;
}

const char* to_string(Ansatz ansatz) {
  switch (ansatz) {
    case Ansatz::linear_depth:
      return "linear_depth";
    case Ansatz::k_upccgsd:
      return "k_upccgsd";
    default:
      return "puccd";
  }
}

double ansatz_depth(Ansatz ansatz, int n_orbitals, const VqeConfig& config) {
  if (n_orbitals < 1) throw ValidationError("n_orbitals must be at least 1");
  switch (ansatz) {
    case Ansatz::linear_depth:
      return static_cast<double>(n_orbitals);
    case Ansatz::k_upccgsd:
      return config.k_upccgsd_depth_per_orbital * n_orbitals;
    default:
      return config.puccd_depth_per_orbital * n_orbitals;
  }
}

double vqe_iteration_time(const HamiltonianStats& stats, const VqeConfig& config,
                          double epsilon) {
  if (!(epsilon > 0)) throw ValidationError("epsilon must be positive");
  if (!(config.two_qubit_gate_time > 0) || !(config.measure_reset_time > 0))
    throw ValidationError("gate and measurement times must be positive");
  if (!(config.parallel_factor >= 1)) throw ValidationError("parallel_factor must be >= 1");
  if (!(config.shot_grouping_factor >= 1))
    throw ValidationError("shot_grouping_factor must be >= 1");

  const double ratio = stats.lambda_one_norm / epsilon;
  const double shots = std::ceil(ratio * ratio / config.shot_grouping_factor);
  if (shots == 0) return 0.0;
  const double circuit_time =
      ansatz_depth(config.ansatz, stats.n_orbitals, config) * config.two_qubit_gate_time +
      config.measure_reset_time;
  return shots * circuit_time / config.parallel_factor;
}

}  // namespace qrex
