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

#include "qrex/trotter.hpp"

#include <cmath>

#include "qrex/errors.hpp"

namespace qrex {

const char* to_string(Method method) {
  return method == Method::trotterization ? "trotterization" : "qubitization";
}

std::uint64_t logical_qubits_trotter(int n_orbitals) {
  if (n_orbitals < 1) throw ValidationError("n_orbitals must be at least 1");
  return 2 * static_cast<std::uint64_t>(n_orbitals) + 1;
}

std::uint64_t trotter_number(int n_orbitals, const TrotterCostModel& model) {
  if (n_orbitals < 1) throw ValidationError("n_orbitals must be at least 1");
  if (model.trotter_r0 < 0 || model.trotter_alpha < 0)
    throw ValidationError("Trotter scaling parameters must be nonnegative");
  const double base = std::max(1.0, static_cast<double>(n_orbitals) - model.trotter_shift);
  const double r = model.trotter_r0 * std::pow(base, model.trotter_alpha);
  if (!(r >= 0) || r > 9.0e18) throw ValidationError("Trotter number out of range");
  return static_cast<std::uint64_t>(std::ceil(r));
}

namespace {

std::uint64_t phase_estimation_segments(double epsilon, const TrotterCostModel& model) {
  if (!(epsilon > 0)) throw ValidationError("epsilon must be positive");
  const double u = std::ceil(model.pe_constant / epsilon);
  if (u > 9.0e18) throw ValidationError("phase-estimation segment count out of range");
  return static_cast<std::uint64_t>(std::max(1.0, u));
}

std::uint64_t t_per_rotation(double epsilon_syn, const TrotterCostModel& model) {
  const double c = model.synthesis_a * std::log2(1.0 / epsilon_syn) + model.synthesis_b;
  return static_cast<std::uint64_t>(std::ceil(std::max(1.0, c)));
}

}  // namespace

AlgorithmCost trotter_t_count(const HamiltonianStats& stats, double epsilon,
                              const TrotterCostModel& model) {
  AlgorithmCost cost;
  cost.method = Method::trotterization;
  cost.logical_qubits = logical_qubits_trotter(stats.n_orbitals);
  if (!(epsilon > 0)) throw ValidationError("epsilon must be positive");
  if (stats.n_terms == 0) return cost;  // empty Hamiltonian, nothing to simulate

  const std::uint64_t segments = phase_estimation_segments(epsilon, model);
  const std::uint64_t steps = trotter_number(stats.n_orbitals, model);
  const unsigned __int128 rotations =
      static_cast<unsigned __int128>(segments) * steps * stats.n_terms;
  if (rotations > static_cast<unsigned __int128>(4.0e18))
    throw ValidationError("rotation count overflows the cost model");

  const double epsilon_syn = epsilon / static_cast<double>(rotations);
  const std::uint64_t per_rotation = t_per_rotation(epsilon_syn, model);
  const unsigned __int128 total = rotations * per_rotation;
  if (total > static_cast<unsigned __int128>(4.0e18))
    throw ValidationError("T count overflows the cost model");

  cost.t_count = static_cast<std::uint64_t>(total);
  cost.logical_depth = cost.t_count;  // serial rotation model
  return cost;
}

}  // namespace qrex
