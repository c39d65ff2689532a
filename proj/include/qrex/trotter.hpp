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

#include "qrex/algorithm_cost.hpp"
#include "qrex/fcidump.hpp"

namespace qrex {

// Cost-model knobs for iterative phase estimation with product formulas.
//
// The Trotter number follows a shifted power law in the orbital count,
// r(N) = ceil(r0 * max(1, N - shift)^alpha). Each term exponential costs
// one rotation synthesized from ceil(a*log2(1/eps_syn) + b) T gates, a
// standard repeat-until-success budget. pe_constant sets the number of
// controlled-evolution segments per unit 1/epsilon.
struct TrotterCostModel {
  double trotter_r0 = 1.0;
  double trotter_alpha = 1.0;
  double trotter_shift = 0.0;
  double synthesis_a = 1.15;
  double synthesis_b = 9.2;
  double pe_constant = 1.5707963267948966;  // pi/2, iterative bit-by-bit QPE
};

// 2N spin-orbital qubits plus the single phase-readout ancilla.
std::uint64_t logical_qubits_trotter(int n_orbitals);

std::uint64_t trotter_number(int n_orbitals, const TrotterCostModel& model);

// Total T count for one ground-state energy estimation to accuracy
// `epsilon` (Hartree): segments x Trotter steps x terms x T-per-rotation.
// The synthesis budget splits epsilon evenly across all rotations.
AlgorithmCost trotter_t_count(const HamiltonianStats& stats, double epsilon,
                              const TrotterCostModel& model);

}  // namespace qrex
