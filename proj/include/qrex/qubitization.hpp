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

// Cost-model knobs for phase estimation on a sparse block encoding.
//
// Each qubitization iteration pays a QROM lookup over the d nonzero terms:
// ceil(d/k) + m*(k-1) Toffolis, where k trades lookup depth against output
// registers and m is the coefficient bit width. qrom_k = 0 selects the
// power of two in [1, 2^20] minimizing the sum.
struct QubitizationCostModel {
  int coeff_bits_m = 22;
  std::uint64_t qrom_k = 0;  // 0 = auto
  double per_iter_linear_c = 0.0;
  std::uint64_t per_iter_const = 0;
  std::uint64_t ancilla_const = 0;
};

// Phase-estimation iteration count ceil(pi * lambda / (2 * epsilon)).
std::uint64_t qpe_iterations(double lambda, double epsilon);

// Toffolis per qubitization iteration; minimized over k in auto mode.
std::uint64_t toffoli_per_iteration(std::uint64_t d, int n_orbitals,
                                    const QubitizationCostModel& model);

// The k the model settles on (the fixed value, or the auto minimizer).
std::uint64_t qrom_k_chosen(std::uint64_t d, const QubitizationCostModel& model);

// Full Toffoli cost and logical-qubit footprint of one QPE run.
AlgorithmCost qubitization_cost(const HamiltonianStats& stats, double epsilon,
                                const QubitizationCostModel& model);

}  // namespace qrex
