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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "qrex/fcidump.hpp"

namespace qrex {

using BigInt = boost::multiprecision::cpp_int;

struct ClassicalMachine {
  std::string name;
  double flops = 0.0;
};

// Bundled presets: a high-end desktop CPU and a top-5 supercomputer.
ClassicalMachine desktop_machine();  // 1.2e12 FLOPS
ClassicalMachine hpc_machine();      // 1.25e17 FLOPS

// Slater-determinant count of a CAS(eta, N) problem:
// C(N, ceil(eta/2)) * C(N, floor(eta/2)), exact.
BigInt determinant_count(int n_orbitals, int n_electrons);

// Davidson-style iteration model: n_iterations sigma-builds, each costing
// flop_coefficient * D * N^4 floating operations.
double casci_runtime(int n_orbitals, int n_electrons, const ClassicalMachine& machine,
                     double n_iterations = 10.0, double flop_coefficient = 1.0);

enum class Ansatz { linear_depth, k_upccgsd, puccd };

const char* to_string(Ansatz ansatz);

struct VqeConfig {
  Ansatz ansatz = Ansatz::linear_depth;
  double two_qubit_gate_time = 1e-7;  // seconds, superconducting-scale
  double measure_reset_time = 1e-6;   // seconds
  double parallel_factor = 1.0;
  double shot_grouping_factor = 16.0;  // commuting-group measurement reduction
  double k_upccgsd_depth_per_orbital = 3.0;
  double puccd_depth_per_orbital = 1.0;
};

// Two-qubit-gate depth of the ansatz on 2N spin-orbital qubits with a
// nearest-neighbour swap network; linear_depth is exactly N.
double ansatz_depth(Ansatz ansatz, int n_orbitals, const VqeConfig& config);

// Hamiltonian-averaging time for one optimizer iteration: the (lambda /
// epsilon)^2 shot count times the per-shot circuit time.
double vqe_iteration_time(const HamiltonianStats& stats, const VqeConfig& config,
                          double epsilon);

}  // namespace qrex
