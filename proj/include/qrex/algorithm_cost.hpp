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

namespace qrex {

enum class Method { trotterization, qubitization };

const char* to_string(Method method);

// Logical-level cost of one phase-estimation run. Trotterization pays in
// T gates, qubitization in Toffolis; the other count stays zero.
struct AlgorithmCost {
  Method method = Method::trotterization;
  std::uint64_t logical_qubits = 0;
  std::uint64_t t_count = 0;
  std::uint64_t toffoli_count = 0;
  std::uint64_t logical_depth = 0;  // sequential non-Clifford layers

  std::uint64_t non_clifford_count() const { return t_count + toffoli_count; }
};

}  // namespace qrex
