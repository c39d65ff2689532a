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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qrex {

// One stored integral line. Indices are 1-based spatial orbitals in
// chemists' notation (ij|kl); (i,j,0,0) is a one-electron entry.
struct IntegralRecord {
  int i = 0, j = 0, k = 0, l = 0;
  double value = 0.0;

  bool one_electron() const { return k == 0 && l == 0; }
};

// Canonical representative of the record's index quadruple under the
// 8-fold permutational symmetry (2-fold for one-electron entries).
std::array<int, 4> canonical_indices(const IntegralRecord& rec);

// Number of distinct index quadruples in the symmetry orbit of `rec`:
// 1, 2, 4 or 8 for two-electron entries, 1 or 2 for one-electron ones.
std::uint64_t symmetry_multiplicity(const IntegralRecord& rec);

// Parsed second-quantized Hamiltonian file (header + integral list).
struct FciDump {
  int n_orbitals = 0;
  int n_electrons = 0;
  int ms2 = 0;
  std::vector<int> orbital_symmetries;
  double core_energy = 0.0;
  bool has_core_energy = false;
  std::vector<IntegralRecord> integrals;
  // Unrecognized namelist keys, kept verbatim in file order.
  std::vector<std::pair<std::string, std::string>> extra_keys;
};

// Content equality: header fields plus set equality of canonicalized
// integral records. Line order never matters.
bool operator==(const FciDump& a, const FciDump& b);
inline bool operator!=(const FciDump& a, const FciDump& b) { return !(a == b); }

// Parsers. The stream/string variants accept the same dialects: "&END" or
// "/" namelist terminators, free-form whitespace, Fortran 'D' exponents.
// Throw ParseError (with line number) on malformed input.
FciDump parse_fcidump(std::istream& in);
FciDump parse_fcidump_string(const std::string& text);
FciDump parse_fcidump_file(const std::string& path);

// Writes a file that parses back to an identical FciDump.
std::string serialize_fcidump(const FciDump& dump);

// Summary statistics of a Hamiltonian, the input to every cost model.
struct HamiltonianStats {
  int n_orbitals = 0;
  int n_electrons = 0;
  std::uint64_t n_terms = 0;       // d, counted with symmetry expansion
  double lambda_one_norm = 0.0;    // sum |coefficient| over expanded terms
  double truncation_threshold = 0.0;
  enum class Source { parsed, summary } source = Source::parsed;
};

const char* to_string(HamiltonianStats::Source source);

// Counts and sums the symmetry-expanded coefficients with |value| strictly
// above `threshold`. The core energy is excluded: a constant shift costs no
// quantum resources.
HamiltonianStats sparsify(const FciDump& dump, double threshold);

// Builds stats directly from known summary numbers (no integrals needed).
HamiltonianStats stats_from_summary(int n_orbitals, int n_electrons,
                                    std::uint64_t n_terms, double lambda);

// Storage volume of the ~N^4/8 two-electron integrals, in bytes, rounded
// up to the next whole byte.
std::uint64_t integral_volume(int n_orbitals, std::uint64_t bytes_per_value);

// Largest symmetry-expanded term count an N-orbital Hamiltonian can have
// (N^4 two-electron quadruples plus N^2 one-electron pairs).
std::uint64_t max_expanded_terms(int n_orbitals);

}  // namespace qrex
