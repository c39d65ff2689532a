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

#include "qrex/qubitization.hpp"

#include <cmath>

#include "qrex/errors.hpp"

namespace qrex {

namespace {

constexpr std::uint64_t kAutoKMax = 1ull << 20;
constexpr double kPi = 3.14159265358979323846;

void validate(const QubitizationCostModel& model) {
  if (model.coeff_bits_m < 1) throw ValidationError("coeff_bits_m must be at least 1");
  if (model.per_iter_linear_c < 0)
    throw ValidationError("per_iter_linear_c must be nonnegative");
}

std::uint64_t lookup_cost(std::uint64_t d, std::uint64_t k, std::uint64_t m) {
  return (d + k - 1) / k + m * (k - 1);
}

}  // namespace

std::uint64_t qpe_iterations(double lambda, double epsilon) {
  if (lambda < 0 || std::isnan(lambda)) throw ValidationError("lambda must be nonnegative");
  if (!(epsilon > 0)) throw ValidationError("epsilon must be positive");
  if (lambda == 0) return 0;
  const double iters = std::ceil(kPi * lambda / (2.0 * epsilon));
  if (iters > 9.0e18) throw ValidationError("iteration count out of range");
  return static_cast<std::uint64_t>(iters);
}

std::uint64_t qrom_k_chosen(std::uint64_t d, const QubitizationCostModel& model) {
  validate(model);
  if (model.qrom_k != 0) return model.qrom_k;
  const auto m = static_cast<std::uint64_t>(model.coeff_bits_m);
  std::uint64_t best_k = 1;
  std::uint64_t best = lookup_cost(std::max<std::uint64_t>(d, 1), 1, m);
  for (std::uint64_t k = 2; k <= kAutoKMax; k *= 2) {
    const std::uint64_t cost = lookup_cost(std::max<std::uint64_t>(d, 1), k, m);
    if (cost < best) {
      best = cost;
      best_k = k;
    }
  }
  return d == 0 ? 1 : best_k;
}

std::uint64_t toffoli_per_iteration(std::uint64_t d, int n_orbitals,
                                    const QubitizationCostModel& model) {
  validate(model);
  if (n_orbitals < 0) throw ValidationError("n_orbitals must be nonnegative");
  const std::uint64_t k = qrom_k_chosen(d, model);
  const auto m = static_cast<std::uint64_t>(model.coeff_bits_m);
  const std::uint64_t lookup = d == 0 ? m * (k - 1) : lookup_cost(d, k, m);
  const auto linear =
      static_cast<std::uint64_t>(std::ceil(model.per_iter_linear_c * n_orbitals));
  return lookup + linear + model.per_iter_const;
}

AlgorithmCost qubitization_cost(const HamiltonianStats& stats, double epsilon,
                                const QubitizationCostModel& model) {
  if (!(epsilon > 0)) throw ValidationError("epsilon must be positive");
  validate(model);

  AlgorithmCost cost;
  cost.method = Method::qubitization;

  const std::uint64_t k = qrom_k_chosen(stats.n_terms, model);
  const auto m = static_cast<std::uint64_t>(model.coeff_bits_m);
  const auto index_bits = static_cast<std::uint64_t>(
      std::ceil(std::log2(static_cast<double>(std::max<std::uint64_t>(stats.n_terms, 2)))));
  cost.logical_qubits = 2 * static_cast<std::uint64_t>(stats.n_orbitals) + index_bits + m +
                        m * k + model.ancilla_const;

  if (stats.n_terms == 0) return cost;

  const std::uint64_t iterations = qpe_iterations(stats.lambda_one_norm, epsilon);
  const std::uint64_t per_iter = toffoli_per_iteration(stats.n_terms, stats.n_orbitals, model);
  const unsigned __int128 total = static_cast<unsigned __int128>(iterations) * per_iter;
  if (total > static_cast<unsigned __int128>(4.0e18))
    throw ValidationError("Toffoli count overflows the cost model");
  cost.toffoli_count = static_cast<std::uint64_t>(total);
  cost.logical_depth = cost.toffoli_count;
  return cost;
}

}  // namespace qrex
