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

#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "qrex/baselines.hpp"
#include "qrex/calibration.hpp"
#include "qrex/crossover.hpp"
#include "qrex/errors.hpp"

using namespace qrex;

namespace {

// Exhaustive oracle: count occupation bitstrings with fixed particle
// numbers per spin channel.
std::uint64_t enumerate_determinants(int n_orbitals, int n_electrons) {
  const int n_alpha = (n_electrons + 1) / 2;
  const int n_beta = n_electrons / 2;
  const auto count_channel = [n_orbitals](int electrons) {
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n_orbitals); ++mask) {
      if (__builtin_popcount(mask) == electrons) ++count;
    }
    return count;
  };
  return count_channel(n_alpha) * count_channel(n_beta);
}

}  // namespace

TEST_CASE("determinant_count: reference CAS anchors") {
  // (22,22): ~5.0e11 determinants
  const BigInt d22 = determinant_count(22, 22);
  CHECK(d22 == BigInt(705432) * 705432);
  CHECK(std::abs(static_cast<double>(d22) - 5.0e11) / 5.0e11 < 0.01);
  // (24,24): ~7.3e12
  const BigInt d24 = determinant_count(24, 24);
  CHECK(d24 == BigInt(2704156) * 2704156);
  CHECK(std::abs(static_cast<double>(d24) - 7.3e12) / 7.3e12 < 0.01);
  CHECK(determinant_count(2, 2) == 4);
}

TEST_CASE("determinant_count: exhaustive enumeration up to N = 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int eta = 0; eta <= 2 * n; ++eta) {
      CHECK(determinant_count(n, eta) == BigInt(enumerate_determinants(n, eta)));
    }
  }
}

TEST_CASE("determinant_count: particle-hole symmetry and validation") {
  for (int n = 1; n <= 12; ++n) {
    for (int eta = 0; eta <= 2 * n; ++eta) {
      CHECK(determinant_count(n, eta) == determinant_count(n, 2 * n - eta));
    }
  }
  CHECK_THROWS_AS(determinant_count(4, 9), ValidationError);
  CHECK_THROWS_AS(determinant_count(0, 0), ValidationError);
  // odd electron counts split ceil/floor across the spin channels
  CHECK(determinant_count(3, 3) == BigInt(3) * 3);
  // no 64-bit overflow on large spaces
  CHECK(determinant_count(60, 60) > BigInt("10000000000000000000000000000000"));
}

TEST_CASE("casci_runtime") {
  SUBCASE("desktop-to-HPC speedup equals the FLOPS ratio for any CAS") {
    for (int n : {6, 14, 24}) {
      const double desktop = casci_runtime(n, n, desktop_machine());
      const double hpc = casci_runtime(n, n, hpc_machine());
      CHECK(desktop / hpc == doctest::Approx(1.25e17 / 1.2e12));
      CHECK(desktop / hpc == doctest::Approx(1.04e5).epsilon(0.01));
    }
  }
  SUBCASE("zero electrons leaves a single determinant per spin channel") {
    CHECK(determinant_count(8, 0) == 1);
    const double runtime = casci_runtime(8, 0, desktop_machine(), 10, 1.0);
    CHECK(runtime == doctest::Approx(10.0 * std::pow(8.0, 4) / 1.2e12));
  }
  SUBCASE("(24,24) on the desktop with default constants") {
    const double runtime = casci_runtime(24, 24, desktop_machine(), 10, 1.0);
    // direct arithmetic: 10 * 2704156^2 * 24^4 / 1.2e12
    CHECK(runtime == doctest::Approx(2.0217e7).epsilon(1e-3));
  }
  SUBCASE("exactly linear in 1/flops and n_iterations") {
    const ClassicalMachine slow{"slow", 1e12};
    const ClassicalMachine fast{"fast", 4e12};
    CHECK(casci_runtime(10, 10, slow, 10, 1.0) ==
          doctest::Approx(4.0 * casci_runtime(10, 10, fast, 10, 1.0)));
    CHECK(casci_runtime(10, 10, slow, 30, 1.0) ==
          doctest::Approx(3.0 * casci_runtime(10, 10, slow, 10, 1.0)));
  }
}

TEST_CASE("vqe_iteration_time") {
  const Calibration cal = default_calibration();
  SUBCASE("(26,26) linear-depth iteration lands in the hour band") {
    const double seconds =
        vqe_iteration_time(cal.cr2_sparse_stats(), cal.vqe, cal.epsilon);
    CHECK(seconds >= 0.1 * kSecondsPerHour);
    CHECK(seconds <= 10.0 * kSecondsPerHour);
  }
  SUBCASE("ABP-scale pUCCD iteration takes centuries") {
    HamiltonianStats abp = extrapolate_stats(cal.sweep_anchors, cal.abp_n_orbitals);
    abp.n_electrons = cal.abp_n_electrons;
    VqeConfig config = cal.vqe;
    config.ansatz = Ansatz::puccd;
    const double seconds = vqe_iteration_time(abp, config, cal.epsilon);
    CHECK(seconds >= 100.0 * kSecondsPerYear);
  }
  SUBCASE("zero lambda means zero shots and zero time") {
    CHECK(vqe_iteration_time(stats_from_summary(10, 10, 0, 0.0), cal.vqe, cal.epsilon) == 0.0);
  }
  SUBCASE("1/epsilon^2 shot scaling") {
    const auto stats = stats_from_summary(26, 26, 120000, 425.0);
    for (double eps : {1.6e-3, 4e-4, 1e-4}) {
      const double ratio = vqe_iteration_time(stats, cal.vqe, eps / 2) /
                           vqe_iteration_time(stats, cal.vqe, eps);
      CHECK(ratio >= 3.9);
      CHECK(ratio <= 4.1);
    }
  }
  SUBCASE("parallelism and grouping reduce the time") {
    const auto stats = stats_from_summary(26, 26, 120000, 425.0);
    VqeConfig par = cal.vqe;
    par.parallel_factor = 4.0;
    CHECK(vqe_iteration_time(stats, par, cal.epsilon) <
          vqe_iteration_time(stats, cal.vqe, cal.epsilon));
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(vqe_iteration_time(cal.cr2_sparse_stats(), cal.vqe, 0.0),
                    ValidationError);
    VqeConfig bad = cal.vqe;
    bad.parallel_factor = 0.5;
    CHECK_THROWS_AS(vqe_iteration_time(cal.cr2_sparse_stats(), bad, cal.epsilon),
                    ValidationError);
  }
}

TEST_CASE("ansatz_depth") {
  VqeConfig config;
  CHECK(ansatz_depth(Ansatz::linear_depth, 26, config) == 26.0);
  CHECK(ansatz_depth(Ansatz::puccd, 100, config) == doctest::Approx(100.0));
  CHECK(ansatz_depth(Ansatz::k_upccgsd, 100, config) == doctest::Approx(300.0));
}
