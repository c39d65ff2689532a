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

#include "qrex/crossover.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <tuple>

#include "qrex/errors.hpp"

namespace qrex {

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ValidationError("power-law fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0))
      throw ValidationError("power-law fit needs positive values");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) throw ValidationError("power-law fit needs at least two distinct abscissas");
  PowerLawFit fit;
  fit.exponent = (n * sxy - sx * sy) / denom;
  fit.prefactor = std::exp((sy - fit.exponent * sx) / n);
  return fit;
}

HamiltonianStats extrapolate_stats(const std::vector<HamiltonianStats>& anchors, int target_n) {
  if (anchors.size() < 2)
    throw ValidationError("stats extrapolation needs at least two anchors");
  if (target_n < 1) throw ValidationError("target orbital count must be at least 1");
  std::vector<double> ns, ds, lambdas;
  for (const auto& a : anchors) {
    if (a.n_orbitals < 1 || a.n_terms == 0 || !(a.lambda_one_norm > 0))
      throw ValidationError("stats extrapolation needs positive anchor values");
    ns.push_back(static_cast<double>(a.n_orbitals));
    ds.push_back(static_cast<double>(a.n_terms));
    lambdas.push_back(a.lambda_one_norm);
  }
  const PowerLawFit d_fit = fit_power_law(ns, ds);
  const PowerLawFit lambda_fit = fit_power_law(ns, lambdas);

  const double n = static_cast<double>(target_n);
  const double d_raw = d_fit.prefactor * std::pow(n, d_fit.exponent);
  const double d_capped = std::min(d_raw, static_cast<double>(max_expanded_terms(target_n)));
  const auto d = static_cast<std::uint64_t>(std::max(1.0, std::round(d_capped)));
  const double lambda = lambda_fit.prefactor * std::pow(n, lambda_fit.exponent);
  return stats_from_summary(target_n, target_n, d, lambda);
}

namespace {

SweepPoint evaluate_point(int n, const SweepOptions& options, const Calibration& cal) {
  SweepPoint point;
  point.n_orbitals = n;
  point.n_electrons = n;  // (N, N) CAS convention
  const auto provided = options.provided_stats.find(n);
  if (provided != options.provided_stats.end()) {
    point.stats = provided->second;
    point.extrapolated = false;
  } else {
    point.stats = extrapolate_stats(cal.sweep_anchors, n);
    point.extrapolated = true;
  }

  for (Method method : options.methods) {
    AlgorithmCost cost;
    try {
      cost = method == Method::trotterization
                 ? trotter_t_count(point.stats, cal.epsilon, cal.trotter)
                 : qubitization_cost(point.stats, cal.epsilon, cal.qubitization);
    } catch (const Error& e) {
      point.errors.push_back(std::string(to_string(method)) + ": " + e.what());
      continue;
    }
    for (double p : options.physical_error_rates) {
      for (Strategy strategy : options.strategies) {
        QuantumCurvePoint curve;
        curve.method = method;
        curve.strategy = strategy;
        curve.physical_error_rate = p;
        try {
          curve.estimate = estimate_calibrated(cost, p, strategy, cal);
          point.quantum.push_back(curve);
        } catch (const Error& e) {
          point.errors.push_back(std::string(to_string(method)) + "/" + to_string(strategy) +
                                 ": " + e.what());
        }
      }
    }
  }

  for (const auto& machine : cal.machines) {
    point.classical_seconds.emplace_back(
        machine.name, casci_runtime(n, n, machine, cal.casci_n_iterations,
                                    cal.casci_flop_coefficient));
  }
  if (options.include_vqe) {
    try {
      point.vqe_seconds = vqe_iteration_time(point.stats, cal.vqe, cal.epsilon);
    } catch (const Error& e) {
      point.errors.push_back(std::string("vqe: ") + e.what());
    }
  }
  return point;
}

}  // namespace

std::vector<SweepPoint> run_sweep(const SweepOptions& options, const Calibration& cal) {
  if (options.n_max < options.n_min) return {};
  std::vector<std::future<SweepPoint>> futures;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    futures.push_back(std::async(std::launch::async,
                                 [n, &options, &cal] { return evaluate_point(n, options, cal); }));
  }
  std::vector<SweepPoint> points;
  points.reserve(futures.size());
  for (auto& f : futures) points.push_back(f.get());
  return points;
}

CrossoverReport find_crossover(const std::vector<SweepPoint>& points) {
  CrossoverReport report;
  if (points.empty()) return report;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].n_orbitals <= points[i - 1].n_orbitals)
      throw ValidationError("sweep points must be sorted by increasing N");
  }

  // Collect the (method, strategy, p, machine) axes present anywhere in
  // the sweep; points that failed a combination just skip it.
  struct Key {
    Method method;
    Strategy strategy;
    double p;
    std::string machine;
    bool operator<(const Key& o) const {
      return std::tie(method, strategy, p, machine) <
             std::tie(o.method, o.strategy, o.p, o.machine);
    }
  };
  std::vector<Key> keys;
  std::set<Key> seen;
  for (const auto& point : points) {
    for (const auto& curve : point.quantum) {
      for (const auto& [machine, seconds] : point.classical_seconds) {
        (void)seconds;
        const Key key{curve.method, curve.strategy, curve.physical_error_rate, machine};
        if (seen.insert(key).second) keys.push_back(key);
      }
    }
  }

  for (const auto& key : keys) {
    CrossoverEntry entry;
    entry.method = key.method;
    entry.strategy = key.strategy;
    entry.physical_error_rate = key.p;
    entry.machine = key.machine;

    double previous_classical = -1.0;
    for (const auto& point : points) {
      double classical = -1.0;
      for (const auto& [machine, seconds] : point.classical_seconds) {
        if (machine == key.machine) classical = seconds;
      }
      if (classical < 0) continue;
      if (classical < previous_classical) entry.classical_non_monotone = true;
      previous_classical = classical;

      const QuantumCurvePoint* curve = nullptr;
      for (const auto& c : point.quantum) {
        if (c.method == key.method && c.strategy == key.strategy &&
            c.physical_error_rate == key.p)
          curve = &c;
      }
      if (curve == nullptr) continue;
      if (!entry.crossover_n && curve->estimate.wallclock_seconds < classical) {
        entry.crossover_n = point.n_orbitals;
        entry.quantum_seconds_at_crossover = curve->estimate.wallclock_seconds;
        entry.classical_seconds_at_crossover = classical;
      }
    }
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace qrex
