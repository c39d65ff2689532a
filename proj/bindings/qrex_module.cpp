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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qrex/calibration.hpp"
#include "qrex/config.hpp"
#include "qrex/crossover.hpp"
#include "qrex/errors.hpp"
#include "qrex/report.hpp"

namespace py = pybind11;
using namespace qrex;

PYBIND11_MODULE(_core, m) {
  m.doc() = "fault-tolerant quantum resource estimation for active-space chemistry";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "FcidumpParseError", PyExc_ValueError);

  py::enum_<Method>(m, "Method")
      .value("trotterization", Method::trotterization)
      .value("qubitization", Method::qubitization);
  py::enum_<Strategy>(m, "Strategy")
      .value("space_optimized", Strategy::space_optimized)
      .value("time_optimized", Strategy::time_optimized);
  py::enum_<Ansatz>(m, "Ansatz")
      .value("linear_depth", Ansatz::linear_depth)
      .value("k_upccgsd", Ansatz::k_upccgsd)
      .value("puccd", Ansatz::puccd);
  py::enum_<HamiltonianStats::Source>(m, "StatsSource")
      .value("parsed", HamiltonianStats::Source::parsed)
      .value("summary", HamiltonianStats::Source::summary);

  py::class_<IntegralRecord>(m, "IntegralRecord")
      .def_readonly("i", &IntegralRecord::i)
      .def_readonly("j", &IntegralRecord::j)
      .def_readonly("k", &IntegralRecord::k)
      .def_readonly("l", &IntegralRecord::l)
      .def_readonly("value", &IntegralRecord::value)
      .def("one_electron", &IntegralRecord::one_electron);

  py::class_<FciDump>(m, "FciDump")
      .def_readonly("n_orbitals", &FciDump::n_orbitals)
      .def_readonly("n_electrons", &FciDump::n_electrons)
      .def_readonly("ms2", &FciDump::ms2)
      .def_readonly("orbital_symmetries", &FciDump::orbital_symmetries)
      .def_readonly("core_energy", &FciDump::core_energy)
      .def_readonly("has_core_energy", &FciDump::has_core_energy)
      .def_readonly("integrals", &FciDump::integrals)
      .def("__eq__", [](const FciDump& a, const FciDump& b) { return a == b; });

  py::class_<HamiltonianStats>(m, "HamiltonianStats")
      .def_readonly("n_orbitals", &HamiltonianStats::n_orbitals)
      .def_readonly("n_electrons", &HamiltonianStats::n_electrons)
      .def_readonly("n_terms", &HamiltonianStats::n_terms)
      .def_readonly("lambda_one_norm", &HamiltonianStats::lambda_one_norm)
      .def_readonly("truncation_threshold", &HamiltonianStats::truncation_threshold)
      .def_readonly("source", &HamiltonianStats::source);

  m.def("parse_fcidump", &parse_fcidump_string, py::arg("text"));
  m.def("parse_fcidump_file", &parse_fcidump_file, py::arg("path"));
  m.def("serialize_fcidump", &serialize_fcidump, py::arg("dump"));
  m.def("sparsify", &sparsify, py::arg("dump"), py::arg("threshold"));
  m.def("stats_from_summary", &stats_from_summary, py::arg("n_orbitals"),
        py::arg("n_electrons"), py::arg("n_terms"), py::arg("lambda_one_norm"));
  m.def("integral_volume", &integral_volume, py::arg("n_orbitals"),
        py::arg("bytes_per_value"));
  m.def("max_expanded_terms", &max_expanded_terms, py::arg("n_orbitals"));

  py::class_<TrotterCostModel>(m, "TrotterCostModel")
      .def(py::init<>())
      .def_readwrite("trotter_r0", &TrotterCostModel::trotter_r0)
      .def_readwrite("trotter_alpha", &TrotterCostModel::trotter_alpha)
      .def_readwrite("trotter_shift", &TrotterCostModel::trotter_shift)
      .def_readwrite("synthesis_a", &TrotterCostModel::synthesis_a)
      .def_readwrite("synthesis_b", &TrotterCostModel::synthesis_b)
      .def_readwrite("pe_constant", &TrotterCostModel::pe_constant);

  py::class_<QubitizationCostModel>(m, "QubitizationCostModel")
      .def(py::init<>())
      .def_readwrite("coeff_bits_m", &QubitizationCostModel::coeff_bits_m)
      .def_readwrite("qrom_k", &QubitizationCostModel::qrom_k)
      .def_readwrite("per_iter_linear_c", &QubitizationCostModel::per_iter_linear_c)
      .def_readwrite("per_iter_const", &QubitizationCostModel::per_iter_const)
      .def_readwrite("ancilla_const", &QubitizationCostModel::ancilla_const);

  py::class_<AlgorithmCost>(m, "AlgorithmCost")
      .def_readonly("method", &AlgorithmCost::method)
      .def_readonly("logical_qubits", &AlgorithmCost::logical_qubits)
      .def_readonly("t_count", &AlgorithmCost::t_count)
      .def_readonly("toffoli_count", &AlgorithmCost::toffoli_count)
      .def_readonly("logical_depth", &AlgorithmCost::logical_depth)
      .def("non_clifford_count", &AlgorithmCost::non_clifford_count);

  m.def("logical_qubits_trotter", &logical_qubits_trotter, py::arg("n_orbitals"));
  m.def("trotter_number", &trotter_number, py::arg("n_orbitals"), py::arg("model"));
  m.def("trotter_t_count", &trotter_t_count, py::arg("stats"), py::arg("epsilon"),
        py::arg("model"));
  m.def("qpe_iterations", &qpe_iterations, py::arg("lambda_one_norm"), py::arg("epsilon"));
  m.def("toffoli_per_iteration", &toffoli_per_iteration, py::arg("d"), py::arg("n_orbitals"),
        py::arg("model"));
  m.def("qubitization_cost", &qubitization_cost, py::arg("stats"), py::arg("epsilon"),
        py::arg("model"));

  py::class_<HardwareProfile>(m, "HardwareProfile")
      .def(py::init<>())
      .def_readwrite("physical_error_rate", &HardwareProfile::physical_error_rate)
      .def_readwrite("cycle_time", &HardwareProfile::cycle_time)
      .def_readwrite("threshold", &HardwareProfile::threshold)
      .def_readwrite("logical_prefactor", &HardwareProfile::logical_prefactor);

  py::class_<FactoryModel>(m, "FactoryModel")
      .def(py::init<>())
      .def_readwrite("qubitseconds_per_gate", &FactoryModel::qubitseconds_per_gate)
      .def_readwrite("footprint", &FactoryModel::footprint)
      .def_readwrite("n_factories", &FactoryModel::n_factories)
      .def_readwrite("strategy", &FactoryModel::strategy)
      .def_readwrite("pipeline_factor", &FactoryModel::pipeline_factor)
      .def("total_qubits", &FactoryModel::total_qubits);
  m.def("default_t_factory", &default_t_factory);
  m.def("default_toffoli_factory", &default_toffoli_factory);

  py::class_<ResourceEstimate>(m, "ResourceEstimate")
      .def_readonly("method", &ResourceEstimate::method)
      .def_readonly("strategy", &ResourceEstimate::strategy)
      .def_readonly("physical_error_rate", &ResourceEstimate::physical_error_rate)
      .def_readonly("code_distance", &ResourceEstimate::code_distance)
      .def_readonly("physical_qubits_total", &ResourceEstimate::physical_qubits_total)
      .def_readonly("physical_qubits_data", &ResourceEstimate::physical_qubits_data)
      .def_readonly("physical_qubits_factories", &ResourceEstimate::physical_qubits_factories)
      .def_readonly("wallclock_seconds", &ResourceEstimate::wallclock_seconds)
      .def_readonly("factory_qubitseconds", &ResourceEstimate::factory_qubitseconds)
      .def_readonly("spacetime_qubitseconds", &ResourceEstimate::spacetime_qubitseconds)
      .def_readonly("logical_qubits", &ResourceEstimate::logical_qubits)
      .def_readonly("non_clifford_count", &ResourceEstimate::non_clifford_count);

  m.def("code_distance", &code_distance, py::arg("n_logical"), py::arg("n_logical_timesteps"),
        py::arg("profile"), py::arg("failure_budget"), py::arg("max_code_distance") = 99);
  m.def(
      "wallclock",
      [](const AlgorithmCost& cost, const FactoryModel& factory, int distance,
         const HardwareProfile& profile) { return wallclock(cost, factory, distance, profile); },
      py::arg("cost"), py::arg("factory"), py::arg("distance"), py::arg("profile"));

  py::class_<ClassicalMachine>(m, "ClassicalMachine")
      .def(py::init<std::string, double>(), py::arg("name"), py::arg("flops"))
      .def_readwrite("name", &ClassicalMachine::name)
      .def_readwrite("flops", &ClassicalMachine::flops);
  m.def("desktop_machine", &desktop_machine);
  m.def("hpc_machine", &hpc_machine);

  m.def(
      "determinant_count",
      [](int n_orbitals, int n_electrons) {
        const std::string digits = determinant_count(n_orbitals, n_electrons).str();
        return py::module_::import("builtins").attr("int")(digits);
      },
      py::arg("n_orbitals"), py::arg("n_electrons"));
  m.def("casci_runtime", &casci_runtime, py::arg("n_orbitals"), py::arg("n_electrons"),
        py::arg("machine"), py::arg("n_iterations") = 10.0, py::arg("flop_coefficient") = 1.0);

  py::class_<VqeConfig>(m, "VqeConfig")
      .def(py::init<>())
      .def_readwrite("ansatz", &VqeConfig::ansatz)
      .def_readwrite("two_qubit_gate_time", &VqeConfig::two_qubit_gate_time)
      .def_readwrite("measure_reset_time", &VqeConfig::measure_reset_time)
      .def_readwrite("parallel_factor", &VqeConfig::parallel_factor)
      .def_readwrite("shot_grouping_factor", &VqeConfig::shot_grouping_factor);
  m.def("vqe_iteration_time", &vqe_iteration_time, py::arg("stats"), py::arg("config"),
        py::arg("epsilon"));
  m.def("ansatz_depth", &ansatz_depth, py::arg("ansatz"), py::arg("n_orbitals"),
        py::arg("config"));

  py::class_<Calibration>(m, "Calibration")
      .def_readonly("epsilon", &Calibration::epsilon)
      .def_readonly("trotter", &Calibration::trotter)
      .def_readonly("qubitization", &Calibration::qubitization)
      .def_readonly("sweep_anchors", &Calibration::sweep_anchors)
      .def_readonly("machines", &Calibration::machines)
      .def_readonly("vqe", &Calibration::vqe)
      .def_readonly("sweep_min", &Calibration::sweep_min)
      .def_readonly("sweep_max", &Calibration::sweep_max)
      .def("profile", &Calibration::profile, py::arg("physical_error_rate"))
      .def("cr2_sparse_stats", &Calibration::cr2_sparse_stats)
      .def("cr2_full_stats", &Calibration::cr2_full_stats);
  m.def("default_calibration", &default_calibration);
  m.def("load_calibration_file", &load_calibration_file, py::arg("path"));
  m.def("write_calibration_file", &write_calibration_file, py::arg("calibration"),
        py::arg("path"));
  m.def("estimate_calibrated", &estimate_calibrated, py::arg("cost"),
        py::arg("physical_error_rate"), py::arg("strategy"), py::arg("calibration"));
  m.def("reference_estimates", &reference_estimates, py::arg("calibration"));

  m.def("extrapolate_stats", &extrapolate_stats, py::arg("anchors"), py::arg("target_n"));

  py::class_<QuantumCurvePoint>(m, "QuantumCurvePoint")
      .def_readonly("method", &QuantumCurvePoint::method)
      .def_readonly("strategy", &QuantumCurvePoint::strategy)
      .def_readonly("physical_error_rate", &QuantumCurvePoint::physical_error_rate)
      .def_readonly("estimate", &QuantumCurvePoint::estimate);

  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("n_orbitals", &SweepPoint::n_orbitals)
      .def_readonly("n_electrons", &SweepPoint::n_electrons)
      .def_readonly("stats", &SweepPoint::stats)
      .def_readonly("extrapolated", &SweepPoint::extrapolated)
      .def_readonly("quantum", &SweepPoint::quantum)
      .def_readonly("classical_seconds", &SweepPoint::classical_seconds)
      .def_readonly("vqe_seconds", &SweepPoint::vqe_seconds)
      .def_readonly("errors", &SweepPoint::errors);

  py::class_<SweepOptions>(m, "SweepOptions")
      .def(py::init<>())
      .def_readwrite("n_min", &SweepOptions::n_min)
      .def_readwrite("n_max", &SweepOptions::n_max)
      .def_readwrite("methods", &SweepOptions::methods)
      .def_readwrite("strategies", &SweepOptions::strategies)
      .def_readwrite("physical_error_rates", &SweepOptions::physical_error_rates)
      .def_readwrite("include_vqe", &SweepOptions::include_vqe);

  py::class_<CrossoverEntry>(m, "CrossoverEntry")
      .def_readonly("method", &CrossoverEntry::method)
      .def_readonly("strategy", &CrossoverEntry::strategy)
      .def_readonly("physical_error_rate", &CrossoverEntry::physical_error_rate)
      .def_readonly("machine", &CrossoverEntry::machine)
      .def_readonly("crossover_n", &CrossoverEntry::crossover_n)
      .def_readonly("quantum_seconds_at_crossover",
                    &CrossoverEntry::quantum_seconds_at_crossover)
      .def_readonly("classical_seconds_at_crossover",
                    &CrossoverEntry::classical_seconds_at_crossover)
      .def_readonly("classical_non_monotone", &CrossoverEntry::classical_non_monotone);

  py::class_<CrossoverReport>(m, "CrossoverReport")
      .def_readonly("entries", &CrossoverReport::entries);

  m.def("run_sweep", &run_sweep, py::arg("options"), py::arg("calibration"),
        py::call_guard<py::gil_scoped_release>());
  m.def("find_crossover", &find_crossover, py::arg("points"));

  m.def("format_duration", &format_duration, py::arg("seconds"));
  m.def("stats_to_kv", &stats_to_kv, py::arg("stats"));
  m.def("sweep_to_csv", &sweep_to_csv, py::arg("points"));
  m.def("estimates_to_csv", &estimates_to_csv, py::arg("estimates"));
}
