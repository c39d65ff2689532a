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

// Drives the installed binary end to end through a shell, checking exit
// codes, output files and diagnostics.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

std::string binary() {
  const char* bin = std::getenv("QREX_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "QREX_BIN must point at the qrex binary");
  return bin;
}

std::string data_path(const std::string& name) {
  return std::string(QREX_DATA_DIR) + "/fcidump/" + name;
}

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
  std::string stderr_text;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path out = fs::temp_directory_path() / ("qrex_cli_out_" + std::to_string(counter));
  const fs::path err = fs::temp_directory_path() / ("qrex_cli_err_" + std::to_string(counter));
  ++counter;
  const std::string command =
      binary() + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.stdout_text = slurp(out);
  result.stderr_text = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return result;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse: prints the stats record for a bundled file") {
  const auto result = run("parse " + data_path("toy_2orb.fcidump"));
  CHECK(result.exit_code == 0);
  CHECK(result.stdout_text.find("n_orbitals = 2") != std::string::npos);
  CHECK(result.stdout_text.find("n_terms = 5") != std::string::npos);
  CHECK(result.stdout_text.find("source = parsed") != std::string::npos);
}

TEST_CASE("parse: nonexistent path exits with code 2") {
  const auto result = run("parse /no/such/file.fcidump");
  CHECK(result.exit_code == 2);
  CHECK(result.stderr_text.find("cannot open") != std::string::npos);
}

TEST_CASE("parse: malformed file exits nonzero with a line diagnostic") {
  const fs::path dir = fresh_dir("qrex_bad_input");
  const fs::path bad = dir / "bad.fcidump";
  std::ofstream(bad) << "&FCI NORB=2,NELEC=2,&END\n 0.5 1 1 0 0\n oops 1 2 0 0\n";
  const auto result = run("parse " + bad.string());
  CHECK(result.exit_code == 2);
  CHECK(result.stderr_text.find("line 3") != std::string::npos);
}

TEST_CASE("parse: infinite threshold empties the term list") {
  const auto result = run("parse " + data_path("h2.fcidump") + " --threshold inf");
  CHECK(result.exit_code == 0);
  CHECK(result.stdout_text.find("n_terms = 0") != std::string::npos);
  CHECK(result.stdout_text.find("lambda = 0") != std::string::npos);
}

TEST_CASE("estimate --table2 writes the 8-row reference grid") {
  const fs::path dir = fresh_dir("qrex_table2");
  const auto result = run("estimate --table2 --output " + dir.string());
  CHECK(result.exit_code == 0);
  const std::string csv = slurp(dir / "estimate.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);  // header + 8 rows
  CHECK(csv.find("qubitization,time_optimized,1e-06,") != std::string::npos);
  CHECK(fs::exists(dir / "estimate.json"));
}

TEST_CASE("estimate: zero-term summary input yields an all-zero but valid report") {
  const fs::path dir = fresh_dir("qrex_zero");
  const fs::path cfg = dir / "config.json";
  std::ofstream(cfg) << R"({"input": {"summary": {"n_orbitals": 8, "n_electrons": 8,
                                                  "n_terms": 0, "lambda": 0.0}}})";
  const auto result =
      run("estimate --config " + cfg.string() + " --output " + dir.string());
  CHECK(result.exit_code == 0);
  const std::string csv = slurp(dir / "estimate.csv");
  CHECK(csv.find("trotterization") != std::string::npos);
  const std::string json = slurp(dir / "estimate.json");
  CHECK(json.find("\"non_clifford_count\": 0") != std::string::npos);
}

TEST_CASE("estimate: byte-identical reports across reruns") {
  const fs::path dir1 = fresh_dir("qrex_det1");
  const fs::path dir2 = fresh_dir("qrex_det2");
  CHECK(run("estimate --table2 --output " + dir1.string()).exit_code == 0);
  CHECK(run("estimate --table2 --output " + dir2.string()).exit_code == 0);
  CHECK(slurp(dir1 / "estimate.json") == slurp(dir2 / "estimate.json"));
  CHECK(slurp(dir1 / "estimate.csv") == slurp(dir2 / "estimate.csv"));
}

TEST_CASE("estimate: missing input is a usage error") {
  const auto result = run("estimate");
  CHECK(result.exit_code == 1);
  CHECK(result.stderr_text.find("no input") != std::string::npos);
}

TEST_CASE("estimate: fcidump input through a config file") {
  const fs::path dir = fresh_dir("qrex_est_fcidump");
  const fs::path cfg = dir / "config.json";
  std::ofstream(cfg) << R"({"input": {"fcidump": ")" << data_path("cas_06.fcidump")
                     << R"("}, "error_rates": [1e-3]})";
  const auto result =
      run("estimate --config " + cfg.string() + " --output " + dir.string());
  CHECK(result.exit_code == 0);
  const std::string csv = slurp(dir / "estimate.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 2 methods x 2 strategies
}

TEST_CASE("sweep: single-point range reports a crossover or none in range") {
  const fs::path dir = fresh_dir("qrex_sweep_single");
  const auto result = run("sweep --range 26:26 --output " + dir.string() + " --format csv");
  CHECK(result.exit_code == 0);
  const std::string crossover = slurp(dir / "crossover.csv");
  const bool has_verdict = crossover.find("none in range") != std::string::npos ||
                           crossover.find(",26,") != std::string::npos;
  CHECK(has_verdict);
  CHECK_FALSE(fs::exists(dir / "sweep.json"));  // csv-only run
}

TEST_CASE("sweep: plot data row count matches the range") {
  const fs::path dir = fresh_dir("qrex_sweep_plots");
  const auto result = run("sweep --range 10:14 --output " + dir.string());
  CHECK(result.exit_code == 0);
  const std::string plot = slurp(dir / "plot_trotterization_space_p1e-03.dat");
  CHECK(std::count(plot.begin(), plot.end(), '\n') == 6);  // comment + 5 points
  CHECK(fs::exists(dir / "sweep.json"));
  CHECK(fs::exists(dir / "plot_classical_hpc.dat"));
}

TEST_CASE("sweep: QREX_OUTPUT_DIR is honored when --output is absent") {
  const fs::path dir = fresh_dir("qrex_sweep_env");
  const std::string command = "QREX_OUTPUT_DIR=" + dir.string() + " " + binary() +
                              " sweep --range 12:13 --format csv > /dev/null 2>&1";
  REQUIRE(std::system(command.c_str()) == 0);
  CHECK(fs::exists(dir / "sweep.csv"));
}

TEST_CASE("calibrate writes a loadable calibration file") {
  const fs::path dir = fresh_dir("qrex_calibrate");
  const auto result = run("calibrate --output " + dir.string());
  CHECK(result.exit_code == 0);
  REQUIRE(fs::exists(dir / "calibration.cfg"));
  // and the file can be fed back in
  const auto reuse = run("estimate --table2 --calibration " +
                         (dir / "calibration.cfg").string() + " --output " + dir.string());
  CHECK(reuse.exit_code == 0);
}
