// Copyright 2026 The spinwit Authors
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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "spinwit/measures.hpp"
#include "spinwit/scan.hpp"
#include "spinwit/thermal.hpp"
#include "test_support.hpp"

using namespace spinwit;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "spinwit_test_scan";
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string matrix_json(int n, const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
  }
  return nlohmann::json{{"n_qubits", n}, {"entries", entries}}.dump();
}

}  // namespace

TEST_SUITE("scan") {

TEST_CASE("range parsing") {
  const Range r = Range::parse("0:1:0.25");
  CHECK(r.values() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(Range::parse("0.05:4:0.05").values().size() == 80u);
  CHECK(Range::parse("0:5:0.1").values().size() == 51u);
  CHECK(Range::parse("0:5:0.1").values()[3] == 0.3);
  CHECK_THROWS_AS(Range::parse("0:1"), ArgumentError);
  CHECK_THROWS_AS(Range::parse("0:1:0"), ArgumentError);
  CHECK_THROWS_AS(Range::parse("1:0:0.1"), ArgumentError);
  CHECK_THROWS_AS(Range::parse("a:1:0.1"), ArgumentError);
}

TEST_CASE("format and model parsing") {
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_format("xml"), ArgumentError);
  CHECK(parse_model("xy") == ModelKind::xy);
  CHECK_THROWS_AS(parse_model("ising"), ArgumentError);
}

TEST_CASE("number formatting round trips") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double q = quantize(u(rng));
    CHECK(quantize(q) == q);
    CHECK(format_number(q) == format_number(std::stod(format_number(q))));
  }
  CHECK(format_number(0.1) == "0.1");
}

TEST_CASE("threshold table output") {
  const auto rows = threshold_table(ModelKind::heisenberg, {2, 4}, 1.0, 1);
  const std::string csv = format_thresholds(rows, OutputFormat::csv);
  CHECK(csv.rfind("N,T_C2,T_C3,T_R3\n", 0) == 0);
  CHECK(csv.find("\n2,7.2819") != std::string::npos);
  CHECK(csv.find(",-,-\n") != std::string::npos);
  const auto parsed = nlohmann::json::parse(format_thresholds(rows, OutputFormat::json));
  CHECK(parsed.is_array());
  CHECK(parsed.size() == 2u);
  CHECK(parsed[0]["T_C3"].is_null());
  CHECK(format_thresholds_table(rows).find("7.28") != std::string::npos);
  CHECK_THROWS_AS(threshold_table(ModelKind::heisenberg, {3}, 1.0), ArgumentError);
}

TEST_CASE("small grid scan matches direct evaluation") {
  ScanConfig config;
  config.sites = 4;
  config.b_range = Range::parse("0:1:0.5");
  config.t_range = Range::parse("0.5:1.5:0.5");
  config.workers = 1;
  const auto rows = grid_scan(config);
  REQUIRE(rows.size() == 9u);
  CHECK(rows[0].field == 0.0);
  CHECK(rows[1].temperature == 1.0);
  CHECK(rows[3].field == 0.5);
  for (const auto& row : rows) {
    const auto h = build_hamiltonian(ChainModel::heisenberg_field(4, 1.0, row.field));
    const auto rho = gibbs_state(h, row.temperature);
    CHECK(row.energy_per_site == doctest::Approx(rho.expectation(h) / 4.0).epsilon(1e-10));
    CHECK(row.sep_bound_per_site ==
          doctest::Approx(separable_bound_with_field(4, 1.0, row.field) / 4.0));
    CHECK(row.concurrence == doctest::Approx(concurrence(nn_reduced(rho, 1, 2))).epsilon(1e-8));
    CHECK(row.detected == (row.energy_per_site < row.sep_bound_per_site - 1e-12));
  }
}

TEST_CASE("grid CSV round trip") {
  ScanConfig config;
  config.sites = 4;
  config.b_range = Range::parse("0:2:1");
  config.t_range = Range::parse("0.1:0.3:0.1");
  const auto rows = grid_scan(config);
  const std::string csv = format_grid(rows, OutputFormat::csv);
  CHECK(parse_grid_csv(csv) == rows);
  CHECK(format_grid(parse_grid_csv(csv), OutputFormat::csv) == csv);
  const auto j = nlohmann::json::parse(format_grid(rows, OutputFormat::json));
  CHECK(j.size() == rows.size());
  CHECK_THROWS_AS(parse_grid_csv("a,b\n"), ArgumentError);
}

TEST_CASE("grid config validation") {
  ScanConfig config;
  config.sites = 12;
  CHECK_THROWS_AS(config.validate(), ArgumentError);
  config.sites = 5;
  CHECK_THROWS_AS(config.validate(), ArgumentError);
  config.sites = 4;
  config.t_range = Range{0.0, 1.0, 0.1};
  CHECK_THROWS_AS(config.validate(), ArgumentError);
}

TEST_CASE("atomic write") {
  const fs::path dir = scratch_dir();
  const fs::path target = dir / "out.txt";
  write_file_atomic(target, "first\n");
  write_file_atomic(target, "second\n");
  CHECK(read_text(target) == "second\n");
  for (const auto& entry : fs::directory_iterator(dir)) {
    CHECK(entry.path().extension() != ".partial");
  }
  const fs::path missing = dir / "no_such_dir" / "out.txt";
  CHECK_THROWS_AS(write_file_atomic(missing, "x"), IoError);
  CHECK_FALSE(fs::exists(missing));
}

TEST_CASE("bounds verification report") {
  OracleOptions options;
  options.restarts = 4;
  const auto report = bounds_verify(ChainModel::xy(4), options);
  REQUIRE(report.checks.size() == 2u);
  CHECK(report.passed());
  CHECK(report.tolerance == doctest::Approx(4e-4));
  CHECK(report.checks[0].bound == doctest::Approx(-4.0));
  CHECK(report.checks[1].bound == doctest::Approx(-4.5));
  const auto field = bounds_verify(ChainModel::heisenberg_field(4, 1.0, 2.0), options);
  REQUIRE(field.checks.size() == 1u);
  CHECK(field.checks[0].bound == doctest::Approx(-6.0));
  CHECK(format_bounds(report, OutputFormat::csv).rfind("# model=", 0) == 0);
  CHECK(nlohmann::json::parse(format_bounds(report, OutputFormat::json)).is_object());
}

TEST_CASE("classify named and thermal states") {
  const auto model = ChainModel::heisenberg(8);
  const auto chain = classify_state(make_state(StateLabel::singlet_chain, 8).state, model, "x");
  CHECK(chain.energy == doctest::Approx(-12.0));
  CHECK(chain.verdict.flags == static_cast<unsigned>(Certificate::pair_reduced_entangled));

  const auto mixed = load_state(StateSource::parse("maximally_mixed"), model);
  CHECK(classify_state(mixed, model, "m").verdict.flags == 0u);

  const auto ground = load_state(StateSource::parse("ground"), ChainModel::heisenberg(6));
  CHECK(classify_state(ground, ChainModel::heisenberg(6), "g").verdict.flags == 7u);

  const auto text = format_classify_text(chain);
  CHECK(text.find("pair_reduced_entangled") != std::string::npos);
  const auto j = nlohmann::json::parse(format_classify_json(chain));
  CHECK(j.is_object());

  CHECK_THROWS_AS(classify_state(mixed, ChainModel::heisenberg(6), "m"), ValidationError);
  CHECK_THROWS_AS(classify_state(mixed, ChainModel::heisenberg_field(8, 1.0, 1.0), "m"),
                  ArgumentError);
}

TEST_CASE("density matrix files") {
  const fs::path dir = scratch_dir();
  std::mt19937_64 rng(8);
  const ComplexMatrix rho = testing::random_density(4, rng);

  const fs::path good = dir / "good.json";
  write_text(good, matrix_json(2, rho));
  CHECK((load_density_matrix_json(good).matrix() - rho).norm() < 1e-12);

  const auto state = DensityState::from_matrix(rho);
  write_text(good, density_matrix_json(state));
  CHECK((load_density_matrix_json(good).matrix() - rho).norm() < 1e-12);

  auto expect_check = [&](const std::string& body, const std::string& check) {
    const fs::path p = dir / "bad.json";
    write_text(p, body);
    try {
      (void)load_density_matrix_json(p);
      FAIL("expected ValidationError for " << check);
    } catch (const ValidationError& e) {
      CHECK(e.check() == check);
    }
  };
  expect_check("{not json", "format");
  expect_check(R"({"n_qubits": 2})", "format");
  expect_check(matrix_json(3, rho), "dimension");

  ComplexMatrix nonherm = rho;
  nonherm(0, 1) += 0.1;
  expect_check(matrix_json(2, nonherm), "hermitian");
  expect_check(matrix_json(2, 2.0 * rho), "trace");
  ComplexMatrix neg = ComplexMatrix::Zero(4, 4);
  neg.diagonal() << 1.2, -0.2, 0.0, 0.0;
  expect_check(matrix_json(2, neg), "psd");

  // Small negative eigenvalues from rounding are accepted.
  ComplexMatrix near = ComplexMatrix::Zero(4, 4);
  near.diagonal() << 1.0 + 5e-9, -5e-9, 0.0, 0.0;
  write_text(good, matrix_json(2, near));
  CHECK_NOTHROW((void)load_density_matrix_json(good));

  CHECK_THROWS_AS(load_density_matrix_json(dir / "missing.json"), IoError);
}

}  // TEST_SUITE
