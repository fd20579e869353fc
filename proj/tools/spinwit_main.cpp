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

// spinwit: energy-based entanglement witnesses for periodic spin chains.
//
//   spinwit thresholds    --model heisenberg --n 2,4,6,8,10
//   spinwit grid-scan     --n 10 --b-range 0:5:0.1 --t-range 0.05:4:0.05 --out fig.csv
//   spinwit bounds-verify --model xy --n 8 --restarts 64 --seed 0
//   spinwit classify      --model heisenberg --n 8 --state singlet_chain
//
// Exit status: 0 success, 1 invalid input, 2 oracle deviation above tolerance.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinwit/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitDeviation = 2;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    spinwit::write_file_atomic(out_path, content);
  }
}

spinwit::ChainModel chain_for(const std::string& model, int n, double j, double b) {
  const spinwit::ModelKind kind = spinwit::parse_model(model);
  if (b != 0.0) {
    if (kind != spinwit::ModelKind::heisenberg) {
      throw spinwit::ArgumentError("a field is only supported for the heisenberg model");
    }
    return spinwit::ChainModel::heisenberg_field(n, j, b);
  }
  return kind == spinwit::ModelKind::xy ? spinwit::ChainModel::xy(n, j)
                                        : spinwit::ChainModel::heisenberg(n, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-based entanglement witnesses for XY and Heisenberg chains"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Random seed for every stochastic step")->capture_default_str();

  // thresholds
  auto* thresholds = app.add_subcommand("thresholds", "Threshold temperatures T_C2, T_C3, T_R3");
  std::string th_model = "heisenberg";
  std::vector<int> th_sizes{2, 4, 6, 8, 10};
  double th_j = 1.0;
  std::string th_out;
  std::string th_format = "csv";
  bool th_table = false;
  thresholds->add_option("--model", th_model, "xy or heisenberg")->capture_default_str();
  thresholds->add_option("--n", th_sizes, "Even chain lengths, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  thresholds->add_option("--j", th_j, "Coupling J")->capture_default_str();
  thresholds->add_option("--out", th_out, "Output file (default stdout)");
  thresholds->add_option("--format", th_format, "csv or json")->capture_default_str();
  thresholds->add_flag("--table", th_table, "Print a rounded human-readable table");

  // grid-scan
  auto* grid = app.add_subcommand("grid-scan", "Heisenberg chain B-T scan of witness and EoF");
  std::string gs_model = "heisenberg";
  int gs_n = 10;
  double gs_j = 1.0;
  std::string gs_b_range = "0:5:0.1";
  std::string gs_t_range = "0.05:4:0.05";
  std::string gs_out;
  std::string gs_format = "csv";
  grid->add_option("--model", gs_model, "Only heisenberg is supported")->capture_default_str();
  grid->add_option("--n", gs_n, "Even chain length (<= 10)")->capture_default_str();
  grid->add_option("--j", gs_j, "Coupling J")->capture_default_str();
  grid->add_option("--b-range", gs_b_range, "Field start:stop:step")->capture_default_str();
  grid->add_option("--t-range", gs_t_range, "Temperature start:stop:step")->capture_default_str();
  grid->add_option("--out", gs_out, "Output file (default stdout)");
  grid->add_option("--format", gs_format, "csv or json")->capture_default_str();

  // bounds-verify
  auto* verify = app.add_subcommand("bounds-verify", "Oracle minima against closed-form bounds");
  std::string bv_model = "heisenberg";
  int bv_n = 6;
  double bv_j = 1.0;
  double bv_b = 0.0;
  int bv_restarts = 64;
  int bv_sweeps = 20000;
  std::string bv_out;
  std::string bv_format = "csv";
  verify->add_option("--model", bv_model, "xy or heisenberg")->capture_default_str();
  verify->add_option("--n", bv_n, "Even chain length")->capture_default_str();
  verify->add_option("--j", bv_j, "Coupling J")->capture_default_str();
  verify->add_option("--b", bv_b, "Field B (heisenberg only)")->capture_default_str();
  verify->add_option("--restarts", bv_restarts, "Random restarts")->capture_default_str();
  verify->add_option("--max-sweeps", bv_sweeps, "Coordinate-descent sweep cap per restart")
      ->capture_default_str();
  verify->add_option("--out", bv_out, "Output file (default stdout)");
  verify->add_option("--format", bv_format, "csv or json")->capture_default_str();

  // classify
  auto* cls = app.add_subcommand("classify", "Entanglement certificates from a state's energy");
  std::string cl_model = "heisenberg";
  int cl_n = 8;
  double cl_j = 1.0;
  std::string cl_state = "singlet_chain";
  double cl_t = 1.0;
  std::string cl_matrix;
  std::string cl_out;
  std::string cl_format = "text";
  cls->add_option("--model", cl_model, "xy or heisenberg")->capture_default_str();
  cls->add_option("--n", cl_n, "Even chain length")->capture_default_str();
  cls->add_option("--j", cl_j, "Coupling J")->capture_default_str();
  cls->add_option("--state", cl_state,
                  "singlet, singlet_chain, shifted_mixture, polarized, ground, thermal, "
                  "maximally_mixed")
      ->capture_default_str();
  cls->add_option("--t", cl_t, "Temperature for --state thermal")->capture_default_str();
  cls->add_option("--matrix", cl_matrix, "JSON density-matrix file (overrides --state)");
  cls->add_option("--out", cl_out, "Write the JSON verdict to this file");
  cls->add_option("--format", cl_format, "text or json (stdout)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*thresholds) {
      const auto rows =
          spinwit::threshold_table(spinwit::parse_model(th_model), th_sizes, th_j);
      const std::string body = th_table ? spinwit::format_thresholds_table(rows)
                                        : spinwit::format_thresholds(
                                              rows, spinwit::parse_format(th_format));
      emit(body, th_out);
      return kExitOk;
    }
    if (*grid) {
      if (spinwit::parse_model(gs_model) != spinwit::ModelKind::heisenberg) {
        throw spinwit::ArgumentError("grid-scan supports the heisenberg model only");
      }
      spinwit::ScanConfig config;
      config.sites = gs_n;
      config.coupling = gs_j;
      config.b_range = spinwit::Range::parse(gs_b_range);
      config.t_range = spinwit::Range::parse(gs_t_range);
      const auto format = spinwit::parse_format(gs_format);
      emit(spinwit::format_grid(spinwit::grid_scan(config), format), gs_out);
      return kExitOk;
    }
    if (*verify) {
      spinwit::OracleOptions options;
      options.restarts = bv_restarts;
      options.seed = seed;
      options.max_sweeps = bv_sweeps;
      const auto format = spinwit::parse_format(bv_format);
      const auto report =
          spinwit::bounds_verify(chain_for(bv_model, bv_n, bv_j, bv_b), options);
      emit(spinwit::format_bounds(report, format), bv_out);
      return report.passed() ? kExitOk : kExitDeviation;
    }
    if (*cls) {
      if (cl_format != "text" && cl_format != "json") {
        throw spinwit::ArgumentError("classify --format must be text or json");
      }
      const spinwit::ChainModel model = chain_for(cl_model, cl_n, cl_j, 0.0);
      spinwit::StateSource source;
      if (!cl_matrix.empty()) {
        source.kind = spinwit::StateSource::Kind::matrix_file;
        source.file = cl_matrix;
      } else {
        source = spinwit::StateSource::parse(cl_state);
        source.temperature = cl_t;
      }
      const auto state = spinwit::load_state(source, model);
      const auto result = spinwit::classify_state(state, model, source.describe());
      std::cout << (cl_format == "json" ? spinwit::format_classify_json(result)
                                        : spinwit::format_classify_text(result));
      if (!cl_out.empty()) spinwit::write_file_atomic(cl_out, spinwit::format_classify_json(result));
      return kExitOk;
    }
  } catch (const spinwit::ValidationError& e) {
    std::cerr << "validation error (" << e.check() << "): " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
