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

// The work behind the `spinwit` subcommands, kept out of the executable so
// that tests drive it directly. All text output is deterministic: numbers are
// printed with 12 significant digits, rows in a fixed order.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spinwit/oracle_opt.hpp"
#include "spinwit/witness.hpp"

namespace spinwit {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

OutputFormat parse_format(std::string_view text);
ModelKind parse_model(std::string_view text);

/// Inclusive arithmetic range start:stop:step.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  static Range parse(std::string_view text);
  void validate() const;
  /// start + i*step for i = 0.. while <= stop (1e-9 relative slack), each
  /// rounded to 12 significant digits.
  std::vector<double> values() const;
};

/// "%.12g" formatting and the value it parses back to.
std::string format_number(double x);
double quantize(double x);

/// Writes `content` to a sibling temporary and renames it over `path`; on
/// failure nothing is left at `path` or beside it. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// --- thresholds ------------------------------------------------------------

std::vector<ThresholdReport> threshold_table(ModelKind model, const std::vector<int>& sites,
                                             double coupling, unsigned workers = 0);
std::string format_thresholds(const std::vector<ThresholdReport>& rows, OutputFormat format);
/// Fixed-width table with two decimals, "-" for undefined entries.
std::string format_thresholds_table(const std::vector<ThresholdReport>& rows);

// --- grid scan -------------------------------------------------------------

struct ScanConfig {
  int sites = 10;
  double coupling = 1.0;
  Range b_range{0.0, 5.0, 0.1};
  Range t_range{0.05, 4.0, 0.05};
  unsigned workers = 0;

  void validate() const;
};

/// One (B, T) point of the Heisenberg-chain scan. Values are stored already
/// quantized to their printed precision, so a written file parses back to
/// identical rows and `detected` can be recomputed from the printed columns.
struct GridRow {
  double field = 0.0;
  double temperature = 0.0;
  double energy_per_site = 0.0;
  double sep_bound_per_site = 0.0;
  bool detected = false;
  double concurrence = 0.0;
  double eof = 0.0;

  bool operator==(const GridRow&) const = default;
};

GridRow make_grid_row(double field, double temperature, double energy_per_site,
                      double sep_bound_per_site, double concurrence, double eof);

/// Rows ordered by B (outer) then T (inner). The pair marginal is taken on
/// sites (1, 2). Largest supported chain is 10 sites.
std::vector<GridRow> grid_scan(const ScanConfig& config);

inline constexpr int kMaxScanSites = 10;

std::string format_grid(const std::vector<GridRow>& rows, OutputFormat format);
std::vector<GridRow> parse_grid_csv(std::string_view text);

// --- bounds verification ---------------------------------------------------

struct BoundCheck {
  std::string name;
  double oracle = 0.0;
  double bound = 0.0;
  double deviation = 0.0;  // oracle - bound
};

struct BoundsReport {
  ModelKind model = ModelKind::heisenberg;
  int sites = 0;
  double coupling = 1.0;
  double field = 0.0;
  int restarts = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;  // 1e-4 * N
  std::vector<BoundCheck> checks;

  bool passed() const;
};

/// Oracle minima beside the closed-form bounds: product states against the
/// separable bound (field-dependent when B > 0), pair-producible states
/// against the two-producible bound (zero field only).
BoundsReport bounds_verify(const ChainModel& model, const OracleOptions& options);
std::string format_bounds(const BoundsReport& report, OutputFormat format);

// --- classify --------------------------------------------------------------

/// Where the classified state comes from.
struct StateSource {
  enum class Kind { named, ground, thermal, maximally_mixed, matrix_file };
  Kind kind = Kind::named;
  StateLabel label = StateLabel::singlet_chain;
  double temperature = 0.0;
  std::filesystem::path file;

  /// "singlet_chain", "ground", "thermal", "maximally_mixed", ...
  static StateSource parse(std::string_view text);
  std::string describe() const;
};

struct ClassifyResult {
  ChainModel model;
  std::string source;
  double energy = 0.0;
  Verdict verdict;
};

DensityState load_state(const StateSource& source, const ChainModel& model);
ClassifyResult classify_state(const DensityState& state, const ChainModel& model,
                              std::string source);
std::string format_classify_text(const ClassifyResult& result);
std::string format_classify_json(const ClassifyResult& result);

/// {"n_qubits": n, "entries": [[re, im], ...]} with entries row-major.
/// Validation: Hermitian, unit trace, no eigenvalue below -1e-8.
DensityState load_density_matrix_json(const std::filesystem::path& path);
std::string density_matrix_json(const DensityState& state);

}  // namespace spinwit
