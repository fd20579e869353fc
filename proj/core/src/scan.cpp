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

#include "spinwit/scan.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spinwit/measures.hpp"
#include "spinwit/parallel.hpp"

namespace spinwit {
namespace {

using nlohmann::json;

constexpr const char* kGridHeader =
    "B,T,energy_per_site,sep_bound_per_site,detected,concurrence,eof";

double parse_double(std::string_view text, const char* what) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ArgumentError(std::string("cannot parse ") + what + " from '" + s + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t pos = text.find(sep, begin);
    parts.push_back(text.substr(begin, pos == std::string_view::npos ? pos : pos - begin));
    if (pos == std::string_view::npos) break;
    begin = pos + 1;
  }
  return parts;
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string("-");
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw ArgumentError("unknown format '" + std::string(text) + "' (expected csv or json)");
}

ModelKind parse_model(std::string_view text) {
  if (text == "xy") return ModelKind::xy;
  if (text == "heisenberg") return ModelKind::heisenberg;
  throw ArgumentError("unknown model '" + std::string(text) + "' (expected xy or heisenberg)");
}

Range Range::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ArgumentError("range must be start:stop:step, got '" +
                                             std::string(text) + "'");
  Range r{parse_double(parts[0], "range start"), parse_double(parts[1], "range stop"),
          parse_double(parts[2], "range step")};
  r.validate();
  return r;
}

void Range::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw ArgumentError("range values must be finite");
  }
  if (!(step > 0.0)) throw ArgumentError("range step must be positive");
  if (stop < start) throw ArgumentError("range is empty (stop < start)");
}

std::vector<double> Range::values() const {
  validate();
  const double span = (stop - start) / step;
  const long count = static_cast<long>(std::floor(span + 1e-9 * std::max(1.0, span))) + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) out.push_back(quantize(start + static_cast<double>(i) * step));
  return out;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

double quantize(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  if (path.empty()) throw IoError("output path is empty");
  fs::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write to '" + path.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move output into place at '" + path.string() + "': " + ec.message());
  }
}

// --- thresholds ------------------------------------------------------------

std::vector<ThresholdReport> threshold_table(ModelKind model, const std::vector<int>& sites,
                                             double coupling, unsigned workers) {
  if (model == ModelKind::heisenberg_field) {
    throw ArgumentError("thresholds are computed at zero field only");
  }
  for (int n : sites) {
    if (n < 2 || n % 2 != 0) {
      throw ArgumentError("chain length must be even and >= 2, got " + std::to_string(n));
    }
    if (n > kMaxChainSites) {
      throw ArgumentError("chain length " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxChainSites));
    }
  }
  std::vector<ThresholdReport> rows(sites.size());
  parallel_for(
      sites.size(),
      [&](std::size_t i) {
        rows[i] = threshold_report(ChainModel{model, sites[i], coupling, 0.0});
      },
      workers);
  return rows;
}

std::string format_thresholds(const std::vector<ThresholdReport>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"N", r.sites},
                     {"T_C2", optional_json(r.t_c2)},
                     {"T_C3", optional_json(r.t_c3)},
                     {"T_R3", optional_json(r.t_r3)}});
    }
    return out.dump(2) + "\n";
  }
  std::string s = "N,T_C2,T_C3,T_R3\n";
  for (const auto& r : rows) {
    s += std::to_string(r.sites) + "," + optional_cell(r.t_c2) + "," + optional_cell(r.t_c3) +
         "," + optional_cell(r.t_r3) + "\n";
  }
  return s;
}

std::string format_thresholds_table(const std::vector<ThresholdReport>& rows) {
  std::ostringstream os;
  auto cell = [](const std::optional<double>& v) {
    std::ostringstream c;
    if (v) {
      c << std::fixed << std::setprecision(2) << *v;
    } else {
      c << "-";
    }
    return c.str();
  };
  os << std::setw(4) << "N" << std::setw(9) << "T_C2" << std::setw(9) << "T_C3" << std::setw(9)
     << "T_R3" << "\n";
  for (const auto& r : rows) {
    os << std::setw(4) << r.sites << std::setw(9) << cell(r.t_c2) << std::setw(9) << cell(r.t_c3)
       << std::setw(9) << cell(r.t_r3) << "\n";
  }
  return os.str();
}

// --- grid scan -------------------------------------------------------------

void ScanConfig::validate() const {
  if (sites < 2 || sites % 2 != 0) throw ArgumentError("chain length must be even and >= 2");
  if (sites > kMaxScanSites) {
    throw ArgumentError("grid scan supports at most " + std::to_string(kMaxScanSites) + " sites");
  }
  if (!(coupling > 0.0)) throw ArgumentError("coupling J must be positive");
  b_range.validate();
  t_range.validate();
  if (b_range.start < 0.0) throw ArgumentError("field range must be non-negative");
  if (!(t_range.start > 0.0)) throw ArgumentError("temperature range must start above zero");
}

GridRow make_grid_row(double field, double temperature, double energy_per_site,
                      double sep_bound_per_site, double concurrence, double eof) {
  GridRow row;
  row.field = quantize(field);
  row.temperature = quantize(temperature);
  row.energy_per_site = quantize(energy_per_site);
  row.sep_bound_per_site = quantize(sep_bound_per_site);
  row.concurrence = quantize(concurrence);
  row.eof = quantize(eof);
  row.detected = row.energy_per_site < row.sep_bound_per_site - kTolerances.detection_margin;
  return row;
}

std::vector<GridRow> grid_scan(const ScanConfig& config) {
  config.validate();
  const std::vector<double> fields = config.b_range.values();
  const std::vector<double> temps = config.t_range.values();
  std::vector<std::vector<GridRow>> per_field(fields.size());
  parallel_for(
      fields.size(),
      [&](std::size_t i) {
        const double b = fields[i];
        const ChainModel model = ChainModel::heisenberg_field(config.sites, config.coupling, b);
        const ThermalEnsemble ensemble(build_hamiltonian(model));
        const int pair[] = {1, 2};
        const ReducedBasis basis = ensemble.reduced_basis(pair);
        const double n = static_cast<double>(config.sites);
        const double sep = separable_bound_with_field(config.sites, config.coupling, b) / n;
        auto& rows = per_field[i];
        rows.reserve(temps.size());
        for (double t : temps) {
          const DensityState rho2 = ensemble.thermal_marginal(basis, t);
          const double c = concurrence(rho2);
          rows.push_back(make_grid_row(b, t, ensemble.energy(t) / n, sep, c,
                                       eof_from_concurrence(c)));
        }
      },
      config.workers);
  std::vector<GridRow> rows;
  rows.reserve(fields.size() * temps.size());
  for (auto& block : per_field) rows.insert(rows.end(), block.begin(), block.end());
  return rows;
}

std::string format_grid(const std::vector<GridRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"B", r.field},
                     {"T", r.temperature},
                     {"energy_per_site", r.energy_per_site},
                     {"sep_bound_per_site", r.sep_bound_per_site},
                     {"detected", r.detected},
                     {"concurrence", r.concurrence},
                     {"eof", r.eof}});
    }
    return out.dump(2) + "\n";
  }
  std::string s = std::string(kGridHeader) + "\n";
  for (const auto& r : rows) {
    s += format_number(r.field) + "," + format_number(r.temperature) + "," +
         format_number(r.energy_per_site) + "," + format_number(r.sep_bound_per_site) + "," +
         (r.detected ? "1" : "0") + "," + format_number(r.concurrence) + "," +
         format_number(r.eof) + "\n";
  }
  return s;
}

std::vector<GridRow> parse_grid_csv(std::string_view text) {
  std::vector<GridRow> rows;
  bool header = true;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty()) continue;
    if (header) {
      if (line != kGridHeader) throw ArgumentError("unexpected grid CSV header");
      header = false;
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != 7) throw ArgumentError("grid CSV row needs 7 columns");
    if (cells[4] != "0" && cells[4] != "1") throw ArgumentError("detected column must be 0 or 1");
    GridRow r;
    r.field = parse_double(cells[0], "B");
    r.temperature = parse_double(cells[1], "T");
    r.energy_per_site = parse_double(cells[2], "energy_per_site");
    r.sep_bound_per_site = parse_double(cells[3], "sep_bound_per_site");
    r.detected = cells[4] == "1";
    r.concurrence = parse_double(cells[5], "concurrence");
    r.eof = parse_double(cells[6], "eof");
    rows.push_back(r);
  }
  if (header) throw ArgumentError("grid CSV is empty");
  return rows;
}

// --- bounds verification ---------------------------------------------------

bool BoundsReport::passed() const {
  for (const auto& c : checks) {
    if (!(std::abs(c.deviation) <= tolerance)) return false;
  }
  return true;
}

BoundsReport bounds_verify(const ChainModel& model, const OracleOptions& options) {
  model.validate();
  BoundsReport report;
  report.model = model.kind;
  report.sites = model.sites;
  report.coupling = model.coupling;
  report.field = model.field;
  report.restarts = options.restarts;
  report.seed = options.seed;
  report.tolerance = 1e-4 * model.sites;
  const BondModel bonds = bond_model(model);

  const ProductOptimum product = min_product_energy(bonds, options);
  const double sep = model.kind == ModelKind::heisenberg_field
                         ? separable_bound_with_field(model.sites, model.coupling, model.field)
                         : bound(model.kind, EntanglementClass::separable, model.sites,
                                 model.coupling);
  report.checks.push_back({"product_vs_separable", product.energy, sep, product.energy - sep});

  if (model.kind != ModelKind::heisenberg_field) {
    const PairOptimum pair = min_pair_producible_energy(bonds, options);
    const double two = bound(model.kind, EntanglementClass::two_producible, model.sites,
                             model.coupling);
    report.checks.push_back({"pair_vs_two_producible", pair.energy, two, pair.energy - two});
  }
  return report;
}

std::string format_bounds(const BoundsReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"check", c.name},
                        {"oracle", c.oracle},
                        {"bound", c.bound},
                        {"deviation", c.deviation}});
    }
    json out = {{"model", std::string(to_string(report.model))},
                {"N", report.sites},
                {"J", report.coupling},
                {"B", report.field},
                {"restarts", report.restarts},
                {"seed", report.seed},
                {"tolerance", report.tolerance},
                {"checks", checks},
                {"passed", report.passed()}};
    return out.dump(2) + "\n";
  }
  std::string s = "# model=" + std::string(to_string(report.model)) +
                  " N=" + std::to_string(report.sites) + " J=" + format_number(report.coupling) +
                  " B=" + format_number(report.field) +
                  " restarts=" + std::to_string(report.restarts) +
                  " seed=" + std::to_string(report.seed) +
                  " tolerance=" + format_number(report.tolerance) + "\n";
  s += "check,oracle,bound,deviation,within_tolerance\n";
  for (const auto& c : report.checks) {
    s += c.name + "," + format_number(c.oracle) + "," + format_number(c.bound) + "," +
         format_number(c.deviation) + "," +
         (std::abs(c.deviation) <= report.tolerance ? "1" : "0") + "\n";
  }
  return s;
}

// --- classify --------------------------------------------------------------

StateSource StateSource::parse(std::string_view text) {
  StateSource s;
  if (text == "ground") {
    s.kind = Kind::ground;
  } else if (text == "thermal") {
    s.kind = Kind::thermal;
  } else if (text == "maximally_mixed") {
    s.kind = Kind::maximally_mixed;
  } else {
    s.kind = Kind::named;
    s.label = parse_state_label(text);
  }
  return s;
}

std::string StateSource::describe() const {
  switch (kind) {
    case Kind::named:
      return std::string(to_string(label));
    case Kind::ground:
      return "ground";
    case Kind::thermal:
      return "thermal(T=" + format_number(temperature) + ")";
    case Kind::maximally_mixed:
      return "maximally_mixed";
    case Kind::matrix_file:
      return "file:" + file.string();
  }
  return "unknown";
}

DensityState load_state(const StateSource& source, const ChainModel& model) {
  switch (source.kind) {
    case StateSource::Kind::named:
      return make_state(source.label, model.sites).state;
    case StateSource::Kind::ground:
      return ground_state(build_hamiltonian(model)).second;
    case StateSource::Kind::thermal:
      return gibbs_state(build_hamiltonian(model), source.temperature);
    case StateSource::Kind::maximally_mixed: {
      const long dim = 1L << model.sites;
      return DensityState::assume_valid(ComplexMatrix::Identity(dim, dim) /
                                        static_cast<double>(dim));
    }
    case StateSource::Kind::matrix_file:
      return load_density_matrix_json(source.file);
  }
  throw ArgumentError("unknown state source");
}

ClassifyResult classify_state(const DensityState& state, const ChainModel& model,
                              std::string source) {
  model.validate();
  if (model.kind == ModelKind::heisenberg_field) {
    throw ArgumentError("classify uses the zero-field witnesses; field must be 0");
  }
  if (state.qubits() != model.sites) {
    throw ValidationError("dimension", "state has " + std::to_string(state.qubits()) +
                                           " qubits but the model has " +
                                           std::to_string(model.sites) + " sites");
  }
  ClassifyResult r{model, std::move(source), 0.0, {}};
  r.energy = state.expectation(build_hamiltonian(model));
  r.verdict = classify(r.energy, model.kind, model.sites, model.coupling);
  return r;
}

std::string format_classify_text(const ClassifyResult& result) {
  std::ostringstream os;
  os << "model: " << to_string(result.model.kind) << "  N=" << result.model.sites
     << "  J=" << format_number(result.model.coupling) << "\n";
  os << "state: " << result.source << "\n";
  os << "energy: " << format_number(result.energy)
     << "  per site: " << format_number(result.verdict.energy_per_site) << "\n";
  for (std::size_t i = 0; i < kCertificates.size(); ++i) {
    const bool on = result.verdict.has(kCertificates[i]);
    os << "  " << std::left << std::setw(24) << to_string(kCertificates[i]) << std::right
       << " bound " << std::setw(16) << format_number(result.verdict.bounds_per_site[i])
       << "  margin " << std::setw(16) << format_number(result.verdict.margins[i]) << "  "
       << (on ? "CERTIFIED" : "-") << "\n";
  }
  return os.str();
}

std::string format_classify_json(const ClassifyResult& result) {
  json flags = json::array();
  json certs = json::array();
  for (std::size_t i = 0; i < kCertificates.size(); ++i) {
    const bool on = result.verdict.has(kCertificates[i]);
    if (on) flags.push_back(std::string(to_string(kCertificates[i])));
    certs.push_back({{"certificate", std::string(to_string(kCertificates[i]))},
                     {"bound_per_site", result.verdict.bounds_per_site[i]},
                     {"margin", result.verdict.margins[i]},
                     {"certified", on}});
  }
  json out = {{"model", std::string(to_string(result.model.kind))},
              {"N", result.model.sites},
              {"J", result.model.coupling},
              {"state", result.source},
              {"energy", result.energy},
              {"energy_per_site", result.verdict.energy_per_site},
              {"flags", flags},
              {"certificates", certs}};
  return out.dump(2) + "\n";
}

DensityState load_density_matrix_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file '" + path.string() + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ValidationError("format", std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n_qubits") || !doc.contains("entries")) {
    throw ValidationError("format", "matrix file needs fields n_qubits and entries");
  }
  const auto& nq = doc["n_qubits"];
  if (!nq.is_number_integer() || nq.get<int>() < 1 || nq.get<int>() > kMaxChainSites) {
    throw ValidationError("dimension", "n_qubits must be an integer in 1.." +
                                           std::to_string(kMaxChainSites));
  }
  const int n = nq.get<int>();
  const long dim = 1L << n;
  const auto& entries = doc["entries"];
  if (!entries.is_array() || static_cast<long>(entries.size()) != dim * dim) {
    throw ValidationError("dimension", "entries must hold 4^n_qubits = " +
                                           std::to_string(dim * dim) + " [re, im] pairs");
  }
  ComplexMatrix m(dim, dim);
  for (long k = 0; k < dim * dim; ++k) {
    const auto& e = entries[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ValidationError("format", "entry " + std::to_string(k) + " is not a [re, im] pair");
    }
    m(k / dim, k % dim) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  StateChecks checks;
  checks.hermitian = kTolerances.hermitian_input;
  checks.trace = kTolerances.psd_file;
  checks.psd = kTolerances.psd_file;
  return DensityState::from_matrix(std::move(m), checks);
}

std::string density_matrix_json(const DensityState& state) {
  json entries = json::array();
  const ComplexMatrix& m = state.matrix();
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
  }
  json out = {{"n_qubits", state.qubits()}, {"entries", entries}};
  return out.dump() + "\n";
}

}  // namespace spinwit
