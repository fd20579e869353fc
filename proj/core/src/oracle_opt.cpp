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

#include "spinwit/oracle_opt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "spinwit/parallel.hpp"

namespace spinwit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kLineSamples = 12;
constexpr int kGoldenSteps = 36;

std::mt19937_64 restart_engine(std::uint64_t seed, std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(restart) >> 32)};
  return std::mt19937_64(seq);
}

void check_options(const OracleOptions& options) {
  if (options.restarts < 1) throw ArgumentError("restarts must be >= 1");
  if (options.max_sweeps < 1) throw ArgumentError("max_sweeps must be >= 1");
}

void check_model(const BondModel& model) {
  if (model.sites < 1) throw ArgumentError("bond model has no sites");
  for (const Bond& b : model.bonds) {
    if (b.a < 1 || b.a > model.sites || b.b < 1 || b.b > model.sites || b.a == b.b) {
      throw IndexError("bond (" + std::to_string(b.a) + "," + std::to_string(b.b) +
                       ") invalid for " + std::to_string(model.sites) + " sites");
    }
  }
}

// Minimizes a 2*pi-periodic function of one angle: coarse scan of the full
// period, then golden-section refinement around the best sample.
template <typename Fn>
std::pair<double, double> periodic_line_min(Fn&& f, double x0, double f0) {
  const double h = kTwoPi / kLineSamples;
  double best_x = x0;
  double best_f = f0;
  for (int k = 1; k < kLineSamples; ++k) {
    const double x = x0 + k * h;
    const double fx = f(x);
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
  }
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = best_x - h;
  double b = best_x + h;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < kGoldenSteps; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  if (fm < best_f) return {std::remainder(xm, kTwoPi), fm};
  return {std::remainder(best_x, kTwoPi), best_f};
}

// Cyclic coordinate descent. Problem provides size(), value(), get(j),
// trial(j, x) (energy with coordinate j set to x) and set(j, x).
template <typename Problem>
double coordinate_descent(Problem& p, const OracleOptions& options) {
  double current = p.value();
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    const double start = current;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const auto [x, fx] = periodic_line_min([&](double v) { return p.trial(j, v); }, p.get(j),
                                             current);
      if (fx < current) {
        p.set(j, x);
        current = p.value();
      }
    }
    if (start - current < options.improvement) break;
  }
  return current;
}

class ProductProblem {
 public:
  ProductProblem(const BondModel& model, std::vector<double> angles)
      : model_(model), angles_(std::move(angles)), spins_(static_cast<std::size_t>(model.sites)) {
    for (int k = 0; k < model_.sites; ++k) refresh(static_cast<std::size_t>(k));
  }

  std::size_t size() const { return angles_.size(); }
  double get(std::size_t j) const { return angles_[j]; }
  double value() const { return product_energy(model_, spins_); }

  double trial(std::size_t j, double x) {
    const std::size_t site = j / 2;
    const BlochVector saved = spins_[site];
    const double old = angles_[j];
    angles_[j] = x;
    refresh(site);
    const double e = value();
    angles_[j] = old;
    spins_[site] = saved;
    return e;
  }

  void set(std::size_t j, double x) {
    angles_[j] = x;
    refresh(j / 2);
  }

  const std::vector<BlochVector>& spins() const { return spins_; }

 private:
  void refresh(std::size_t site) {
    spins_[site] = BlochVector::from_angles(angles_[2 * site], angles_[2 * site + 1]);
  }

  const BondModel& model_;
  std::vector<double> angles_;
  std::vector<BlochVector> spins_;
};

using Vector4 = Eigen::Vector4cd;

struct BlockObservables {
  std::array<double, 3> first{};   // <X>, <Y>, <Z> on the first qubit
  std::array<double, 3> second{};  // same on the second qubit
  std::array<double, 3> corr{};    // <XX>, <YY>, <ZZ>
};

// Expectation values of a pure pair state c = (c00, c01, c10, c11).
BlockObservables observe(const Vector4& c) {
  const double p0 = std::norm(c(0));
  const double p1 = std::norm(c(1));
  const double p2 = std::norm(c(2));
  const double p3 = std::norm(c(3));
  const Complex flip_first = std::conj(c(0)) * c(2) + std::conj(c(1)) * c(3);
  const Complex flip_second = std::conj(c(0)) * c(1) + std::conj(c(2)) * c(3);
  const Complex c03 = std::conj(c(0)) * c(3);
  const Complex c12 = std::conj(c(1)) * c(2);
  BlockObservables o;
  o.first = {2.0 * flip_first.real(), 2.0 * flip_first.imag(), p0 + p1 - p2 - p3};
  o.second = {2.0 * flip_second.real(), 2.0 * flip_second.imag(), p0 - p1 + p2 - p3};
  o.corr = {2.0 * (c03 + c12).real(), 2.0 * (c12 - c03).real(), p0 - p1 - p2 + p3};
  return o;
}

// Hyperspherical amplitudes (a1, a2, a3) and relative phases (p1, p2, p3),
// given as cosines and sines of the six angles.
Vector4 state_from_trig(const double* cs, const double* sn) {
  const double r0 = cs[0];
  const double r1 = sn[0] * cs[1];
  const double r2 = sn[0] * sn[1] * cs[2];
  const double r3 = sn[0] * sn[1] * sn[2];
  Vector4 v;
  v << r0, Complex(r1 * cs[3], r1 * sn[3]), Complex(r2 * cs[4], r2 * sn[4]),
      Complex(r3 * cs[5], r3 * sn[5]);
  return v;
}

Vector4 state_from_angles(const double* t) {
  double cs[6];
  double sn[6];
  for (int k = 0; k < 6; ++k) {
    cs[k] = std::cos(t[k]);
    sn[k] = std::sin(t[k]);
  }
  return state_from_trig(cs, sn);
}

std::array<double, 6> angles_from_state(const Vector4& c) {
  const Vector4 u = c / c.norm();
  const double r0 = std::abs(u(0));
  const double r1 = std::abs(u(1));
  const double r2 = std::abs(u(2));
  const double r3 = std::abs(u(3));
  const double ph0 = std::arg(u(0));
  return {std::acos(std::clamp(r0, 0.0, 1.0)),
          std::atan2(std::hypot(r2, r3), r1),
          std::atan2(r3, r2),
          std::arg(u(1)) - ph0,
          std::arg(u(2)) - ph0,
          std::arg(u(3)) - ph0};
}

struct SiteSlot {
  std::size_t block;
  int position;  // 0 = first qubit of the block, 1 = second
};

class PairProblem {
 public:
  PairProblem(const BondModel& model, const PairBlockAssignment& assignment,
              std::vector<double> angles)
      : model_(model),
        angles_(std::move(angles)),
        cos_(angles_.size()),
        sin_(angles_.size()),
        slots_(static_cast<std::size_t>(model.sites)) {
    for (std::size_t j = 0; j < angles_.size(); ++j) {
      cos_[j] = std::cos(angles_[j]);
      sin_[j] = std::sin(angles_[j]);
    }
    for (std::size_t b = 0; b < assignment.blocks.size(); ++b) {
      slots_[static_cast<std::size_t>(assignment.blocks[b].first - 1)] = {b, 0};
      slots_[static_cast<std::size_t>(assignment.blocks[b].second - 1)] = {b, 1};
    }
    observables_.resize(assignment.blocks.size());
    for (std::size_t b = 0; b < observables_.size(); ++b) refresh(b);
  }

  std::size_t size() const { return angles_.size(); }
  double get(std::size_t j) const { return angles_[j]; }

  double value() const {
    double e = 0.0;
    for (const Bond& bond : model_.bonds) {
      const SiteSlot sa = slots_[static_cast<std::size_t>(bond.a - 1)];
      const SiteSlot sb = slots_[static_cast<std::size_t>(bond.b - 1)];
      const double j[3] = {bond.jx, bond.jy, bond.jz};
      if (sa.block == sb.block) {
        const BlockObservables& o = observables_[sa.block];
        for (int a = 0; a < 3; ++a) e += j[a] * o.corr[a];
      } else {
        const auto& ma = site_vector(sa);
        const auto& mb = site_vector(sb);
        for (int a = 0; a < 3; ++a) e += j[a] * ma[a] * mb[a];
      }
    }
    if (model_.field != 0.0) {
      for (const SiteSlot& s : slots_) e += model_.field * site_vector(s)[2];
    }
    return e;
  }

  double trial(std::size_t j, double x) {
    const std::size_t block = j / 6;
    const BlockObservables saved = observables_[block];
    const double old_cos = cos_[j];
    const double old_sin = sin_[j];
    cos_[j] = std::cos(x);
    sin_[j] = std::sin(x);
    refresh(block);
    const double e = value();
    cos_[j] = old_cos;
    sin_[j] = old_sin;
    observables_[block] = saved;
    return e;
  }

  void set(std::size_t j, double x) {
    angles_[j] = x;
    cos_[j] = std::cos(x);
    sin_[j] = std::sin(x);
    refresh(j / 6);
  }

  std::vector<ComplexVector> states() const {
    std::vector<ComplexVector> out;
    for (std::size_t b = 0; b < observables_.size(); ++b) {
      out.emplace_back(state_from_angles(&angles_[6 * b]));
    }
    return out;
  }

 private:
  const std::array<double, 3>& site_vector(const SiteSlot& s) const {
    const BlockObservables& o = observables_[s.block];
    return s.position == 0 ? o.first : o.second;
  }

  void refresh(std::size_t block) {
    observables_[block] = observe(state_from_trig(&cos_[6 * block], &sin_[6 * block]));
  }

  const BondModel& model_;
  std::vector<double> angles_;
  std::vector<double> cos_;
  std::vector<double> sin_;
  std::vector<SiteSlot> slots_;
  std::vector<BlockObservables> observables_;
};

std::vector<double> random_bloch_angles(int sites, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> angles;
  for (int k = 0; k < sites; ++k) {
    angles.push_back(std::acos(1.0 - 2.0 * unit(rng)));
    angles.push_back(kTwoPi * unit(rng));
  }
  return angles;
}

std::vector<double> random_block_angles(std::size_t blocks, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> angles;
  for (std::size_t b = 0; b < blocks; ++b) {
    Vector4 c;
    for (int k = 0; k < 4; ++k) c(k) = Complex(normal(rng), normal(rng));
    const auto t = angles_from_state(c);
    angles.insert(angles.end(), t.begin(), t.end());
  }
  return angles;
}

}  // namespace

BondModel bond_model(const ChainModel& model) {
  model.validate();
  BondModel out;
  out.sites = model.sites;
  out.field = model.field;
  const double jz = model.has_zz() ? model.coupling : 0.0;
  for (int k = 1; k <= model.sites; ++k) {
    out.bonds.push_back({k, k % model.sites + 1, model.coupling, model.coupling, jz});
  }
  return out;
}

BondModel pair_bond_model(ModelKind kind, double coupling) {
  if (kind == ModelKind::heisenberg_field) throw ArgumentError("pair model has no field variant");
  const double jz = kind == ModelKind::xy ? 0.0 : coupling;
  return {2, {{1, 2, coupling, coupling, jz}}, 0.0};
}

BlochVector BlochVector::from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

PairBlockAssignment PairBlockAssignment::make(int sites, int offset) {
  if (sites < 2 || sites % 2 != 0) throw ArgumentError("pair blocks need an even site count");
  if (offset != 0 && offset != 1) throw ArgumentError("block offset must be 0 or 1");
  PairBlockAssignment a;
  a.offset = offset;
  for (int k = 1 + offset; k <= sites; k += 2) a.blocks.emplace_back(k, k % sites + 1);
  return a;
}

double product_energy(const BondModel& model, std::span<const BlochVector> spins) {
  if (spins.size() != static_cast<std::size_t>(model.sites)) {
    throw ArgumentError("product_energy: one Bloch vector per site required");
  }
  double e = 0.0;
  for (const Bond& b : model.bonds) {
    const BlochVector& s = spins[static_cast<std::size_t>(b.a - 1)];
    const BlochVector& t = spins[static_cast<std::size_t>(b.b - 1)];
    e += b.jx * s.x * t.x + b.jy * s.y * t.y + b.jz * s.z * t.z;
  }
  if (model.field != 0.0) {
    for (const BlochVector& s : spins) e += model.field * s.z;
  }
  return e;
}

double pair_producible_energy(const BondModel& model, const PairBlockAssignment& assignment,
                              std::span<const ComplexVector> blocks) {
  check_model(model);
  if (blocks.size() != assignment.blocks.size()) {
    throw ArgumentError("pair_producible_energy: one state per block required");
  }
  std::vector<double> angles;
  for (const ComplexVector& v : blocks) {
    if (v.size() != 4) throw ArgumentError("block states must be 4-vectors");
    const auto t = angles_from_state(Vector4(v));
    angles.insert(angles.end(), t.begin(), t.end());
  }
  return PairProblem(model, assignment, std::move(angles)).value();
}

ProductOptimum min_product_energy(const BondModel& model, const OracleOptions& options) {
  check_model(model);
  check_options(options);
  std::vector<ProductOptimum> runs(static_cast<std::size_t>(options.restarts));
  parallel_for(
      runs.size(),
      [&](std::size_t i) {
        auto rng = restart_engine(options.seed, i);
        ProductProblem problem(model, random_bloch_angles(model.sites, rng));
        const double e = coordinate_descent(problem, options);
        runs[i] = {e, problem.spins()};
      },
      options.workers);
  const auto best = std::min_element(runs.begin(), runs.end(), [](const auto& l, const auto& r) {
    return l.energy < r.energy;
  });
  return *best;
}

ProductOptimum min_product_energy(const ChainModel& model, const OracleOptions& options) {
  return min_product_energy(bond_model(model), options);
}

PairOptimum min_pair_producible_energy(const BondModel& model, const OracleOptions& options) {
  check_model(model);
  check_options(options);
  const PairBlockAssignment assignments[2] = {PairBlockAssignment::make(model.sites, 0),
                                              PairBlockAssignment::make(model.sites, 1)};
  std::vector<PairOptimum> runs(static_cast<std::size_t>(options.restarts));
  parallel_for(
      runs.size(),
      [&](std::size_t i) {
        auto rng = restart_engine(options.seed, i);
        PairOptimum best;
        bool first = true;
        for (const PairBlockAssignment& assignment : assignments) {
          PairProblem problem(model, assignment,
                              random_block_angles(assignment.blocks.size(), rng));
          const double e = coordinate_descent(problem, options);
          if (first || e < best.energy) best = {e, assignment.offset, problem.states()};
          first = false;
        }
        runs[i] = std::move(best);
      },
      options.workers);
  const auto best = std::min_element(runs.begin(), runs.end(), [](const auto& l, const auto& r) {
    return l.energy < r.energy;
  });
  return *best;
}

PairOptimum min_pair_producible_energy(const ChainModel& model, const OracleOptions& options) {
  return min_pair_producible_energy(bond_model(model), options);
}

}  // namespace spinwit
