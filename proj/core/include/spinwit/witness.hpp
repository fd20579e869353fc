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

// Energy witnesses for periodic XY and Heisenberg chains with an even number
// of sites.
//
//   class            XY              Heisenberg
//   separable        -1              -1
//   two_producible   -9/8            -3/2
//   gme3_reduced     -(1+sqrt2)/2    -(1+sqrt5)/2
//
// (per site, units of J). An energy strictly below a bound excludes the class:
// below `separable` some nearest-neighbour pair is entangled, below
// `two_producible` the state contains tripartite entanglement, below
// `gme3_reduced` some three consecutive qubits are genuinely tripartite
// entangled.

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "spinwit/spin_models.hpp"
#include "spinwit/thermal.hpp"

namespace spinwit {

enum class EntanglementClass { separable, two_producible, gme3_reduced };

std::string_view to_string(EntanglementClass cls);

struct WitnessBound {
  ModelKind model;
  EntanglementClass cls;
  double per_site;  // units of J
};

/// Only ModelKind::xy and ModelKind::heisenberg carry these bounds.
WitnessBound witness_bound(ModelKind model, EntanglementClass cls);

/// per_site * J * N.
double bound(ModelKind model, EntanglementClass cls, int sites, double coupling);

/// Minimum of <H_H + B sum Z> over product states (two-sublattice canted
/// configuration): N J (-1 - (B/J)^2 / 8) for B <= 4J, N (J - B) above.
double separable_bound_with_field(int sites, double coupling, double field);

enum class Certificate : unsigned {
  pair_reduced_entangled = 1u << 0,
  contains_tripartite = 1u << 1,
  gme3_reduced_certified = 1u << 2,
};

std::string_view to_string(Certificate c);

inline constexpr std::array<Certificate, 3> kCertificates{
    Certificate::pair_reduced_entangled, Certificate::contains_tripartite,
    Certificate::gme3_reduced_certified};

struct Verdict {
  unsigned flags = 0;
  double energy_per_site = 0.0;
  // bound_per_site - energy_per_site for each certificate, in kCertificates
  // order; positive means the energy lies below the bound.
  std::array<double, 3> margins{};
  std::array<double, 3> bounds_per_site{};

  bool has(Certificate c) const noexcept { return (flags & static_cast<unsigned>(c)) != 0; }
};

/// Certificates implied by a measured total energy. Saturating a bound
/// certifies nothing: a flag needs energy_per_site < bound - detection_margin.
Verdict classify(double energy, ModelKind model, int sites, double coupling,
                 double detection_margin = kTolerances.detection_margin);

/// Temperature at which the Gibbs energy crosses the class bound, found by
/// bisection on [t_lo, t_hi]. Empty when the bound is never crossed inside
/// the bracket, or for the tripartite classes on fewer than three qubits.
std::optional<double> threshold_temperature(const ThermalEnsemble& ensemble, ModelKind model,
                                            EntanglementClass cls, int sites, double coupling,
                                            const Tolerances& tol = kTolerances);

std::optional<double> threshold_temperature(const ChainModel& model, EntanglementClass cls);

struct ThresholdReport {
  int sites = 0;
  std::optional<double> t_c2;
  std::optional<double> t_c3;
  std::optional<double> t_r3;

  /// T_C2 > T_C3 > T_R3 among the defined entries.
  bool ordered() const;
};

/// All three thresholds from one values-only diagonalization.
ThresholdReport threshold_report(const ChainModel& model);

}  // namespace spinwit
