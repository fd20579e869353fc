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

#include "spinwit/witness.hpp"

#include <cmath>
#include <string>

namespace spinwit {
namespace {

void check_chain(int sites, double coupling) {
  if (sites < 2 || sites % 2 != 0) {
    throw ArgumentError("witness bounds need an even chain length, got " + std::to_string(sites));
  }
  if (!(coupling > 0.0)) throw ArgumentError("coupling J must be positive");
}

}  // namespace

std::string_view to_string(EntanglementClass cls) {
  switch (cls) {
    case EntanglementClass::separable:
      return "separable";
    case EntanglementClass::two_producible:
      return "two_producible";
    case EntanglementClass::gme3_reduced:
      return "gme3_reduced";
  }
  return "unknown";
}

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::pair_reduced_entangled:
      return "pair_reduced_entangled";
    case Certificate::contains_tripartite:
      return "contains_tripartite";
    case Certificate::gme3_reduced_certified:
      return "gme3_reduced_certified";
  }
  return "unknown";
}

WitnessBound witness_bound(ModelKind model, EntanglementClass cls) {
  double per_site = 0.0;
  switch (model) {
    case ModelKind::xy:
      switch (cls) {
        case EntanglementClass::separable:
          per_site = -1.0;
          break;
        case EntanglementClass::two_producible:
          per_site = -9.0 / 8.0;
          break;
        case EntanglementClass::gme3_reduced:
          per_site = -(1.0 + std::sqrt(2.0)) / 2.0;
          break;
      }
      break;
    case ModelKind::heisenberg:
      switch (cls) {
        case EntanglementClass::separable:
          per_site = -1.0;
          break;
        case EntanglementClass::two_producible:
          per_site = -1.5;
          break;
        case EntanglementClass::gme3_reduced:
          per_site = -(1.0 + std::sqrt(5.0)) / 2.0;
          break;
      }
      break;
    case ModelKind::heisenberg_field:
      throw ArgumentError("witness bounds are defined at zero field; use separable_bound_with_field");
  }
  return {model, cls, per_site};
}

double bound(ModelKind model, EntanglementClass cls, int sites, double coupling) {
  check_chain(sites, coupling);
  return witness_bound(model, cls).per_site * coupling * sites;
}

double separable_bound_with_field(int sites, double coupling, double field) {
  check_chain(sites, coupling);
  if (!(field >= 0.0)) throw ArgumentError("field B must be non-negative");
  const double n = static_cast<double>(sites);
  if (field <= 4.0 * coupling) {
    const double b = field / coupling;
    return n * coupling * (-1.0 - b * b / 8.0);
  }
  return n * (coupling - field);
}

Verdict classify(double energy, ModelKind model, int sites, double coupling,
                 double detection_margin) {
  check_chain(sites, coupling);
  Verdict v;
  v.energy_per_site = energy / (coupling * sites);
  const EntanglementClass classes[] = {EntanglementClass::separable,
                                       EntanglementClass::two_producible,
                                       EntanglementClass::gme3_reduced};
  for (size_t i = 0; i < kCertificates.size(); ++i) {
    const double b = witness_bound(model, classes[i]).per_site;
    v.bounds_per_site[i] = b;
    v.margins[i] = b - v.energy_per_site;
    if (v.energy_per_site < b - detection_margin) v.flags |= static_cast<unsigned>(kCertificates[i]);
  }
  return v;
}

std::optional<double> threshold_temperature(const ThermalEnsemble& ensemble, ModelKind model,
                                            EntanglementClass cls, int sites, double coupling,
                                            const Tolerances& tol) {
  // A two-qubit register has no tripartite entanglement to certify.
  if (cls != EntanglementClass::separable && sites < 3) return std::nullopt;
  const double target = bound(model, cls, sites, coupling);
  double lo = tol.threshold_t_lo;
  double hi = tol.threshold_t_hi;
  if (!(ensemble.energy(lo) < target)) return std::nullopt;
  if (ensemble.energy(hi) < target) return std::nullopt;
  // Gibbs energy increases with T, so [lo, hi] keeps energy(lo) < target <= energy(hi).
  while (hi - lo > tol.threshold_temperature) {
    const double mid = 0.5 * (lo + hi);
    if (ensemble.energy(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<double> threshold_temperature(const ChainModel& model, EntanglementClass cls) {
  if (model.kind == ModelKind::heisenberg_field) {
    throw ArgumentError("threshold temperatures are computed at zero field only");
  }
  const ThermalEnsemble ensemble(build_hamiltonian(model), Spectrum::values_only);
  return threshold_temperature(ensemble, model.kind, cls, model.sites, model.coupling);
}

bool ThresholdReport::ordered() const {
  const std::optional<double> seq[] = {t_c2, t_c3, t_r3};
  std::optional<double> prev;
  for (const auto& t : seq) {
    if (!t) continue;
    if (prev && !(*prev > *t)) return false;
    prev = t;
  }
  return true;
}

ThresholdReport threshold_report(const ChainModel& model) {
  if (model.kind == ModelKind::heisenberg_field) {
    throw ArgumentError("threshold temperatures are computed at zero field only");
  }
  const ThermalEnsemble ensemble(build_hamiltonian(model), Spectrum::values_only);
  ThresholdReport r;
  r.sites = model.sites;
  r.t_c2 = threshold_temperature(ensemble, model.kind, EntanglementClass::separable, model.sites,
                                 model.coupling);
  r.t_c3 = threshold_temperature(ensemble, model.kind, EntanglementClass::two_producible,
                                 model.sites, model.coupling);
  r.t_r3 = threshold_temperature(ensemble, model.kind, EntanglementClass::gme3_reduced,
                                 model.sites, model.coupling);
  return r;
}

}  // namespace spinwit
