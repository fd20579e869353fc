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

#include "spinwit/spin_models.hpp"

#include <cmath>

namespace spinwit {

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix y() {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  m << 0.0, -i, i, 0.0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::xy:
      return "xy";
    case ModelKind::heisenberg:
      return "heisenberg";
    case ModelKind::heisenberg_field:
      return "heisenberg_field";
  }
  return "unknown";
}

ChainModel ChainModel::xy(int sites, double coupling) {
  ChainModel m{ModelKind::xy, sites, coupling, 0.0};
  m.validate();
  return m;
}

ChainModel ChainModel::heisenberg(int sites, double coupling) {
  ChainModel m{ModelKind::heisenberg, sites, coupling, 0.0};
  m.validate();
  return m;
}

ChainModel ChainModel::heisenberg_field(int sites, double coupling, double field) {
  ChainModel m{ModelKind::heisenberg_field, sites, coupling, field};
  m.validate();
  return m;
}

void ChainModel::validate() const {
  if (!(coupling > 0.0) || !std::isfinite(coupling)) {
    throw ArgumentError("coupling J must be positive");
  }
  if (sites < 2 || sites % 2 != 0) {
    throw ArgumentError("chain length must be even and >= 2, got " + std::to_string(sites));
  }
  if (!std::isfinite(field)) throw ArgumentError("field B must be finite");
  if (kind != ModelKind::heisenberg_field && field != 0.0) {
    throw ArgumentError("field B is only allowed for heisenberg_field");
  }
}

ComplexMatrix build_pair_xy() {
  return kron(pauli::x(), pauli::x()) + kron(pauli::y(), pauli::y());
}

ComplexMatrix build_pair_heisenberg() {
  return build_pair_xy() + kron(pauli::z(), pauli::z());
}

ComplexMatrix build_hamiltonian(const ChainModel& model) {
  model.validate();
  if (model.sites > kMaxChainSites) {
    throw SizeError("chain of " + std::to_string(model.sites) + " sites exceeds limit " +
                    std::to_string(kMaxChainSites));
  }
  const int n = model.sites;
  const long dim = 1L << n;
  const ComplexMatrix bond = model.has_zz() ? build_pair_heisenberg() : build_pair_xy();
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int k = 1; k <= n; ++k) {
    const int pair[] = {k, k % n + 1};
    add_embedded(h, bond, pair, n, model.coupling);
  }
  if (model.field != 0.0) {
    const ComplexMatrix z = pauli::z();
    for (int k = 1; k <= n; ++k) {
      const int site[] = {k};
      add_embedded(h, z, site, n, model.field);
    }
  }
  return h;
}

std::string_view to_string(StateLabel label) {
  switch (label) {
    case StateLabel::singlet:
      return "singlet";
    case StateLabel::singlet_chain:
      return "singlet_chain";
    case StateLabel::shifted_mixture:
      return "shifted_mixture";
    case StateLabel::polarized:
      return "polarized";
  }
  return "unknown";
}

StateLabel parse_state_label(std::string_view text) {
  for (StateLabel l : {StateLabel::singlet, StateLabel::singlet_chain,
                       StateLabel::shifted_mixture, StateLabel::polarized}) {
    if (to_string(l) == text) return l;
  }
  throw ArgumentError("unknown state label '" + std::string(text) + "'");
}

ComplexVector singlet_vector() {
  ComplexVector v = ComplexVector::Zero(4);
  v(2) = 1.0 / std::sqrt(2.0);   // |10>
  v(1) = -1.0 / std::sqrt(2.0);  // |01>
  return v;
}

ComplexVector singlet_chain_vector(int sites) {
  if (sites < 2 || sites % 2 != 0) {
    throw ArgumentError("singlet chain needs an even number of sites, got " +
                        std::to_string(sites));
  }
  if (sites > kMaxChainSites) throw SizeError("singlet chain too long");
  ComplexMatrix v = singlet_vector();
  for (int k = 2; k < sites; k += 2) v = kron(v, singlet_vector());
  return v.col(0);
}

NamedState make_state(StateLabel label, int sites) {
  switch (label) {
    case StateLabel::singlet:
      if (sites != 2) throw ArgumentError("singlet is a two-qubit state");
      return {label, DensityState::from_pure(singlet_vector())};
    case StateLabel::singlet_chain:
      return {label, DensityState::from_pure(singlet_chain_vector(sites))};
    case StateLabel::shifted_mixture: {
      const ComplexVector phi = singlet_chain_vector(sites);
      const ComplexVector shifted = shift_operator(sites) * phi;
      ComplexMatrix rho = 0.5 * (phi * phi.adjoint() + shifted * shifted.adjoint());
      return {label, DensityState::assume_valid(std::move(rho))};
    }
    case StateLabel::polarized: {
      if (sites < 1 || sites > kMaxChainSites) throw ArgumentError("polarized: bad site count");
      ComplexVector v = ComplexVector::Zero(1L << sites);
      v(v.size() - 1) = 1.0;
      return {label, DensityState::from_pure(v)};
    }
  }
  throw ArgumentError("unknown state label");
}

}  // namespace spinwit
