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

#include "spinwit/thermal.hpp"

#include <cmath>
#include <string>

namespace spinwit {
namespace {

void check_temperature(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw ArgumentError("temperature must be positive and finite (use ground_state for T = 0)");
  }
}

}  // namespace

ThermalEnsemble::ThermalEnsemble(const ComplexMatrix& hamiltonian, Spectrum what)
    : spectrum_(eigh(hamiltonian, what)), qubits_(qubits_for_dim(hamiltonian.rows())) {}

void ThermalEnsemble::require_vectors(const char* what) const {
  if (!has_vectors()) {
    throw ArgumentError(std::string(what) + " needs eigenvectors; ensemble is values-only");
  }
}

RealVector ThermalEnsemble::weights(double temperature) const {
  check_temperature(temperature);
  const double e0 = ground_energy();
  RealVector w = (-(spectrum_.values.array() - e0) / temperature).exp().matrix();
  return w / w.sum();
}

double ThermalEnsemble::energy(double temperature) const {
  return weights(temperature).dot(spectrum_.values);
}

double ThermalEnsemble::log_partition(double beta) const {
  const double e0 = ground_energy();
  const double tail = (-(spectrum_.values.array() - e0) * beta).exp().sum();
  return -beta * e0 + std::log(tail);
}

DensityState ThermalEnsemble::gibbs_state(double temperature) const {
  require_vectors("gibbs_state");
  const RealVector w = weights(temperature);
  // Levels whose weight underflowed contribute nothing.
  long used = w.size();
  while (used > 1 && w(used - 1) == 0.0) --used;
  const auto v = spectrum_.vectors.leftCols(used);
  ComplexMatrix rho = v * w.head(used).cast<Complex>().asDiagonal() * v.adjoint();
  return DensityState::assume_valid(0.5 * (rho + rho.adjoint()));
}

int ThermalEnsemble::ground_degeneracy(double degeneracy_tol) const {
  const double scale = spectrum_.values.cwiseAbs().maxCoeff();
  const double e0 = ground_energy();
  int count = 0;
  while (count < spectrum_.values.size() &&
         spectrum_.values(count) - e0 <= degeneracy_tol * scale) {
    ++count;
  }
  return count;
}

DensityState ThermalEnsemble::ground_state(double degeneracy_tol) const {
  require_vectors("ground_state");
  const int g = ground_degeneracy(degeneracy_tol);
  const auto v = spectrum_.vectors.leftCols(g);
  ComplexMatrix rho = (v * v.adjoint()) / static_cast<double>(g);
  return DensityState::assume_valid(0.5 * (rho + rho.adjoint()));
}

ReducedBasis ThermalEnsemble::reduced_basis(std::span<const int> sites) const {
  require_vectors("reduced_basis");
  ReducedBasis basis;
  basis.sites.assign(sites.begin(), sites.end());
  basis.per_level.reserve(static_cast<size_t>(spectrum_.vectors.cols()));
  for (long i = 0; i < spectrum_.vectors.cols(); ++i) {
    basis.per_level.push_back(reduce_pure(spectrum_.vectors.col(i), sites, qubits_));
  }
  return basis;
}

DensityState ThermalEnsemble::thermal_marginal(const ReducedBasis& basis,
                                               double temperature) const {
  if (basis.per_level.size() != static_cast<size_t>(spectrum_.values.size())) {
    throw ArgumentError("thermal_marginal: basis belongs to a different ensemble");
  }
  const RealVector w = weights(temperature);
  const long k = basis.per_level.front().rows();
  ComplexMatrix rho = ComplexMatrix::Zero(k, k);
  for (long i = 0; i < w.size(); ++i) {
    if (w(i) != 0.0) rho += w(i) * basis.per_level[static_cast<size_t>(i)];
  }
  return DensityState::assume_valid(0.5 * (rho + rho.adjoint()));
}

DensityState gibbs_state(const ComplexMatrix& hamiltonian, double temperature) {
  check_temperature(temperature);
  return ThermalEnsemble(hamiltonian).gibbs_state(temperature);
}

std::pair<double, DensityState> ground_state(const ComplexMatrix& hamiltonian) {
  const ThermalEnsemble ensemble(hamiltonian);
  return {ensemble.ground_energy(), ensemble.ground_state()};
}

std::vector<int> cyclic_sites(int start, int m, int n_qubits) {
  if (start < 1 || start > n_qubits) {
    throw IndexError("start site " + std::to_string(start) + " outside 1.." +
                     std::to_string(n_qubits));
  }
  if (m > n_qubits) throw ArgumentError("block longer than the register");
  std::vector<int> sites;
  for (int j = 0; j < m; ++j) sites.push_back((start - 1 + j) % n_qubits + 1);
  return sites;
}

DensityState nn_reduced(const DensityState& state, int start, int m) {
  if (m != 2 && m != 3) throw ArgumentError("nn_reduced: block size must be 2 or 3");
  const std::vector<int> sites = cyclic_sites(start, m, state.qubits());
  return partial_trace(state, sites);
}

}  // namespace spinwit
