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

// Gibbs and ground states of a fixed Hamiltonian. Temperatures are in units of
// J with k_B = 1.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "spinwit/spin_models.hpp"
#include "spinwit/tensor_lab.hpp"

namespace spinwit {

/// Per-eigenvector reduced matrices on a fixed set of sites. Thermal marginals
/// are Boltzmann-weighted sums of these, so one table serves every temperature.
struct ReducedBasis {
  std::vector<int> sites;
  std::vector<ComplexMatrix> per_level;  // Tr_rest |v_i><v_i|
};

/// Spectral decomposition of one Hamiltonian, reused across temperatures.
/// Immutable after construction; safe to share between threads.
class ThermalEnsemble {
 public:
  ThermalEnsemble(const ComplexMatrix& hamiltonian, Spectrum what = Spectrum::with_vectors);

  int qubits() const noexcept { return qubits_; }
  const EigenSystem& spectrum() const noexcept { return spectrum_; }
  bool has_vectors() const noexcept { return spectrum_.vectors.size() > 0; }
  double ground_energy() const { return spectrum_.values(0); }

  /// Normalized Boltzmann weights exp(-(E_i - E_0)/T) / Z. T > 0.
  RealVector weights(double temperature) const;

  /// <H> in the Gibbs state at temperature T > 0.
  double energy(double temperature) const;

  /// ln Z(beta) including the ground-energy offset.
  double log_partition(double beta) const;

  DensityState gibbs_state(double temperature) const;

  /// Normalized projector onto the lowest eigenspace; levels within
  /// degeneracy_tol * max|E| of E_0 are included.
  DensityState ground_state(double degeneracy_tol = kTolerances.degeneracy) const;
  int ground_degeneracy(double degeneracy_tol = kTolerances.degeneracy) const;

  ReducedBasis reduced_basis(std::span<const int> sites) const;

  /// Thermal reduced state on basis.sites at temperature T > 0.
  DensityState thermal_marginal(const ReducedBasis& basis, double temperature) const;

 private:
  void require_vectors(const char* what) const;

  EigenSystem spectrum_;
  int qubits_;
};

/// exp(-H/T)/Z. Throws ArgumentError for T <= 0 (use ground_state).
DensityState gibbs_state(const ComplexMatrix& hamiltonian, double temperature);

/// (E_0, degeneracy-averaged ground projector).
std::pair<double, DensityState> ground_state(const ComplexMatrix& hamiltonian);

/// Reduced state of m in {2, 3} consecutive sites starting at `start`,
/// wrapping cyclically past site N.
DensityState nn_reduced(const DensityState& state, int start, int m);

/// Sites start, start+1, ..., start+m-1 with wrap-around.
std::vector<int> cyclic_sites(int start, int m, int n_qubits);

}  // namespace spinwit
