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

// Numerical minimization of two-body energies over restricted state families:
// pure product states and products of pure pair states on adjacent blocks.
// Energies are evaluated from local expectation values only; nothing here
// touches the dense Hamiltonian or the closed-form witness constants.

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "spinwit/spin_models.hpp"

namespace spinwit {

/// J_x X_a X_b + J_y Y_a Y_b + J_z Z_a Z_b on sites a, b (1-based).
struct Bond {
  int a;
  int b;
  double jx;
  double jy;
  double jz;
};

/// Sum of bonds plus a uniform field B sum_k Z_k.
struct BondModel {
  int sites = 0;
  std::vector<Bond> bonds;
  double field = 0.0;
};

/// The periodic chain as a bond list; N = 2 yields the bond twice.
BondModel bond_model(const ChainModel& model);

/// A single XY or Heisenberg bond between two qubits.
BondModel pair_bond_model(ModelKind kind, double coupling = 1.0);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  static BlochVector from_angles(double theta, double phi);
  double norm() const;
};

/// Adjacent pairs covering the cyclic chain: offset 0 gives (1,2)(3,4)...,
/// offset 1 gives (2,3)(4,5)...(N,1).
struct PairBlockAssignment {
  int offset = 0;
  std::vector<std::pair<int, int>> blocks;

  static PairBlockAssignment make(int sites, int offset);
};

struct OracleOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  int max_sweeps = 20000;
  double improvement = kTolerances.oracle_improvement;
  unsigned workers = 0;  // 0 = hardware concurrency
};

struct ProductOptimum {
  double energy = 0.0;
  std::vector<BlochVector> spins;
};

struct PairOptimum {
  double energy = 0.0;
  int offset = 0;
  std::vector<ComplexVector> blocks;  // normalized 4-vectors, block order of the assignment
};

double product_energy(const BondModel& model, std::span<const BlochVector> spins);

/// Energy of the product of pure pair states `blocks` laid out by `assignment`.
double pair_producible_energy(const BondModel& model, const PairBlockAssignment& assignment,
                              std::span<const ComplexVector> blocks);

/// Best energy over `restarts` coordinate-descent runs from uniformly random
/// Bloch-sphere starts. Restart i draws from its own generator seeded by
/// (seed, i), so results do not depend on the worker count.
ProductOptimum min_product_energy(const BondModel& model, const OracleOptions& options = {});
ProductOptimum min_product_energy(const ChainModel& model, const OracleOptions& options = {});

/// Same search over pure pair states, both block offsets per restart.
/// Requires an even number of sites.
PairOptimum min_pair_producible_energy(const BondModel& model, const OracleOptions& options = {});
PairOptimum min_pair_producible_energy(const ChainModel& model, const OracleOptions& options = {});

}  // namespace spinwit
