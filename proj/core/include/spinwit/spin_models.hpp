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

// Periodic XY and Heisenberg chains and the reference states used to probe
// them.

#pragma once

#include <string>
#include <string_view>

#include "spinwit/tensor_lab.hpp"

namespace spinwit {

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

enum class ModelKind { xy, heisenberg, heisenberg_field };

std::string_view to_string(ModelKind kind);

/// Periodic chain H = J sum_k [X_k X_{k+1} + Y_k Y_{k+1} (+ Z_k Z_{k+1})] + B sum_k Z_k
/// with site N+1 identified with site 1. For N = 2 both (1,2) and (2,1) are
/// summed, so H = 2 h.
struct ChainModel {
  ModelKind kind = ModelKind::heisenberg;
  int sites = 2;
  double coupling = 1.0;  // J > 0
  double field = 0.0;     // B, only for heisenberg_field

  static ChainModel xy(int sites, double coupling = 1.0);
  static ChainModel heisenberg(int sites, double coupling = 1.0);
  static ChainModel heisenberg_field(int sites, double coupling, double field);

  /// Throws ArgumentError unless J > 0, N is even and >= 2, and B is zero for
  /// the zero-field kinds.
  void validate() const;

  bool has_zz() const noexcept { return kind != ModelKind::xy; }
};

/// X(x)X + Y(x)Y on two qubits.
ComplexMatrix build_pair_xy();
/// X(x)X + Y(x)Y + Z(x)Z on two qubits.
ComplexMatrix build_pair_heisenberg();

/// Dense 2^N Hamiltonian of the chain. Throws SizeError above kMaxChainSites.
ComplexMatrix build_hamiltonian(const ChainModel& model);

enum class StateLabel { singlet, singlet_chain, shifted_mixture, polarized };

std::string_view to_string(StateLabel label);
StateLabel parse_state_label(std::string_view text);

struct NamedState {
  StateLabel label;
  DensityState state;
};

/// singlet: (|10> - |01>)/sqrt(2), N must be 2.
/// singlet_chain: singlets on (1,2)(3,4)..., N even.
/// shifted_mixture: (|Phi><Phi| + S|Phi><Phi|S^dagger)/2 for the singlet chain Phi.
/// polarized: |1...1>, the Z = -1 product state.
NamedState make_state(StateLabel label, int sites);

ComplexVector singlet_vector();
ComplexVector singlet_chain_vector(int sites);

}  // namespace spinwit
