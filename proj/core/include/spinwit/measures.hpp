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

#pragma once

#include <span>
#include <utility>

#include "spinwit/tensor_lab.hpp"

namespace spinwit {

struct PairMeasureResult {
  double concurrence = 0.0;
  double eof = 0.0;  // ebits
};

/// Wootters concurrence max(0, l1 - l2 - l3 - l4) of a two-qubit state, with
/// l_i the descending square roots of the spectrum of rho (Y(x)Y) rho* (Y(x)Y).
/// Throws ValidationError if rho is not a 4x4 density matrix within tolerance.
double concurrence(const ComplexMatrix& rho2);
double concurrence(const DensityState& rho2);

/// Binary entropy in bits; h(0) = h(1) = 0.
double binary_entropy(double p);

/// Entanglement of formation from a concurrence value in [0, 1].
double eof_from_concurrence(double c);

double eof(const DensityState& rho2);

PairMeasureResult pair_measures(const DensityState& rho2);

/// (min eigenvalue of the partial transpose < -npt_tol, that eigenvalue).
std::pair<bool, double> is_npt(const DensityState& rho, std::span<const int> subset,
                               double npt_tol = kTolerances.npt);

}  // namespace spinwit
