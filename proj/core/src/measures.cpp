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

#include "spinwit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinwit/spin_models.hpp"

namespace spinwit {
namespace {

// sqrt of a PSD Hermitian matrix, clamping rounding-level negative eigenvalues.
ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const EigenSystem es = eigh(m);
  const RealVector roots = es.values.cwiseMax(0.0).cwiseSqrt();
  return es.vectors * roots.cast<Complex>().asDiagonal() * es.vectors.adjoint();
}

}  // namespace

double concurrence(const ComplexMatrix& rho2) {
  if (rho2.rows() != 4 || rho2.cols() != 4) {
    throw ValidationError("dimension", "concurrence needs a 4x4 two-qubit state");
  }
  // Validate (Hermitian, unit trace, PSD) through the common path.
  const DensityState rho = DensityState::from_matrix(rho2);
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  const ComplexMatrix flipped = yy * r.conjugate() * yy;
  // sqrt(rho) rho~ sqrt(rho) is Hermitian and isospectral with rho rho~.
  const ComplexMatrix s = psd_sqrt(r);
  ComplexMatrix herm = s * flipped * s;
  herm = 0.5 * (herm + herm.adjoint());
  RealVector lambda = eigh(herm, Spectrum::values_only).values;
  for (long i = 0; i < lambda.size(); ++i) {
    lambda(i) = lambda(i) < kTolerances.spectrum_clamp ? 0.0 : std::sqrt(lambda(i));
  }
  std::sort(lambda.data(), lambda.data() + lambda.size(), std::greater<>());
  const double c = lambda(0) - lambda(1) - lambda(2) - lambda(3);
  return std::clamp(c, 0.0, 1.0);
}

double concurrence(const DensityState& rho2) { return concurrence(rho2.matrix()); }

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double eof_from_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw ArgumentError("concurrence must lie in [0, 1], got " + std::to_string(c));
  }
  if (c == 0.0) return 0.0;
  return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

double eof(const DensityState& rho2) { return eof_from_concurrence(concurrence(rho2)); }

PairMeasureResult pair_measures(const DensityState& rho2) {
  const double c = concurrence(rho2);
  return {c, eof_from_concurrence(c)};
}

std::pair<bool, double> is_npt(const DensityState& rho, std::span<const int> subset,
                               double npt_tol) {
  ComplexMatrix pt = partial_transpose(rho, subset);
  pt = 0.5 * (pt + pt.adjoint());
  const double lo = eigh(pt, Spectrum::values_only).values(0);
  return {lo < -npt_tol, lo};
}

}  // namespace spinwit
