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

// Random generators for property tests.

#pragma once

#include <random>

#include "spinwit/tensor_lab.hpp"

namespace spinwit::testing {

inline ComplexMatrix random_matrix(long dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (long j = 0; j < dim; ++j) {
    for (long i = 0; i < dim; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

inline ComplexMatrix random_hermitian(long dim, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(dim, rng);
  return 0.5 * (a + a.adjoint());
}

/// Haar-distributed unitary via QR of a Ginibre matrix with phase fix.
inline ComplexMatrix random_unitary(long dim, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return q;
}

/// Full-rank random density matrix A A^dagger / tr.
inline ComplexMatrix random_density(long dim, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(dim, rng);
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

inline ComplexVector random_state(long dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (long i = 0; i < dim; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

/// Integer-valued complex matrix, for exact algebraic identities.
inline ComplexMatrix random_integer_matrix(long rows, long cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  ComplexMatrix m(rows, cols);
  for (long j = 0; j < cols; ++j) {
    for (long i = 0; i < rows; ++i) m(i, j) = Complex(dist(rng), dist(rng));
  }
  return m;
}

}  // namespace spinwit::testing
