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

// Dense complex kernels on qubit registers.
//
// Sites are numbered 1..N. Site 1 is the leftmost tensor factor, i.e. the most
// significant bit of a basis index, so embed_site(X, 2, 2) == kron(I, X).

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinwit/config.hpp"

namespace spinwit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct EigenSystem {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors; empty for values-only solves
};

/// Acceptance thresholds for DensityState::from_matrix.
struct StateChecks {
  double hermitian = kTolerances.hermitian_input;
  double trace = kTolerances.trace;
  double psd = kTolerances.psd;
};

/// A positive-semidefinite, unit-trace matrix on a register of qubits.
class DensityState {
 public:
  /// Validates Hermiticity, trace and positivity; throws ValidationError
  /// naming the failed check ("dimension", "hermitian", "trace", "psd").
  /// The stored matrix is the Hermitian part of the input.
  static DensityState from_matrix(ComplexMatrix rho, const StateChecks& checks = {});

  /// Normalizes `psi` and forms |psi><psi|.
  static DensityState from_pure(const ComplexVector& psi);

  /// Only the dimension is checked. For states produced by construction
  /// (Gibbs states, partial traces of valid states).
  static DensityState assume_valid(ComplexMatrix rho);

  int qubits() const noexcept { return qubits_; }
  long dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  /// tr(rho * op), real part.
  double expectation(const ComplexMatrix& op) const;

 private:
  DensityState(ComplexMatrix rho, int qubits) : matrix_(std::move(rho)), qubits_(qubits) {}

  ComplexMatrix matrix_;
  int qubits_;
};

/// Number of qubits for a power-of-two dimension; throws SizeError otherwise.
int qubits_for_dim(long dim);

double max_abs(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kTolerances.hermitian);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// I (x) ... (x) op (x) ... (x) I with the 2x2 `op` at `site` (1-based).
ComplexMatrix embed_site(const ComplexMatrix& op, int site, int n_qubits);

/// Places a 2^m x 2^m operator on the listed sites (in the given order) of an
/// N-qubit register. Sites must be distinct; they need not be adjacent.
ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const int> sites, int n_qubits);

/// target += scale * embed_operator(op, sites, N), without a dense temporary.
void add_embedded(ComplexMatrix& target, const ComplexMatrix& op, std::span<const int> sites,
                  int n_qubits, Complex scale = 1.0);

/// Reduced state on `keep`; the output qubit order follows `keep`.
DensityState partial_trace(const DensityState& rho, std::span<const int> keep);

/// Reduced matrix of an arbitrary (not necessarily normalized) operator.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> keep, int n_qubits);

/// Reduced density matrix Tr_rest |psi><psi| on `keep`, computed without
/// forming the full projector.
ComplexMatrix reduce_pure(const ComplexVector& psi, std::span<const int> keep, int n_qubits);

/// Partial transpose with respect to the sites in `subset`.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const int> subset, int n_qubits);
ComplexMatrix partial_transpose(const DensityState& rho, std::span<const int> subset);

enum class Spectrum { values_only, with_vectors };

/// Hermitian eigendecomposition. Matrices with an identically zero imaginary
/// part go through the real symmetric solver.
EigenSystem eigh(const ComplexMatrix& h, Spectrum what = Spectrum::with_vectors);

/// Cyclic shift S|a1 a2 ... aN> = |aN a1 ... a(N-1)>.
ComplexMatrix shift_operator(int n_qubits);

}  // namespace spinwit
