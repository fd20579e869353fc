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

#include "spinwit/tensor_lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spinwit {
namespace {

void check_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw ArgumentError(std::string(what) + ": matrix must be square and non-empty");
  }
}

void check_sites(std::span<const int> sites, int n_qubits) {
  std::vector<bool> seen(static_cast<size_t>(n_qubits) + 1, false);
  for (int s : sites) {
    if (s < 1 || s > n_qubits) {
      throw IndexError("site " + std::to_string(s) + " outside 1.." + std::to_string(n_qubits));
    }
    if (seen[static_cast<size_t>(s)]) {
      throw ArgumentError("site " + std::to_string(s) + " listed twice");
    }
    seen[static_cast<size_t>(s)] = true;
  }
}

long site_mask(int site, int n_qubits) { return 1L << (n_qubits - site); }

// offsets[r] = full-register index whose bits on `sites` spell r (first site
// is the most significant local bit) and whose other bits are zero.
std::vector<long> scatter_table(std::span<const int> sites, int n_qubits) {
  const int m = static_cast<int>(sites.size());
  std::vector<long> table(static_cast<size_t>(1L << m), 0);
  for (long r = 0; r < (1L << m); ++r) {
    long idx = 0;
    for (int b = 0; b < m; ++b) {
      if ((r >> (m - 1 - b)) & 1L) idx |= site_mask(sites[static_cast<size_t>(b)], n_qubits);
    }
    table[static_cast<size_t>(r)] = idx;
  }
  return table;
}

long gather(long index, std::span<const int> sites, int n_qubits) {
  long r = 0;
  for (int s : sites) r = (r << 1) | ((index & site_mask(s, n_qubits)) ? 1L : 0L);
  return r;
}

std::vector<int> complement(std::span<const int> keep, int n_qubits) {
  std::vector<int> rest;
  for (int s = 1; s <= n_qubits; ++s) {
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) rest.push_back(s);
  }
  return rest;
}

}  // namespace

int qubits_for_dim(long dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw SizeError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((1L << n) < dim) ++n;
  return n;
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermiticity_residual(const ComplexMatrix& m) { return max_abs(m - m.adjoint()); }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && hermiticity_residual(m) <= tol;
}

DensityState DensityState::from_matrix(ComplexMatrix rho, const StateChecks& checks) {
  if (rho.rows() != rho.cols() || rho.rows() < 1) {
    throw ValidationError("dimension", "density matrix must be square and non-empty");
  }
  int n = 0;
  try {
    n = qubits_for_dim(rho.rows());
  } catch (const SizeError& e) {
    throw ValidationError("dimension", e.what());
  }
  const double herm = hermiticity_residual(rho);
  if (!(herm <= checks.hermitian)) {
    throw ValidationError("hermitian", "max|rho - rho^dagger| = " + std::to_string(herm));
  }
  ComplexMatrix sym = 0.5 * (rho + rho.adjoint());
  const double tr = sym.trace().real();
  if (!(std::abs(tr - 1.0) <= checks.trace)) {
    throw ValidationError("trace", "trace = " + std::to_string(tr));
  }
  const EigenSystem es = eigh(sym, Spectrum::values_only);
  const double lo = es.values(0);
  if (lo < -checks.psd) {
    throw ValidationError("psd", "negative eigenvalue " + std::to_string(lo));
  }
  return DensityState(std::move(sym), n);
}

DensityState DensityState::from_pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw ArgumentError("from_pure: zero vector");
  const int n = qubits_for_dim(psi.size());
  const ComplexVector v = psi / norm;
  return DensityState(v * v.adjoint(), n);
}

DensityState DensityState::assume_valid(ComplexMatrix rho) {
  if (rho.rows() != rho.cols()) throw SizeError("density matrix must be square");
  const int n = qubits_for_dim(rho.rows());
  return DensityState(std::move(rho), n);
}

double DensityState::expectation(const ComplexMatrix& op) const {
  if (op.rows() != dim() || op.cols() != dim()) {
    throw SizeError("expectation: operator dimension mismatch");
  }
  return matrix_.cwiseProduct(op.transpose()).sum().real();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const long rows = a.rows() * b.rows();
  const long cols = a.cols() * b.cols();
  if (rows > kMaxDim || cols > kMaxDim) {
    throw SizeError("kron: dimension " + std::to_string(std::max(rows, cols)) + " exceeds " +
                    std::to_string(kMaxDim));
  }
  ComplexMatrix out(rows, cols);
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix embed_site(const ComplexMatrix& op, int site, int n_qubits) {
  if (op.rows() != 2 || op.cols() != 2) throw ArgumentError("embed_site: operator must be 2x2");
  const int sites[] = {site};
  return embed_operator(op, sites, n_qubits);
}

ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const int> sites, int n_qubits) {
  if (n_qubits < 1 || (1L << n_qubits) > kMaxDim) {
    throw SizeError("register of " + std::to_string(n_qubits) + " qubits not supported");
  }
  const long dim = 1L << n_qubits;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  add_embedded(out, op, sites, n_qubits);
  return out;
}

void add_embedded(ComplexMatrix& target, const ComplexMatrix& op, std::span<const int> sites,
                  int n_qubits, Complex scale) {
  if (n_qubits < 1 || (1L << n_qubits) > kMaxDim) {
    throw SizeError("register of " + std::to_string(n_qubits) + " qubits not supported");
  }
  check_sites(sites, n_qubits);
  const long local = 1L << sites.size();
  if (op.rows() != local || op.cols() != local) {
    throw ArgumentError("operator dimension does not match " + std::to_string(sites.size()) +
                        " site(s)");
  }
  const long dim = 1L << n_qubits;
  if (target.rows() != dim || target.cols() != dim) {
    throw SizeError("add_embedded: target dimension mismatch");
  }
  const std::vector<long> offsets = scatter_table(sites, n_qubits);
  const long mask = offsets.back();
  for (long i = 0; i < dim; ++i) {
    const long row_local = gather(i, sites, n_qubits);
    const long rest = i & ~mask;
    for (long c = 0; c < local; ++c) {
      const Complex v = op(row_local, c);
      if (v != Complex(0.0, 0.0)) target(i, rest | offsets[static_cast<size_t>(c)]) += scale * v;
    }
  }
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> keep, int n_qubits) {
  if (keep.empty()) throw ArgumentError("partial_trace: keep set is empty");
  check_square(m, "partial_trace");
  if (m.rows() != (1L << n_qubits)) throw SizeError("partial_trace: dimension mismatch");
  check_sites(keep, n_qubits);
  const std::vector<int> traced = complement(keep, n_qubits);
  const std::vector<long> kept_off = scatter_table(keep, n_qubits);
  const std::vector<long> traced_off = scatter_table(traced, n_qubits);
  const long k = static_cast<long>(kept_off.size());
  ComplexMatrix out = ComplexMatrix::Zero(k, k);
  for (long c = 0; c < k; ++c) {
    for (long r = 0; r < k; ++r) {
      Complex acc = 0.0;
      for (long t : traced_off) acc += m(kept_off[static_cast<size_t>(r)] | t,
                                         kept_off[static_cast<size_t>(c)] | t);
      out(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix reduce_pure(const ComplexVector& psi, std::span<const int> keep, int n_qubits) {
  if (keep.empty()) throw ArgumentError("reduce_pure: keep set is empty");
  if (psi.size() != (1L << n_qubits)) throw SizeError("reduce_pure: dimension mismatch");
  check_sites(keep, n_qubits);
  const std::vector<int> traced = complement(keep, n_qubits);
  const std::vector<long> kept_off = scatter_table(keep, n_qubits);
  const std::vector<long> traced_off = scatter_table(traced, n_qubits);
  ComplexMatrix amp(static_cast<long>(kept_off.size()), static_cast<long>(traced_off.size()));
  for (long t = 0; t < amp.cols(); ++t) {
    for (long r = 0; r < amp.rows(); ++r) {
      amp(r, t) = psi(kept_off[static_cast<size_t>(r)] | traced_off[static_cast<size_t>(t)]);
    }
  }
  return amp * amp.adjoint();
}

DensityState partial_trace(const DensityState& rho, std::span<const int> keep) {
  return DensityState::assume_valid(partial_trace(rho.matrix(), keep, rho.qubits()));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const int> subset,
                                int n_qubits) {
  check_square(m, "partial_transpose");
  if (m.rows() != (1L << n_qubits)) throw SizeError("partial_transpose: dimension mismatch");
  check_sites(subset, n_qubits);
  long mask = 0;
  for (int s : subset) mask |= site_mask(s, n_qubits);
  const long dim = m.rows();
  ComplexMatrix out(dim, dim);
  for (long j = 0; j < dim; ++j) {
    for (long i = 0; i < dim; ++i) {
      const long ii = (i & ~mask) | (j & mask);
      const long jj = (j & ~mask) | (i & mask);
      out(ii, jj) = m(i, j);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityState& rho, std::span<const int> subset) {
  return partial_transpose(rho.matrix(), subset, rho.qubits());
}

EigenSystem eigh(const ComplexMatrix& h, Spectrum what) {
  check_square(h, "eigh");
  const double scale = std::max(1.0, max_abs(h));
  const double residual = hermiticity_residual(h);
  if (!(residual <= kTolerances.hermitian_input * scale)) {
    throw ValidationError("hermitian", "eigh input residual " + std::to_string(residual));
  }
  const int options =
      what == Spectrum::with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  EigenSystem out;
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
    const Eigen::MatrixXd re = h.real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(re, options);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: solver did not converge");
    out.values = solver.eigenvalues();
    if (what == Spectrum::with_vectors) out.vectors = solver.eigenvectors().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, options);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: solver did not converge");
    out.values = solver.eigenvalues();
    if (what == Spectrum::with_vectors) out.vectors = solver.eigenvectors();
  }
  return out;
}

ComplexMatrix shift_operator(int n_qubits) {
  if (n_qubits < 2) throw ArgumentError("shift_operator: need at least 2 qubits");
  if ((1L << n_qubits) > kMaxDim) throw SizeError("shift_operator: register too large");
  const long dim = 1L << n_qubits;
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (long a = 0; a < dim; ++a) {
    const long b = ((a & 1L) << (n_qubits - 1)) | (a >> 1);
    s(b, a) = 1.0;
  }
  return s;
}

}  // namespace spinwit
