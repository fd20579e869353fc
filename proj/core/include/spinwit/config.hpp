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

#include <stdexcept>
#include <string>

namespace spinwit {

/// Numerical tolerances shared by every module. One record so that a run can
/// be reproduced by pinning a single set of values.
struct Tolerances {
  double hermitian = 1e-12;         // |M - M^dagger| for Hermitian-flagged matrices
  double hermitian_input = 1e-9;    // accepted residual on eigh input
  double trace = 1e-12;             // |tr(rho) - 1| for density states
  double psd = 1e-10;               // most negative eigenvalue tolerated in named states
  double psd_file = 1e-8;           // same, for matrices loaded from files
  double degeneracy = 1e-8;         // relative to max|lambda|, ground-space selection
  double npt = 1e-10;               // partial-transpose negativity threshold
  double spectrum_clamp = 1e-12;    // rounding floor when taking sqrt of a PSD spectrum
  double threshold_temperature = 1e-5;  // bisection width for threshold temperatures
  double threshold_t_lo = 1e-3;
  double threshold_t_hi = 100.0;
  double detection_margin = 1e-12;  // energy must be this far below a bound to flag
  double oracle_improvement = 1e-10;    // coordinate-descent sweep convergence
};

inline constexpr Tolerances kTolerances{};

/// Largest matrix dimension the dense kernels accept (14 qubits).
inline constexpr long kMaxDim = 1L << 14;
/// Largest chain handled by the model builders.
inline constexpr int kMaxChainSites = 12;

class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix fails a density-matrix or Hermiticity check. The
/// message names the check that failed.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string check, const std::string& detail)
      : std::runtime_error(check + ": " + detail), check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

}  // namespace spinwit
