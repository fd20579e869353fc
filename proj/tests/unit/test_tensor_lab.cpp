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

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "spinwit/spin_models.hpp"
#include "spinwit/tensor_lab.hpp"
#include "spinwit/thermal.hpp"
#include "test_support.hpp"

using namespace spinwit;

namespace {

ComplexMatrix I2() { return ComplexMatrix::Identity(2, 2); }

RealVector sorted_eigs(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// Reference partial trace by explicit index loops, independent of the
// library's scatter tables. Sites 1-based, site 1 is the leading bit.
ComplexMatrix naive_partial_trace(const ComplexMatrix& m, const std::vector<int>& keep, int n) {
  std::vector<int> rest;
  for (int s = 1; s <= n; ++s) {
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) rest.push_back(s);
  }
  const int k = static_cast<int>(keep.size());
  const long dk = 1L << k;
  const long dr = 1L << rest.size();
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  auto full_index = [&](long ki, long ri) {
    long idx = 0;
    for (int p = 0; p < k; ++p) {
      const long bit = (ki >> (k - 1 - p)) & 1;
      idx |= bit << (n - keep[p]);
    }
    const int r = static_cast<int>(rest.size());
    for (int p = 0; p < r; ++p) {
      const long bit = (ri >> (r - 1 - p)) & 1;
      idx |= bit << (n - rest[p]);
    }
    return idx;
  };
  for (long a = 0; a < dk; ++a) {
    for (long b = 0; b < dk; ++b) {
      Complex acc = 0.0;
      for (long r = 0; r < dr; ++r) acc += m(full_index(a, r), full_index(b, r));
      out(a, b) = acc;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("tensor_lab") {

TEST_CASE("kron of identities is the identity") {
  const ComplexMatrix k = kron(I2(), I2());
  CHECK((k - ComplexMatrix::Identity(4, 4)).norm() == doctest::Approx(0.0));
}

TEST_CASE("kron X X has eigenvalues -1 -1 1 1") {
  const RealVector e = sorted_eigs(kron(pauli::x(), pauli::x()));
  CHECK(e(0) == doctest::Approx(-1.0));
  CHECK(e(1) == doctest::Approx(-1.0));
  CHECK(e(2) == doctest::Approx(1.0));
  CHECK(e(3) == doctest::Approx(1.0));
}

TEST_CASE("kron Z I is diag(1,1,-1,-1)") {
  const ComplexMatrix k = kron(pauli::z(), I2());
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1.0, 1.0, -1.0, -1.0;
  CHECK((k - expected).norm() == 0.0);
}

TEST_CASE("kron is associative on integer matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_integer_matrix(2, 3, rng);
    const auto b = testing::random_integer_matrix(3, 2, rng);
    const auto c = testing::random_integer_matrix(2, 2, rng);
    CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).norm() == 0.0);
  }
}

TEST_CASE("kron mixed product rule") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = testing::random_matrix(2, rng);
    const auto b = testing::random_matrix(4, rng);
    const auto c = testing::random_matrix(2, rng);
    const auto d = testing::random_matrix(4, rng);
    CHECK((kron(a, b) * kron(c, d) - kron(a * c, b * d)).norm() < 1e-10);
  }
}

TEST_CASE("kron beyond the size cap throws") {
  const ComplexMatrix big = ComplexMatrix::Identity(1L << 8, 1L << 8);
  const ComplexMatrix medium = ComplexMatrix::Identity(1L << 7, 1L << 7);
  CHECK_THROWS_AS(kron(big, medium), SizeError);
}

TEST_CASE("embed_site places the operator at the requested bit") {
  CHECK((embed_site(pauli::x(), 1, 2) - kron(pauli::x(), I2())).norm() == 0.0);
  CHECK((embed_site(pauli::x(), 2, 2) - kron(I2(), pauli::x())).norm() == 0.0);
  const ComplexMatrix z2of3 = kron(I2(), kron(pauli::z(), I2()));
  CHECK((embed_site(pauli::z(), 2, 3) - z2of3).norm() == 0.0);
  CHECK_THROWS_AS(embed_site(pauli::z(), 0, 3), IndexError);
  CHECK_THROWS_AS(embed_site(pauli::z(), 4, 3), IndexError);
}

TEST_CASE("embed_operator on non-adjacent and reversed sites") {
  const ComplexMatrix xz = kron(pauli::x(), pauli::z());
  const std::array<int, 2> s13{1, 3};
  const ComplexMatrix expected13 = kron(pauli::x(), kron(I2(), pauli::z()));
  CHECK((embed_operator(xz, s13, 3) - expected13).norm() == 0.0);
  const std::array<int, 2> s31{3, 1};
  const ComplexMatrix expected31 = kron(pauli::z(), kron(I2(), pauli::x()));
  CHECK((embed_operator(xz, s31, 3) - expected31).norm() == 0.0);

  ComplexMatrix acc = ComplexMatrix::Zero(8, 8);
  add_embedded(acc, xz, s13, 3, 2.0);
  CHECK((acc - 2.0 * expected13).norm() == 0.0);
}

TEST_CASE("partial trace of a product state") {
  std::mt19937_64 rng(21);
  const auto a = testing::random_density(2, rng);
  const auto b = testing::random_density(4, rng);
  const auto rho = DensityState::from_matrix(kron(a, b));
  const std::array<int, 1> k1{1};
  const std::array<int, 2> k23{2, 3};
  CHECK((partial_trace(rho, k1).matrix() - a).norm() < 1e-12);
  CHECK((partial_trace(rho, k23).matrix() - b).norm() < 1e-12);
}

TEST_CASE("partial trace of the singlet is maximally mixed") {
  const auto rho = DensityState::from_pure(singlet_vector());
  const std::array<int, 1> k1{1};
  CHECK((partial_trace(rho, k1).matrix() - 0.5 * I2()).norm() < 1e-14);
}

TEST_CASE("partial trace matches an index-loop reference") {
  std::mt19937_64 rng(22);
  const std::vector<std::vector<int>> keeps{{1}, {3}, {2, 4}, {4, 2}, {1, 3, 4}, {1, 2, 3, 4}};
  for (int trial = 0; trial < 5; ++trial) {
    const auto m = testing::random_density(16, rng);
    for (const auto& keep : keeps) {
      const auto got = partial_trace(m, keep, 4);
      CHECK((got - naive_partial_trace(m, keep, 4)).norm() < 1e-12);
    }
  }
}

TEST_CASE("partial trace preserves trace and hermiticity") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = DensityState::from_matrix(testing::random_density(32, rng));
    const std::array<int, 2> keep{2, 5};
    const auto red = partial_trace(rho, keep);
    CHECK(red.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hermiticity_residual(red.matrix()) < 1e-14);
  }
}

TEST_CASE("partial trace with no kept sites throws") {
  const auto rho = DensityState::from_pure(singlet_vector());
  CHECK_THROWS_AS(partial_trace(rho, std::span<const int>{}), ArgumentError);
}

TEST_CASE("reduce_pure agrees with partial trace of the projector") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 5; ++trial) {
    const auto psi = testing::random_state(32, rng);
    const std::array<int, 2> keep{4, 1};
    const ComplexMatrix proj = psi * psi.adjoint();
    CHECK((reduce_pure(psi, keep, 5) - partial_trace(proj, keep, 5)).norm() < 1e-12);
  }
}

TEST_CASE("thermal pair marginal from Pauli correlators") {
  const int n = 6;
  const auto rho = gibbs_state(build_hamiltonian(ChainModel::heisenberg(n)), 1.0);
  const std::array<int, 2> keep{1, 2};
  const auto red = partial_trace(rho, keep);
  const std::array<ComplexMatrix, 4> p{pauli::identity(), pauli::x(), pauli::y(), pauli::z()};
  ComplexMatrix rebuilt = ComplexMatrix::Zero(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const ComplexMatrix pab = kron(p[a], p[b]);
      const double coeff = rho.expectation(embed_operator(pab, keep, n));
      rebuilt += coeff * pab / 4.0;
    }
  }
  CHECK((red.matrix() - rebuilt).norm() < 1e-10);
}

TEST_CASE("partial transpose of the singlet has eigenvalue -1/2") {
  const auto rho = DensityState::from_pure(singlet_vector());
  const std::array<int, 1> s{2};
  const RealVector e = sorted_eigs(partial_transpose(rho, s));
  CHECK(e(0) == doctest::Approx(-0.5));
}

TEST_CASE("partial transpose of a product state stays positive") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = DensityState::from_matrix(
        kron(testing::random_density(2, rng), testing::random_density(2, rng)));
    const std::array<int, 1> s{1};
    CHECK(sorted_eigs(partial_transpose(rho, s))(0) > -1e-12);
  }
}

TEST_CASE("partial transpose of the shifted mixture has a negative eigenvalue") {
  const auto mixed = make_state(StateLabel::shifted_mixture, 4).state;
  const std::array<int, 2> s{1, 2};
  CHECK(sorted_eigs(partial_transpose(mixed, s))(0) < -1e-3);
}

TEST_CASE("partial transpose is an involution that keeps trace and hermiticity") {
  std::mt19937_64 rng(32);
  const std::vector<std::vector<int>> subsets{{1}, {2, 3}, {3, 1}};
  for (int trial = 0; trial < 5; ++trial) {
    const auto m = testing::random_density(8, rng);
    for (const auto& s : subsets) {
      const auto pt = partial_transpose(m, s, 3);
      CHECK((partial_transpose(pt, s, 3) - m).norm() < 1e-14);
      CHECK(std::abs(pt.trace() - m.trace()) < 1e-14);
      CHECK(hermiticity_residual(pt) < 1e-14);
    }
  }
}

TEST_CASE("eigh of Pauli Z and X") {
  const auto ez = eigh(pauli::z());
  CHECK(ez.values(0) == doctest::Approx(-1.0));
  CHECK(ez.values(1) == doctest::Approx(1.0));
  const auto ex = eigh(pauli::x());
  const ComplexVector v = ex.vectors.col(0);
  CHECK((pauli::x() * v + v).norm() < 1e-14);
}

TEST_CASE("eigh rejects non-hermitian input") {
  ComplexMatrix m = pauli::x();
  m(0, 1) = 2.0;
  CHECK_THROWS_AS(eigh(m), ValidationError);
}

TEST_CASE("eigh spectrum sums to the trace and vectors are orthonormal") {
  std::mt19937_64 rng(41);
  for (long dim : {2L, 5L, 16L, 33L}) {
    const auto h = testing::random_hermitian(dim, rng);
    const auto es = eigh(h);
    CHECK(es.values.sum() == doctest::Approx(h.trace().real()).epsilon(1e-12));
    const ComplexMatrix gram = es.vectors.adjoint() * es.vectors;
    CHECK((gram - ComplexMatrix::Identity(dim, dim)).norm() < 1e-12);
    const ComplexMatrix back = es.vectors * es.values.asDiagonal() * es.vectors.adjoint();
    CHECK((back - h).norm() < 1e-10 * (1.0 + h.norm()));
    for (long i = 1; i < dim; ++i) CHECK(es.values(i) >= es.values(i - 1));
    const auto vo = eigh(h, Spectrum::values_only);
    CHECK(vo.vectors.size() == 0);
    CHECK((vo.values - es.values).norm() < 1e-10);
  }
}

TEST_CASE("shift operator") {
  const ComplexMatrix swap = shift_operator(2);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = expected(1, 2) = expected(2, 1) = 1.0;
  CHECK((swap - expected).norm() == 0.0);

  for (int n : {3, 4, 6}) {
    const ComplexMatrix s = shift_operator(n);
    const long d = 1L << n;
    ComplexMatrix power = ComplexMatrix::Identity(d, d);
    for (int k = 0; k < n; ++k) power = s * power;
    CHECK((power - ComplexMatrix::Identity(d, d)).norm() == 0.0);
    CHECK((s * s.adjoint() - ComplexMatrix::Identity(d, d)).norm() == 0.0);
  }
}

TEST_CASE("shift moves site k to site k+1") {
  const int n = 4;
  const ComplexMatrix s = shift_operator(n);
  for (int k = 1; k <= n; ++k) {
    const ComplexMatrix moved = s * embed_site(pauli::x(), k, n) * s.adjoint();
    CHECK((moved - embed_site(pauli::x(), k % n + 1, n)).norm() == 0.0);
  }
}

TEST_CASE("density state validation order and messages") {
  ComplexMatrix bad = ComplexMatrix::Identity(3, 3) / 3.0;
  try {
    (void)DensityState::from_matrix(bad);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.check() == "dimension");
  }
  ComplexMatrix nonherm = ComplexMatrix::Identity(2, 2) / 2.0;
  nonherm(0, 1) = 0.1;
  try {
    (void)DensityState::from_matrix(nonherm);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.check() == "hermitian");
  }
  try {
    (void)DensityState::from_matrix(ComplexMatrix::Identity(2, 2));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.check() == "trace");
  }
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  try {
    (void)DensityState::from_matrix(neg);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.check() == "psd");
  }
}

TEST_CASE("random density matrices validate") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const long dim = 1L << (1 + trial % 4);
    CHECK_NOTHROW((void)DensityState::from_matrix(testing::random_density(dim, rng)));
  }
}

TEST_CASE("expectation matches trace of the product") {
  std::mt19937_64 rng(52);
  const auto rho = DensityState::from_matrix(testing::random_density(8, rng));
  const auto h = testing::random_hermitian(8, rng);
  CHECK(rho.expectation(h) == doctest::Approx((rho.matrix() * h).trace().real()));
}

}  // TEST_SUITE
