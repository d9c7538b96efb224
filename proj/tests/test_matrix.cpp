// Copyright 2026 chancomp contributors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chancomp/matrix.hpp"

using namespace chancomp;

TEST_CASE("operator norm is unitarily invariant") {
  Rng rng(11);
  for (int k = 0; k < 10; ++k) {
    ComplexMatrix m = ginibre(4, 4, rng);
    ComplexMatrix u = haar_unitary(4, rng);
    ComplexMatrix v = haar_unitary(4, rng);
    CHECK(operator_norm(u * m * v) == doctest::Approx(operator_norm(m)).epsilon(1e-9));
  }
}

TEST_CASE("operator norm of a projector is one") {
  ComplexMatrix p = ComplexMatrix::Zero(3, 3);
  p(0, 0) = 1.0;
  CHECK(operator_norm(p) == doctest::Approx(1.0));
  CHECK(operator_norm(ComplexMatrix::Zero(3, 3)) == doctest::Approx(0.0));
}

TEST_CASE("matrix_exp inverts under negation") {
  Rng rng(5);
  for (int k = 0; k < 8; ++k) {
    ComplexMatrix m = ginibre(4, 4, rng);
    m *= 5.0 / std::max(operator_norm(m), 1e-12);
    ComplexMatrix prod = matrix_exp(m) * matrix_exp(ComplexMatrix(-m));
    CHECK((prod - identity(4)).norm() <= 1e-8);
  }
}

TEST_CASE("matrix_exp of i*pi*Z is -I") {
  Complex ipi(0.0, std::acos(-1.0));
  ComplexMatrix e = matrix_exp(ComplexMatrix(ipi * pauli_z()));
  CHECK((e + identity(2)).norm() <= 1e-12);
}

TEST_CASE("partial trace is trace preserving and matches hand values") {
  SubsystemShape shape{{2, 2}};
  ComplexMatrix zz = kron(pauli_z(), pauli_z());

  ComplexMatrix first = partial_trace(zz, shape, {0});
  CHECK(first.norm() <= 1e-14);  // tr(Z) = 0 on the traced leg

  Rng rng(3);
  ComplexMatrix m = ginibre(4, 4, rng);
  ComplexMatrix r0 = partial_trace(m, shape, {0});
  CHECK(std::abs(r0.trace() - m.trace()) <= 1e-12);

  // linearity
  ComplexMatrix m2 = ginibre(4, 4, rng);
  ComplexMatrix lin = partial_trace(ComplexMatrix(2.0 * m - 0.5 * m2), shape, {1});
  ComplexMatrix expect =
      2.0 * partial_trace(m, shape, {1}) - 0.5 * partial_trace(m2, shape, {1});
  CHECK((lin - expect).norm() <= 1e-12);
}

TEST_CASE("partial trace of a product state factorizes") {
  Rng rng(9);
  ComplexMatrix a = ginibre(2, 2, rng);
  ComplexMatrix b = ginibre(3, 3, rng);
  SubsystemShape shape{{2, 3}};
  ComplexMatrix keep_a = partial_trace(kron(a, b), shape, {0});
  CHECK((keep_a - b.trace() * a).norm() <= 1e-12);
  ComplexMatrix keep_b = partial_trace(kron(a, b), shape, {1});
  CHECK((keep_b - a.trace() * b).norm() <= 1e-12);
}

TEST_CASE("permute_factors swaps kron order") {
  Rng rng(13);
  ComplexMatrix a = ginibre(2, 2, rng);
  ComplexMatrix b = ginibre(3, 3, rng);
  ComplexMatrix swapped = permute_factors(kron(a, b), SubsystemShape{{2, 3}}, {1, 0});
  CHECK((swapped - kron(b, a)).norm() <= 1e-12);
}

TEST_CASE("nullspace_basis edge cases") {
  CHECK(nullspace_basis(identity(4), 1e-9).empty());

  auto full = nullspace_basis(ComplexMatrix::Zero(3, 3), 1e-9);
  CHECK(full.size() == 3);

  // commutator with sigma_z on M_2: kernel = diagonal matrices
  ComplexMatrix z = pauli_z();
  ComplexMatrix ad = kron(identity(2), z) - kron(z.transpose(), identity(2));
  auto basis = nullspace_basis(ad, 1e-9);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    ComplexMatrix m = unvec(v, 2, 2);
    CHECK(std::abs(m(0, 1)) <= 1e-12);
    CHECK(std::abs(m(1, 0)) <= 1e-12);
  }
  // orthonormality
  CHECK(std::abs(basis[0].dot(basis[1])) <= 1e-10);
  CHECK(basis[0].norm() == doctest::Approx(1.0));
}

TEST_CASE("nullspace vectors satisfy the residual bound") {
  Rng rng(21);
  ComplexMatrix a = ginibre(6, 6, rng);
  // rank-4 positive operator: its kernel is 2-dimensional
  ComplexMatrix p = a.leftCols(4) * a.leftCols(4).adjoint();
  double tol = default_rank_tol(p);
  auto basis = nullspace_basis(p, tol);
  for (const auto& v : basis) CHECK((p * v).norm() <= 10 * tol * operator_norm(p));
}

TEST_CASE("vec and unvec are mutually inverse with column stacking") {
  Rng rng(7);
  ComplexMatrix m = ginibre(3, 2, rng);
  CHECK((unvec(vec(m), 3, 2) - m).norm() == doctest::Approx(0.0));
  // vec(A X B) = (B^T kron A) vec(X)
  ComplexMatrix a = ginibre(3, 3, rng), x = ginibre(3, 3, rng), b = ginibre(3, 3, rng);
  ComplexVector lhs = vec(ComplexMatrix(a * x * b));
  ComplexVector rhs = kron(b.transpose(), a) * vec(x);
  CHECK((lhs - rhs).norm() <= 1e-12);
}

TEST_CASE("haar_unitary is unitary and seed deterministic") {
  Rng r1(42), r2(42);
  ComplexMatrix u = haar_unitary(5, r1);
  CHECK((u.adjoint() * u - identity(5)).norm() <= 1e-12);
  CHECK((haar_unitary(5, r2) - u).norm() == doctest::Approx(0.0));
}

TEST_CASE("embed_factor places operators at the right slot") {
  std::vector<int> dims{2, 2, 2};
  ComplexMatrix mid = embed_factor(pauli_x(), dims, 1);
  CHECK((mid - kron(kron(identity(2), pauli_x()), identity(2))).norm() <= 1e-14);
}

TEST_CASE("check_finite rejects NaN") {
  ComplexMatrix m = identity(2);
  m(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(check_finite(m), InputError);
}
