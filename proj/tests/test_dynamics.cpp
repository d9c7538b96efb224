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

#include <cmath>

#include "chancomp/diamond.hpp"
#include "chancomp/dynamics.hpp"

using namespace chancomp;

namespace {

SemigroupFamily pauli_mixture() {
  ResourceSet r;
  r.kind = ResourceSet::Kind::Discrete;
  r.dim = 2;
  r.elements = {pauli_x(), pauli_y(), pauli_z()};
  r = symmetrize(r);
  std::vector<double> mu(r.elements.size(), 1.0 / double(r.elements.size()));
  return make_semigroup(SemigroupFamily::Kind::Discrete, r, mu);
}

}  // namespace

TEST_CASE("uniform Pauli mixture interpolates identity and depolarizing") {
  SemigroupFamily f = pauli_mixture();
  QuantumChannel dep =
      unitary_mixture({identity(2), pauli_x(), pauli_y(), pauli_z()}, {0.25, 0.25, 0.25, 0.25});
  for (double t : {0.3, 1.0, 2.5}) {
    double w = std::exp(-t);
    ComplexMatrix expect = w * ComplexMatrix::Identity(4, 4) + (1.0 - w) * dep.superop();
    CHECK((evolve(f, t).superop() - expect).norm() <= 1e-9);
  }
  CHECK((evolve(f, 0.0).superop() - ComplexMatrix::Identity(4, 4)).norm() <= 1e-12);
}

TEST_CASE("make_semigroup validates inputs") {
  ResourceSet r;
  r.kind = ResourceSet::Kind::Discrete;
  r.dim = 2;
  r.elements = {pauli_x(), pauli_y(), pauli_z()};
  r = symmetrize(r);
  // one probability per element is required
  CHECK_THROWS_AS(make_semigroup(SemigroupFamily::Kind::Discrete, r, {0.5, 0.5}), InputError);
  // kind / resource-kind mismatch
  CHECK_THROWS_AS(make_semigroup(SemigroupFamily::Kind::Lindblad, r), InputError);

  SemigroupFamily f = pauli_mixture();
  CHECK_THROWS_AS(evolve(f, -0.5), InputError);
  CHECK_THROWS_AS(return_time(f, 0.0), InputError);
  CHECK_THROWS_AS(return_time(f, 2.5), InputError);
}

TEST_CASE("return time of the Pauli mixture is ln 3") {
  SemigroupFamily f = pauli_mixture();
  double t = return_time(f, 0.5);
  CHECK(t == doctest::Approx(std::log(3.0)).epsilon(1e-3));
  // the upper-bound norm variant returns a time at least as large as needed
  double t2 = return_time(f, 0.5, ReturnNorm::InfInfUpper);
  CHECK(t2 > 0.0);
}

TEST_CASE("generator annihilates the fixed-point algebra") {
  SemigroupFamily f = pauli_mixture();
  for (const auto& b : f.structure.commutant_basis)
    CHECK((f.generator * vec(b)).norm() <= 1e-8);
}

TEST_CASE("lindblad dephasing semigroup") {
  ResourceSet cont;
  cont.kind = ResourceSet::Kind::Continuous;
  cont.dim = 2;
  cont.elements = {pauli_z()};
  SemigroupFamily f = make_semigroup(SemigroupFamily::Kind::Lindblad, cont);
  // L(x) = ZxZ - x halves nothing on the diagonal and decays coherences at
  // rate 2
  ComplexMatrix rho(2, 2);
  rho << 0.5, 0.5, 0.5, 0.5;
  ComplexMatrix out = evolve(f, 1.0).apply(rho);
  CHECK(std::abs(out(0, 1)) == doctest::Approx(0.5 * std::exp(-2.0)).epsilon(1e-8));
  CHECK(out(0, 0).real() == doctest::Approx(0.5));
  // long times converge to the conditional expectation
  CHECK(diamond_distance(evolve(f, 10.0), f.structure.efix()).value <= 1e-6);
  double t = return_time(f, 0.5);
  CHECK(t > 0.0);
  CHECK(diamond_distance(evolve(f, t), f.structure.efix()).value <= 0.5 + 1e-6);
}

TEST_CASE("trajectory: linear certificate and plateau") {
  SemigroupFamily f = pauli_mixture();
  SolveOptions o;
  o.restarts = 2;
  o.ascent_iters = 40;
  TrajectoryRecord rec = complexity_trajectory(f, {0.1, 0.5, 1.5, 4.0}, o);
  REQUIRE(rec.points.size() == 4);
  CHECK(rec.return_time_half == doctest::Approx(std::log(3.0)).epsilon(1e-3));
  for (const auto& p : rec.points) {
    CHECK(p.estimate.upper <= p.time + 1e-9);  // the t-linear certificate binds early
    CHECK(p.estimate.lower <= p.estimate.upper + 1e-9);
    CHECK(p.regime == (p.time < rec.return_time_half ? "linear" : "plateau"));
  }
  // monotone lower bounds along the grid (shared plateau witness)
  CHECK(rec.points[1].estimate.lower >= rec.points[0].estimate.lower - 1e-9);
  // the plateau interval is the expected length of the structure
  CHECK(rec.plateau.upper == doctest::Approx(0.75));
}

TEST_CASE("trajectory input validation") {
  SemigroupFamily f = pauli_mixture();
  CHECK_THROWS_AS(complexity_trajectory(f, {}), InputError);
  CHECK_THROWS_AS(complexity_trajectory(f, {0.5, 0.5}), InputError);
  CHECK_THROWS_AS(complexity_trajectory(f, {-0.1, 0.5}), InputError);
}

TEST_CASE("default grid is strictly increasing with 25 points") {
  SemigroupFamily f = pauli_mixture();
  std::vector<double> grid = default_time_grid(f);
  REQUIRE(grid.size() == 25);
  for (size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
}
