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

#include "chancomp/estimate.hpp"

using namespace chancomp;

namespace {

ResourceSet pauli_set() {
  ResourceSet r;
  r.kind = ResourceSet::Kind::Discrete;
  r.dim = 2;
  r.elements = {pauli_x(), pauli_y(), pauli_z()};
  return symmetrize(r);
}

QuantumChannel depolarizing_qubit() {
  return unitary_mixture({identity(2), pauli_x(), pauli_y(), pauli_z()},
                         {0.25, 0.25, 0.25, 0.25});
}

}  // namespace

TEST_CASE("identity channel has complexity zero") {
  LipschitzStructure l = build_structure(pauli_set());
  ComplexityEstimate e = complexity_estimate(QuantumChannel::identity_channel(2), l);
  CHECK(e.lower == doctest::Approx(0.0));
  CHECK(e.upper <= 1e-9);
}

TEST_CASE("unitary conjugation by X has complexity exactly one") {
  LipschitzStructure l = build_structure(pauli_set());
  ComplexityEstimate e = complexity_estimate(unitary_mixture({pauli_x()}, {1.0}), l);
  CHECK(e.lower == doctest::Approx(1.0).epsilon(1e-6));
  // the certificate here is EL x diamond = 0.75 * 2
  CHECK(e.upper <= 1.5 + 1e-6);
  CHECK(e.upper >= e.lower);

  // against the resource {X} alone the interval is exactly [1, 1]
  ResourceSet rx;
  rx.kind = ResourceSet::Kind::Discrete;
  rx.dim = 2;
  rx.elements = {pauli_x()};
  ComplexityEstimate ex =
      complexity_estimate(unitary_mixture({pauli_x()}, {1.0}), build_structure(symmetrize(rx)));
  CHECK(ex.lower == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(ex.upper == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("expected length of the Pauli structure") {
  LipschitzStructure l = build_structure(pauli_set());
  ComplexityEstimate e = expected_length(l);
  // the witness (X+Y+Z)/(2 sqrt 2) realizes sqrt(3)/(2 sqrt 2)
  CHECK(e.lower >= std::sqrt(3.0) / (2.0 * std::sqrt(2.0)) - 1e-6);
  CHECK(e.upper == doctest::Approx(0.75));  // mean word length certificate
  CHECK(e.lower <= e.upper);
  bool has_wl = false;
  for (const auto& c : e.certificates) has_wl |= (c.name == "word_length_mean");
  CHECK(has_wl);
}

TEST_CASE("witness is a certified feasible point") {
  LipschitzStructure l = build_structure(pauli_set());
  ComplexityEstimate e = expected_length(l);
  REQUIRE(e.witness.size() > 0);
  CHECK((e.witness - e.witness.adjoint()).norm() <= 1e-12);  // self-adjoint
  CHECK(lipschitz_norm(e.witness, l) <= 1.0 + 1e-9);
  CHECK((mean_zero_project(e.witness, l) - e.witness).norm() <= 1e-9);
  // objective value at the witness reproduces the lower bound
  CHECK(operator_norm(e.witness) == doctest::Approx(e.lower).epsilon(1e-9));
}

TEST_CASE("depolarizing channel equals the conditional expectation here") {
  LipschitzStructure l = build_structure(pauli_set());
  ComplexityEstimate dep = complexity_estimate(depolarizing_qubit(), l);
  ComplexityEstimate el = expected_length(l);
  CHECK(dep.lower == doctest::Approx(el.lower).epsilon(1e-6));
  CHECK(dep.upper >= dep.lower);
}

TEST_CASE("trivial structures short-circuit") {
  ResourceSet r;
  r.kind = ResourceSet::Kind::Discrete;
  r.dim = 2;
  r.elements = {identity(2)};
  LipschitzStructure l = build_structure(symmetrize(r));
  ComplexityEstimate e = complexity_estimate(depolarizing_qubit(), l);
  CHECK(e.lower == 0.0);
  CHECK(e.upper == 0.0);
}

TEST_CASE("cb complexity is at least the plain complexity and monotone") {
  LipschitzStructure l = build_structure(pauli_set());
  SolveOptions o;
  o.restarts = 4;
  ComplexityEstimate plain = complexity_estimate(depolarizing_qubit(), l, o);
  ComplexityEstimate cb = cb_complexity_estimate(depolarizing_qubit(), l, o);
  CHECK(cb.lower >= plain.lower - 1e-6);
  // ancilla of dimension d reaches the full 3/4 here
  CHECK(cb.lower >= 0.75 - 1e-3);
  CHECK(cb.upper <= 1.125 + 1e-6);  // mean word length times diamond distance
  CHECK(cb.lower <= cb.upper);
}

TEST_CASE("interval subadditivity under composition") {
  LipschitzStructure l = build_structure(pauli_set());
  Rng rng(37);
  SolveOptions o;
  o.restarts = 3;
  for (int k = 0; k < 3; ++k) {
    QuantumChannel a = QuantumChannel::from_kraus({haar_unitary(2, rng)});
    QuantumChannel b = QuantumChannel::from_kraus({haar_unitary(2, rng)});
    ComplexityEstimate ea = complexity_estimate(a, l, o);
    ComplexityEstimate eb = complexity_estimate(b, l, o);
    ComplexityEstimate eab = complexity_estimate(combine(CombineKind::Compose, {a, b}), l, o);
    CHECK(eab.lower <= ea.upper + eb.upper + 1e-6);
  }
}

TEST_CASE("interval convexity under mixing") {
  LipschitzStructure l = build_structure(pauli_set());
  Rng rng(41);
  SolveOptions o;
  o.restarts = 3;
  QuantumChannel a = QuantumChannel::from_kraus({haar_unitary(2, rng)});
  QuantumChannel b = QuantumChannel::from_kraus({haar_unitary(2, rng)});
  ComplexityEstimate ea = complexity_estimate(a, l, o);
  ComplexityEstimate eb = complexity_estimate(b, l, o);
  ComplexityEstimate mix =
      complexity_estimate(combine(CombineKind::Mix, {a, b}, {0.3, 0.7}), l, o);
  CHECK(mix.lower <= 0.3 * ea.upper + 0.7 * eb.upper + 1e-6);
}

TEST_CASE("inf-to-inf norm of the depolarizing defect") {
  QuantumChannel dep = depolarizing_qubit();
  ComplexMatrix diff =
      dep.superop().adjoint() - ComplexMatrix::Identity(4, 4);  // observable side
  IntervalResult r = inf_to_inf_norm(diff);
  // (E - id)(Z) = -Z has norm one; the identity contributes nothing
  CHECK(r.lower >= 1.0 - 1e-9);
  CHECK(r.upper >= r.lower - 1e-9);
}

TEST_CASE("wasserstein norm values on the qubit") {
  LipschitzStructure l = build_structure(pauli_set());
  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  rho(0, 0) = 1.0;  // |0><0|
  IntervalResult w = wasserstein_norm(rho, l);
  CHECK(w.lower == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(w.upper == doctest::Approx(std::sqrt(3.0) / (4.0 * std::sqrt(2.0))).epsilon(1e-6));
  CHECK(w.lower <= w.upper + 1e-9);

  IntervalResult zero = wasserstein_norm(ComplexMatrix(0.5 * identity(2)), l);
  CHECK(zero.lower == doctest::Approx(0.0));
  CHECK(zero.upper == doctest::Approx(0.0));
}

TEST_CASE("subalgebra index examples") {
  // M_2 over the scalars: index 2
  IndexResult full = subalgebra_index(build_structure(pauli_set()));
  CHECK(full.lower == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(full.upper == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(full.upper_certified);

  // M_2 over the diagonal subalgebra: index 2
  ResourceSet rz;
  rz.kind = ResourceSet::Kind::Discrete;
  rz.dim = 2;
  rz.elements = {pauli_z()};
  IndexResult diag = subalgebra_index(build_structure(symmetrize(rz)));
  CHECK(diag.lower == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(diag.upper_certified);

  // M_2 over itself: index 1
  ResourceSet triv;
  triv.kind = ResourceSet::Kind::Discrete;
  triv.dim = 2;
  triv.elements = {identity(2)};
  IndexResult self = subalgebra_index(build_structure(symmetrize(triv)));
  CHECK(self.lower == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(self.upper_certified);
}

TEST_CASE("entropy transport inequality on a dephasing structure") {
  ResourceSet cont;
  cont.kind = ResourceSet::Kind::Continuous;
  cont.dim = 2;
  cont.elements = {pauli_z()};
  LipschitzStructure l = build_structure(cont);
  ComplexMatrix rho(2, 2);
  rho << 0.7, 0.2, 0.2, 0.3;
  EntropyTransportReport rep = entropy_transport_check(rho, l, 1.0);
  CHECK(rep.relative_entropy > 0.0);
  CHECK(rep.holds);
  CHECK(rep.wasserstein_lower <= rep.wasserstein_upper + 1e-9);

  // discrete structures are rejected: the gradient form needs jumps
  CHECK_THROWS_AS(entropy_transport_check(rho, build_structure(pauli_set()), 1.0), InputError);
}

TEST_CASE("deterministic across repeated runs") {
  LipschitzStructure l = build_structure(pauli_set());
  SolveOptions o;
  o.seed = 99;
  ComplexityEstimate a = expected_length(l, o);
  ComplexityEstimate b = expected_length(l, o);
  CHECK(a.lower == b.lower);
  CHECK(a.upper == b.upper);
  CHECK((a.witness - b.witness).norm() == 0.0);
}
