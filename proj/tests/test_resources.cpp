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

#include "chancomp/resources.hpp"

using namespace chancomp;

namespace {

ResourceSet pauli_set() {
  ResourceSet r;
  r.kind = ResourceSet::Kind::Discrete;
  r.dim = 2;
  r.elements = {pauli_x(), pauli_y(), pauli_z()};
  return symmetrize(r);
}

}  // namespace

TEST_CASE("symmetrize adjoins the identity and adjoints") {
  ResourceSet r;
  r.kind = ResourceSet::Kind::Discrete;
  r.dim = 2;
  ComplexMatrix s(2, 2);  // a non-self-adjoint unitary
  s << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 1);
  r.elements = {s};
  ResourceSet sym = symmetrize(r);
  CHECK(sym.symmetrized);
  bool has_id = false, has_adj = false;
  for (const auto& e : sym.elements) {
    if ((e - identity(2)).norm() <= 1e-12) has_id = true;
    if ((e - s.adjoint()).norm() <= 1e-12) has_adj = true;
  }
  CHECK(has_id);
  CHECK(has_adj);
}

TEST_CASE("commutant of the full Pauli set is the scalars") {
  LipschitzStructure l = build_structure(pauli_set());
  CHECK(l.commutant_basis.size() == 1);
  CHECK(l.mean_zero_dim() == 3);
  CHECK(l.active_count == 3);
  CHECK(l.lambda_gap == doctest::Approx(8.0));
  // the commutant basis element is I/sqrt(2)
  CHECK((l.commutant_basis[0] - identity(2) / std::sqrt(2.0)).norm() <= 1e-9);
}

TEST_CASE("commutant of a single sigma_z resource is the diagonal algebra") {
  ResourceSet r;
  r.kind = ResourceSet::Kind::Discrete;
  r.dim = 2;
  r.elements = {pauli_z()};
  LipschitzStructure l = build_structure(symmetrize(r));
  CHECK(l.commutant_basis.size() == 2);
  CHECK(l.mean_zero_dim() == 2);
}

TEST_CASE("lipschitz norm values") {
  LipschitzStructure l = build_structure(pauli_set());
  // [Z, X] = 2iY has norm 2; the sup over the set is attained there
  CHECK(lipschitz_norm(pauli_x(), l) == doctest::Approx(2.0));
  CHECK(lipschitz_norm(identity(2), l) == doctest::Approx(0.0));
  // seminorm: vanishes exactly on the commutant, scales linearly
  Rng rng(19);
  ComplexMatrix x = ginibre_hermitian(2, rng);
  CHECK(lipschitz_norm(ComplexMatrix(2.5 * x), l) ==
        doctest::Approx(2.5 * lipschitz_norm(x, l)).epsilon(1e-9));
}

TEST_CASE("L2 variant dominates scaled commutator norms") {
  LipschitzStructure l = build_structure(pauli_set());
  Rng rng(23);
  for (int k = 0; k < 5; ++k) {
    ComplexMatrix x = ginibre(2, 2, rng);
    CHECK(lipschitz_norm(x, l, NormVariant::L2) >= lipschitz_norm(x, l) - 1e-9);
  }
}

TEST_CASE("conditional expectation is a CPTP idempotent projection") {
  LipschitzStructure l = build_structure(pauli_set());
  const QuantumChannel& e = l.efix();
  CHECK((e.superop() * e.superop() - e.superop()).norm() <= 1e-9);
  Rng rng(25);
  ComplexMatrix x = ginibre(2, 2, rng);
  // projection onto scalars: E(x) = tr(x) I / 2
  CHECK((e.apply(x) - 0.5 * x.trace() * identity(2)).norm() <= 1e-9);
}

TEST_CASE("mean_zero_project is HS-orthogonal to the commutant") {
  ResourceSet r;
  r.kind = ResourceSet::Kind::Discrete;
  r.dim = 2;
  r.elements = {pauli_z()};
  LipschitzStructure l = build_structure(symmetrize(r));
  Rng rng(27);
  ComplexMatrix x = ginibre(2, 2, rng);
  ComplexMatrix m = mean_zero_project(x, l);
  for (const auto& c : l.commutant_basis) CHECK(std::abs(hs_inner(c, m)) <= 1e-10);
  // idempotent
  CHECK((mean_zero_project(m, l) - m).norm() <= 1e-10);
}

TEST_CASE("join and amplify bookkeeping") {
  ResourceSet r = pauli_set();
  ResourceSet joint = join_resources({r, r});
  CHECK(joint.dim == 4);
  CHECK(joint.elements.size() == 2 * r.elements.size());
  // first part acts on the slow factor
  CHECK((joint.elements[0] - kron(r.elements[0], identity(2))).norm() <= 1e-12);

  ResourceSet amp = amplify_resource(r, 3);
  CHECK(amp.dim == 6);
  CHECK((amp.elements[0] - kron(identity(3), r.elements[0])).norm() <= 1e-12);
  // the amplified commutant grows with the ancilla algebra
  LipschitzStructure la = build_structure(amp);
  CHECK(la.commutant_basis.size() == 9);
}

TEST_CASE("validation rejects malformed sets") {
  ResourceSet bad;
  bad.kind = ResourceSet::Kind::Discrete;
  bad.dim = 2;
  bad.elements = {ComplexMatrix(2.0 * identity(2))};  // not unitary
  CHECK_THROWS_AS(build_structure(symmetrize(bad)), InputError);

  ResourceSet skew;
  skew.kind = ResourceSet::Kind::Continuous;
  skew.dim = 2;
  ComplexMatrix nh(2, 2);
  nh << Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0);
  skew.elements = {nh};  // not self-adjoint
  CHECK_THROWS_AS(skew.validate(), InputError);

  // gradient variant requires continuous resources
  LipschitzStructure l = build_structure(pauli_set());
  CHECK_THROWS_AS(lipschitz_norm(pauli_x(), l, NormVariant::Gradient), InputError);
}
