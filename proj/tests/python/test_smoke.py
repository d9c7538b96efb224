# Copyright 2026 chancomp contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import chancomp as cc

X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def pauli_structure():
    r = cc.symmetrize(cc.ResourceSet(cc.ResourceSet.Kind.Discrete, 2, [X, Y, Z]))
    return cc.build_structure(r)


def test_identity_channel_has_zero_complexity():
    est = cc.complexity_estimate(cc.QuantumChannel.identity(2), pauli_structure())
    assert est.lower == 0.0
    assert est.upper <= 1e-9


def test_depolarizing_diamond_distance():
    dep = cc.unitary_mixture([I2, X, Y, Z], [0.25] * 4)
    r = cc.diamond_distance(dep, cc.QuantumChannel.identity(2))
    assert abs(r.value - 1.5) < 1e-6
    assert r.lower <= r.value <= r.upper


def test_expected_length_interval():
    est = cc.expected_length(pauli_structure())
    assert 0.5 <= est.lower <= est.upper <= 0.75 + 1e-9
    names = {c.name for c in est.certificates}
    assert "word_length_mean" in names


def test_unitary_conjugation_complexity_is_one():
    adx = cc.unitary_mixture([X], [1.0])
    est = cc.complexity_estimate(adx, pauli_structure())
    assert abs(est.lower - 1.0) < 1e-6
    # upper certificate is expected length times diamond distance: 0.75 * 2
    assert est.lower <= est.upper <= 1.5 + 1e-6


def test_channel_apply_and_duality():
    dep = cc.unitary_mixture([I2, X, Y, Z], [0.25] * 4)
    rho = np.array([[0.75, 0.1], [0.1, 0.25]], dtype=complex)
    out = dep.apply(rho)
    assert np.allclose(out, 0.5 * np.trace(rho) * I2)
    # pairing tr(Phi(rho) x) = tr(rho Phi*(x))
    x = X + 0.3 * Z
    lhs = np.trace(dep.apply(rho) @ x)
    rhs = np.trace(rho @ dep.apply(x, dual=True))
    assert abs(lhs - rhs) < 1e-9


def test_return_time_closed_form():
    r = cc.symmetrize(cc.ResourceSet(cc.ResourceSet.Kind.Discrete, 2, [X, Y, Z]))
    f = cc.make_semigroup(cc.SemigroupFamily.Kind.Discrete, r, [0.25] * 4)
    t = cc.return_time(f, 0.5)
    assert abs(t - math.log(3.0)) < 1e-3


def test_group_closure_word_lengths():
    table = cc.group_closure([X, Y, Z])
    assert table is not None
    assert len(table.elements) == 4
    stats = cc.length_statistics(table)
    assert stats.mean == pytest.approx(0.75)
    assert stats.diameter == 1


def test_commutative_expected_length_identity():
    chk = cc.verify_expected_length_commutative([[1, 0, 2], [0, 2, 1]])
    assert chk.order == 6
    assert chk.mean_length == pytest.approx(1.5)
    assert chk.width <= 1e-9


def test_subalgebra_index_qubit_over_scalars():
    idx = cc.subalgebra_index(pauli_structure())
    assert idx.lower == pytest.approx(2.0, abs=1e-4)
    assert idx.upper_certified


def test_norm_equivalence_small_sample():
    rep = cc.norm_equivalence_check(25, 1, seed=11)
    assert rep.holds
    assert 0.25 - 1e-9 <= rep.min_ratio <= rep.max_ratio <= 0.75 + 1e-9


def test_io_roundtrip(tmp_path):
    dep = cc.unitary_mixture([I2, X, Y, Z], [0.25] * 4)
    path = tmp_path / "dep.json"
    cc.save_channel(path, dep)
    back = cc.load_channel(path)
    assert np.allclose(back.superop, dep.superop)


def test_invalid_kraus_raises():
    with pytest.raises(ValueError):
        cc.QuantumChannel.from_kraus([X + 0.5 * I2])
