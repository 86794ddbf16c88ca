"""Tests for the Drazin oracle, indices and axiom checks."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from pdrazin.algebra import (
    AlgebraContext,
    ContextKind,
    element,
    from_coefficients,
    identity,
    mul,
    sub,
    zero,
)
from pdrazin.drazin import (
    check_pdrazin_axioms,
    core_nilpotent_parts,
    drazin_index,
    drazin_inverse,
    group_inverse,
    is_quasinilpotent,
    numerical_rank,
    pdrazin,
    pinv,
    quasinilpotence_report,
)
from pdrazin.errors import NotGroupInvertibleError
from pdrazin.generators import (
    RandomSpec,
    gen_with_index,
    random_unitary,
    reachable_indices,
)

FULL2 = AlgebraContext.full_matrix(2)
J2 = np.array([[0, 1], [0, 0]], dtype=complex)


class TestNumericalRank:
    def test_examples(self) -> None:
        assert numerical_rank(np.eye(3), 1e-12) == 3
        assert numerical_rank(np.zeros((3, 3)), 1e-12) == 0
        assert numerical_rank(J2, 1e-12) == 1

    def test_reference_scale(self) -> None:
        tiny = np.diag([1e-14, 0.0])
        assert numerical_rank(tiny, 1e-12) == 1
        assert numerical_rank(tiny, 1e-12, scale=1.0) == 0

    def test_pinv_of_zero(self) -> None:
        assert_allclose(pinv(np.zeros((2, 2)), 1e-12), np.zeros((2, 2)))

    def test_pinv_of_invertible(self) -> None:
        m = np.array([[2.0, 1.0], [0.0, 1.0]])
        assert_allclose(pinv(m, 1e-12), np.linalg.inv(m), atol=1e-12)


class TestDrazinIndex:
    def test_examples(self) -> None:
        assert drazin_index(identity(FULL2)) == 0
        assert drazin_index(element(FULL2, J2)) == 2
        assert drazin_index(element(FULL2, np.diag([1.0, 0.0]))) == 1

    def test_zero_element(self) -> None:
        assert drazin_index(zero(FULL2)) == 1

    @pytest.mark.parametrize("target", [0, 1, 2, 3, 4])
    def test_generated_index(self, target: int) -> None:
        ctx = AlgebraContext.full_matrix(5)
        for seed in range(5):
            a = gen_with_index(RandomSpec(seed, ctx, target))
            assert drazin_index(a) == target

    @pytest.mark.parametrize("large, small", [(1000.0, 1.0), (1.0, 1e-3)])
    def test_one_dominant_entry(self, large: float, small: float) -> None:
        m = small * np.diag(np.ones(7), 1)
        m[0, 1] += large
        a = element(AlgebraContext.full_matrix(8), m)
        assert drazin_index(a) == 8

    def test_one_dominant_entry_inverse(self) -> None:
        m = np.diag(np.ones(7), 1)
        m[0, 1] += 1000.0
        r = pdrazin(element(AlgebraContext.full_matrix(8), m))
        assert r.drazin_index == 8
        assert_allclose(r.inverse.matrix, np.zeros((8, 8)), atol=1e-12)

    def test_dense_nilpotent(self) -> None:
        q = random_unitary(np.random.default_rng(3), 8)
        m = q @ np.diag(np.ones(7), 1) @ q.conj().T
        assert drazin_index(element(AlgebraContext.full_matrix(8), m)) == 8


class TestDrazinInverse:
    def test_invertible(self) -> None:
        r = drazin_inverse(element(FULL2, np.diag([2.0, 3.0])))
        assert_allclose(r.inverse.matrix, np.diag([0.5, 1 / 3]), atol=1e-12)
        assert r.drazin_index == 0
        assert_allclose(r.spectral_idempotent.matrix, np.zeros((2, 2)), atol=1e-12)

    def test_nilpotent(self) -> None:
        r = drazin_inverse(element(FULL2, J2))
        assert_allclose(r.inverse.matrix, np.zeros((2, 2)), atol=1e-12)
        assert r.drazin_index == 2
        assert_allclose(r.spectral_idempotent.matrix, np.eye(2), atol=1e-12)

    def test_index_one(self) -> None:
        r = drazin_inverse(element(FULL2, np.array([[2.0, 1.0], [0.0, 0.0]])))
        assert_allclose(r.inverse.matrix, [[0.5, 0.25], [0.0, 0.0]], atol=1e-12)
        assert r.drazin_index == 1

    def test_group_inverse(self) -> None:
        p = element(FULL2, np.diag([1.0, 0.0]))
        assert_allclose(group_inverse(p).matrix, np.diag([1.0, 0.0]), atol=1e-12)
        a = element(FULL2, np.array([[1.0, 2.0], [3.0, 4.0]]))
        assert_allclose(group_inverse(a).matrix, np.linalg.inv(a.matrix), atol=1e-12)

    def test_group_inverse_needs_index_one(self) -> None:
        with pytest.raises(NotGroupInvertibleError) as info:
            group_inverse(element(FULL2, J2))
        assert info.value.index == 2

    def test_spectral_idempotent(self) -> None:
        a = element(FULL2, np.array([[2.0, 1.0], [0.0, 0.0]]))
        r = drazin_inverse(a)
        p = r.spectral_idempotent
        assert_allclose(mul(p, p).matrix, p.matrix, atol=1e-12)
        assert_allclose(p.matrix, sub(identity(FULL2), mul(a, r.inverse)).matrix)

    def test_core_nilpotent_parts(self) -> None:
        a = gen_with_index(RandomSpec(3, AlgebraContext.full_matrix(4), 2))
        core, nilpotent = core_nilpotent_parts(a)
        assert_allclose((core + nilpotent).matrix, a.matrix, atol=1e-10)
        assert drazin_index(core) <= 1
        assert is_quasinilpotent(nilpotent)


class TestRadicalIndex:
    def test_full_matrix_jordan(self) -> None:
        assert pdrazin(element(FULL2, J2)).radical_index == 2

    def test_upper_jordan(self) -> None:
        ctx = AlgebraContext.upper_triangular(2)
        r = pdrazin(element(ctx, J2))
        assert r.radical_index == 1
        assert r.drazin_index == 2

    def test_polynomial_radical_element(self) -> None:
        ctx = AlgebraContext.truncated_polynomial(4)
        r = pdrazin(from_coefficients(ctx, [0, 1, 1]))
        assert_allclose(r.inverse.matrix, np.zeros((4, 4)), atol=1e-12)
        assert r.radical_index == 1

    @settings(deadline=None, max_examples=40)
    @given(
        seed=st.integers(min_value=0, max_value=2**32),
        kind=st.sampled_from(list(ContextKind)),
        n=st.integers(min_value=1, max_value=7),
        data=st.data(),
    )
    def test_radical_index_bound(
        self, seed: int, kind: ContextKind, n: int, data: st.DataObject
    ) -> None:
        ctx = AlgebraContext.from_kind(kind, n)
        target = data.draw(st.sampled_from(sorted(reachable_indices(ctx))))
        a = gen_with_index(RandomSpec(seed, ctx, target))
        r = pdrazin(a)
        assert r.drazin_index == target
        if r.drazin_index >= 1:
            assert 1 <= r.radical_index <= r.drazin_index


class TestAxiomCheck:
    def test_oracle_passes(self) -> None:
        ctx = AlgebraContext.upper_triangular(5)
        for seed in range(10):
            a = gen_with_index(RandomSpec(seed, ctx, 2))
            r = pdrazin(a)
            assert check_pdrazin_axioms(a, r.inverse, r.radical_index).passed

    def test_zero_inverts_nilpotent(self) -> None:
        a = element(FULL2, J2)
        assert check_pdrazin_axioms(a, zero(FULL2), 2).passed

    def test_identity_is_not_inverse_of_jordan(self) -> None:
        report = check_pdrazin_axioms(element(FULL2, J2), identity(FULL2), 1)
        assert not report.passed
        assert "axiom.inner_inverse" in report.failures()


class TestQuasinilpotence:
    def test_nilpotent(self) -> None:
        report = quasinilpotence_report(element(FULL2, J2))
        assert report.is_quasinilpotent
        assert report.final_norm == 0.0
        assert report.root_sequence[0] == pytest.approx(1.0)

    def test_identity(self) -> None:
        assert not is_quasinilpotent(identity(FULL2))
