"""Tests for the seeded random instance generators."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_array_equal

from pdrazin.algebra import AlgebraContext, ContextKind, pattern_residual
from pdrazin.drazin import commutation_residual, drazin_index, pdrazin
from pdrazin.errors import GeneratorError
from pdrazin.generators import (
    IDENTITY_BUILDERS,
    KIND_BUILDERS,
    RandomSpec,
    clip_index,
    gen_commuting_pair,
    gen_core_nilpotent,
    gen_instance,
    gen_kind,
    gen_lambda_pair,
    gen_orthogonal_pair,
    gen_orthogonal_tuple,
    gen_special_pair,
    gen_with_index,
    random_index,
    random_unitary,
    reachable_indices,
    root_order,
)
from pdrazin.identities import (
    SpecialCase,
    group_residual,
    invertibility_residual,
    lambda_residual,
    nilpotency_residual,
    orthogonality_residual,
)

from .conftest import all_contexts

KINDS = [kind.value for kind in ContextKind]


@st.composite
def context_and_index(draw: st.DrawFn) -> tuple:
    kind = draw(st.sampled_from(KINDS))
    dim = draw(st.integers(2, 7))
    context = AlgebraContext.from_kind(kind, dim)
    target = draw(st.sampled_from(sorted(reachable_indices(context))))
    return context, target


class TestReachability:
    def test_full_matrix(self) -> None:
        assert reachable_indices(AlgebraContext.full_matrix(3)) == {0, 1, 2, 3}

    def test_truncated_polynomial(self) -> None:
        assert reachable_indices(AlgebraContext.truncated_polynomial(4)) == {
            0,
            1,
            2,
            4,
        }

    def test_clip_index(self) -> None:
        assert clip_index(AlgebraContext.truncated_polynomial(4), 3) == 2

    def test_random_index_range(self, rng: np.random.Generator) -> None:
        poly = AlgebraContext.truncated_polynomial(4)
        draws = {random_index(poly, rng, 4, lower=2) for _ in range(30)}
        assert draws <= {2, 4}
        with pytest.raises(GeneratorError, match=r"3\.\.3"):
            random_index(poly, rng, 3, lower=3)

    def test_unreachable_index_rejected(self) -> None:
        spec = RandomSpec(1, AlgebraContext.truncated_polynomial(4), 3)
        with pytest.raises(GeneratorError, match="not reachable"):
            gen_with_index(spec)


class TestRandomSpec:
    @pytest.mark.parametrize("seed", [-1, 2**64])
    def test_seed_range(self, seed: int) -> None:
        with pytest.raises(GeneratorError):
            RandomSpec(seed, AlgebraContext.full_matrix(2))

    def test_target_range(self) -> None:
        with pytest.raises(GeneratorError):
            RandomSpec(0, AlgebraContext.full_matrix(2), 3)

    def test_zero_lambda(self) -> None:
        with pytest.raises(GeneratorError):
            RandomSpec(0, AlgebraContext.full_matrix(2), lam=0)

    def test_missing_lambda(self) -> None:
        with pytest.raises(GeneratorError):
            gen_lambda_pair(RandomSpec(0, AlgebraContext.full_matrix(2)))


class TestElements:
    @given(context_and_index(), st.integers(0, 2**64 - 1))
    @settings(deadline=None, max_examples=80)
    def test_prescribed_index(self, case: tuple, seed: int) -> None:
        context, target = case
        x = gen_with_index(RandomSpec(seed, context, target))
        assert drazin_index(x) == target
        assert pattern_residual(x.matrix, context) <= 1e-12

    def test_same_seed_same_element(self) -> None:
        for context in all_contexts(5):
            spec = RandomSpec(12345, context, 1)
            assert_array_equal(gen_with_index(spec).matrix, gen_with_index(spec).matrix)

    def test_different_seeds_differ(self) -> None:
        context = AlgebraContext.full_matrix(4)
        x = gen_with_index(RandomSpec(1, context, 2))
        y = gen_with_index(RandomSpec(2, context, 2))
        assert not np.array_equal(x.matrix, y.matrix)

    def test_core_nilpotent_parts(self) -> None:
        spec = RandomSpec(7, AlgebraContext.full_matrix(5), 2)
        core, nil = gen_core_nilpotent(spec)
        assert commutation_residual(core, nil) < 1e-12
        assert nilpotency_residual(nil) < 1e-12
        assert_array_equal((core + nil).matrix, gen_with_index(spec).matrix)

    def test_random_unitary(self, rng: np.random.Generator) -> None:
        q = random_unitary(rng, 5)
        assert np.allclose(q @ q.conj().T, np.eye(5), atol=1e-12)
        assert np.linalg.cond(q) == pytest.approx(1.0, abs=1e-10)
        again = random_unitary(np.random.default_rng(20240601), 5)
        assert_array_equal(again, q)


class TestPairs:
    @given(context_and_index(), st.integers(0, 2**32))
    @settings(deadline=None, max_examples=40)
    def test_commuting(self, case: tuple, seed: int) -> None:
        context, target = case
        a, b = gen_commuting_pair(RandomSpec(seed, context, target))
        assert commutation_residual(a, b) < 1e-10

    @given(context_and_index(), st.integers(0, 2**32))
    @settings(deadline=None, max_examples=40)
    def test_orthogonal(self, case: tuple, seed: int) -> None:
        context, target = case
        a, b = gen_orthogonal_pair(RandomSpec(seed, context, target))
        assert orthogonality_residual(a, b) < 1e-10

    def test_orthogonal_tuple(self) -> None:
        for context in all_contexts(6):
            parts = gen_orthogonal_tuple(RandomSpec(3, context, 1), count=4)
            assert len(parts) == 4
            for i in range(4):
                for j in range(i + 1, 4):
                    assert orthogonality_residual(parts[i], parts[j]) < 1e-10

    @pytest.mark.parametrize("lam", [2.0, -1.0, 1j, 0.5 + 0.5j])
    def test_lambda_pairs(self, lam: complex) -> None:
        for context in all_contexts(6):
            for seed in range(5):
                pair = gen_lambda_pair(RandomSpec(seed, context, 1, lam=lam))
                assert lambda_residual(pair) < 1e-10

    def test_root_order(self) -> None:
        assert root_order(-1) == 2
        assert root_order(1j) == 4
        assert root_order(np.exp(2j * np.pi / 3)) == 3
        assert root_order(2) is None
        assert root_order(1) is None

    @pytest.mark.parametrize("seed", range(6))
    def test_special_pairs(self, seed: int) -> None:
        context = AlgebraContext.full_matrix(5)
        spec = RandomSpec(seed, context, 2)
        a, _ = gen_special_pair(spec, SpecialCase.NILPOTENT)
        assert nilpotency_residual(a) < 1e-10
        a, _ = gen_special_pair(spec, SpecialCase.INVERTIBLE)
        assert invertibility_residual(pdrazin(a)) < 1e-10
        a, _ = gen_special_pair(spec, SpecialCase.GROUP)
        assert group_residual(a, pdrazin(a)) < 1e-10


class TestInstances:
    def test_every_identity_has_a_builder(self) -> None:
        from pdrazin.verification import IDENTITIES

        assert set(IDENTITY_BUILDERS) == set(IDENTITIES)

    def test_instance_metadata(self) -> None:
        spec = RandomSpec(99, AlgebraContext.full_matrix(3), 1)
        instance = gen_instance("thm2.7", spec)
        assert instance.identity == "thm2.7"
        assert instance.seed == 99
        assert set(instance.elements) == {"a", "b"}

    def test_tuple_instance(self) -> None:
        instance = gen_instance("cor2.6", RandomSpec(1, AlgebraContext.full_matrix(4)))
        assert set(instance.elements) == {"a1", "a2", "a3"}

    def test_lambda_instance_carries_lambda(self) -> None:
        spec = RandomSpec(5, AlgebraContext.full_matrix(4), 1, lam=2)
        assert gen_instance("thm3.5", spec).lam == 2

    @pytest.mark.parametrize("kind", sorted(KIND_BUILDERS))
    def test_kinds(self, kind: str) -> None:
        spec = RandomSpec(4, AlgebraContext.full_matrix(3), 1, lam=-1)
        instance = gen_kind(kind, spec)
        assert instance.seed == 4
        assert "a" in instance.elements
