"""Tests for λ-commuting pairs: power laws, swaps, product and difference formulas."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from pdrazin.algebra import AlgebraContext, element, sub
from pdrazin.drazin import pdrazin
from pdrazin.errors import HypothesisError, StructuralError
from pdrazin.generators import RandomSpec, gen_lambda_pair
from pdrazin.identities import (
    LambdaPair,
    lambda_power_identities,
    lambda_residual,
    lambda_swap_relations,
    product_lambda,
    scaled_power_residual,
    sub_lambda,
    sub_lambda_finite,
)

FULL2 = AlgebraContext.full_matrix(2)
J2 = np.array([[0, 1], [0, 0]], dtype=complex)


@pytest.fixture
def shift_pair() -> LambdaPair:
    """ab = 2ba with invertible a and nilpotent b."""
    return LambdaPair(element(FULL2, np.diag([2.0, 1.0])), element(FULL2, J2), 2)


@pytest.fixture
def weyl_pair() -> LambdaPair:
    """ab = -ba with both elements invertible."""
    a = element(FULL2, np.diag([1.0, -1.0]))
    b = element(FULL2, np.array([[0.0, 1.0], [1.0, 0.0]]))
    return LambdaPair(a, b, -1)


class TestLambdaPair:
    def test_zero_lambda_rejected(self) -> None:
        x = element(FULL2, J2)
        with pytest.raises(StructuralError):
            LambdaPair(x, x, 0)

    def test_context_mismatch_rejected(self) -> None:
        other = element(AlgebraContext.upper_triangular(2), J2)
        with pytest.raises(StructuralError):
            LambdaPair(element(FULL2, J2), other, 2)

    def test_lambda_is_complex(self, shift_pair: LambdaPair) -> None:
        assert shift_pair.lam == 2 + 0j
        assert lambda_residual(shift_pair) < 1e-15

    def test_wrong_lambda_rejected(self, shift_pair: LambdaPair) -> None:
        wrong = LambdaPair(shift_pair.a, shift_pair.b, 3)
        with pytest.raises(HypothesisError) as info:
            product_lambda(wrong)
        assert info.value.hypothesis == "lambda_commutation"


class TestPowerLaws:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_shift_pair(self, shift_pair: LambdaPair, n: int) -> None:
        report = lambda_power_identities(shift_pair, n)
        assert report.passed, report.failures()
        assert len(report.identity_residuals) == 5

    def test_weyl_pair(self, weyl_pair: LambdaPair) -> None:
        report = lambda_power_identities(weyl_pair, 3)
        assert report.passed, report.failures()

    def test_swap_relations(self, shift_pair: LambdaPair, weyl_pair: LambdaPair) -> None:
        for pair in (shift_pair, weyl_pair):
            report = lambda_swap_relations(pair)
            assert report.passed, report.failures()
            assert "lambda_commutation" in report.hypothesis_residuals

    @pytest.mark.parametrize("i", [0, 1, 2, 3])
    def test_scaled_powers(self, shift_pair: LambdaPair, i: int) -> None:
        assert scaled_power_residual(shift_pair, i) < 1e-12


class TestProduct:
    def test_weyl_product(self, weyl_pair: LambdaPair) -> None:
        expected = np.array([[0.0, -1.0], [1.0, 0.0]])
        assert_allclose(product_lambda(weyl_pair).matrix, expected, atol=1e-12)


class TestDifference:
    def test_shift_pair_series(self, shift_pair: LambdaPair) -> None:
        trace = sub_lambda(shift_pair)
        assert_allclose(trace.result.matrix, [[0.5, 0.5], [0, 1]], atol=1e-12)
        assert_allclose(trace.w.matrix, np.zeros((2, 2)), atol=1e-12)
        assert trace.series_left_terms == 2
        assert trace.series_right_terms == 0

    def test_shift_pair_finite(self, shift_pair: LambdaPair) -> None:
        assert_allclose(
            sub_lambda_finite(shift_pair).matrix, [[0.5, 0.5], [0, 1]], atol=1e-12
        )

    def test_weyl_pair(self, weyl_pair: LambdaPair) -> None:
        expected = pdrazin(sub(weyl_pair.a, weyl_pair.b)).inverse.matrix
        assert_allclose(expected, [[0.5, -0.5], [-0.5, -0.5]], atol=1e-12)
        assert_allclose(sub_lambda(weyl_pair).result.matrix, expected, atol=1e-12)
        assert_allclose(sub_lambda_finite(weyl_pair).matrix, expected, atol=1e-12)

    @given(seed=st.integers(0, 2**32), dim=st.integers(2, 6))
    @settings(deadline=None, max_examples=25)
    def test_generated_pairs_agree_with_oracle(self, seed: int, dim: int) -> None:
        context = AlgebraContext.full_matrix(dim)
        pair = gen_lambda_pair(RandomSpec(seed, context, 1, lam=2.0))
        expected = pdrazin(sub(pair.a, pair.b)).inverse.matrix
        scale = max(1.0, float(np.linalg.norm(expected)))
        for value in (sub_lambda(pair).result, sub_lambda_finite(pair)):
            assert np.linalg.norm(value.matrix - expected) <= 1e-8 * scale
