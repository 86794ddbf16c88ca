"""
Evaluation of the terminating series Σ step^i · tail.
"""

import logging

import numpy as np

from ..algebra import AlgebraElement, mul, norm
from ..algebra.operations import require_same_context
from ..drazin.models import DEFAULT_POLICY, SeriesPolicy
from ..errors import SeriesDivergenceError
from .models import SeriesEvaluation

logger = logging.getLogger(__name__)


def evaluate_series(
    step: AlgebraElement, tail: AlgebraElement, policy: SeriesPolicy = DEFAULT_POLICY
) -> SeriesEvaluation:
    """Accumulate t_i = step^i · tail until a term vanishes.

    A term counts as vanished when
    ||t_i|| <= term_tol · rep_dim · max(1, ||t_0||) · max(1, ||step||)^i,
    the round-off floor of a product of i steps. The trailing factor is part of
    every term before it is tested: step alone need not contract.

    Raises:
        SeriesDivergenceError: No term vanished within policy.max_terms.
    """
    require_same_context(step, tail)
    n = step.rep_dim
    max_terms = policy.resolve_max_terms(n)
    t0_scale = max(1.0, norm(tail))
    growth = max(1.0, norm(step))

    total = np.zeros_like(tail.matrix)
    term = tail
    term_norm = norm(term)
    threshold = policy.term_tol * n * t0_scale
    for i in range(max_terms + 1):
        threshold = policy.term_tol * n * t0_scale * growth**i
        term_norm = norm(term)
        if term_norm <= threshold:
            logger.debug(
                f"Series terminated after {i} terms (||t_{i}|| = {term_norm:.3e})"
            )
            return SeriesEvaluation(AlgebraElement(tail.context, total), i)
        total = total + term.matrix
        term = mul(step, term)
    logger.warning(
        f"Series did not terminate within {max_terms} terms "
        f"(last norm {term_norm:.3e}, threshold {threshold:.3e})"
    )
    raise SeriesDivergenceError(max_terms, term_norm, threshold)


def terminating_series(
    step: AlgebraElement, tail: AlgebraElement, policy: SeriesPolicy = DEFAULT_POLICY
) -> AlgebraElement:
    """Σ_{i>=0} step^i · tail for series whose terms vanish after finitely many steps."""
    return evaluate_series(step, tail, policy).value
