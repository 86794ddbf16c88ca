"""
Formulas for products and sums of commuting or orthogonal elements.

Component inverses (a^‡, b^‡, (1 + a^‡b)^‡) always come from the oracle; the
formulas assemble them. Every operation gates its own hypotheses first.
"""

import logging
from typing import Sequence, Union

from ..algebra import AlgebraElement, add, identity, mul, scale
from ..drazin import check_pdrazin_axioms, commutation_residual, drazin_index, pdrazin
from ..drazin.models import DEFAULT_POLICY, SeriesPolicy
from ..errors import StructuralError
from ..reports import AXIOM
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .hypotheses import (
    gate,
    group_residual,
    invertibility_residual,
    nilpotency_residual,
    orthogonality_residual,
)
from .models import CommutingSumTrace, SpecialCase, SpecializationTrace
from .series import evaluate_series

logger = logging.getLogger(__name__)


def product_commuting(
    a: AlgebraElement, b: AlgebraElement, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> AlgebraElement:
    """(ab)^‡ = a^‡ b^‡ for commuting a, b."""
    gate("commutation", commutation_residual(a, b), tolerances)
    return mul(pdrazin(a, tolerances).inverse, pdrazin(b, tolerances).inverse)


def add_orthogonal(
    a: AlgebraElement, b: AlgebraElement, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> AlgebraElement:
    """(a + b)^‡ = a^‡ + b^‡ when ab = ba = 0."""
    gate("orthogonality", orthogonality_residual(a, b), tolerances)
    return add(pdrazin(a, tolerances).inverse, pdrazin(b, tolerances).inverse)


def add_orthogonal_n(
    elements: Sequence[AlgebraElement], tolerances: Tolerances = DEFAULT_TOLERANCES
) -> AlgebraElement:
    """(a1 + ... + an)^‡ = a1^‡ + ... + an^‡ for pairwise orthogonal elements.

    Pairs in errors are 1-based, matching the instance names a1..an.
    """
    if not elements:
        raise StructuralError("add_orthogonal_n needs at least one element")
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            gate(
                "orthogonality",
                orthogonality_residual(elements[i], elements[j]),
                tolerances,
                pair=(i + 1, j + 1),
            )
    total = pdrazin(elements[0], tolerances).inverse
    for x in elements[1:]:
        total = add(total, pdrazin(x, tolerances).inverse)
    return total


def add_commuting_trace(
    a: AlgebraElement,
    b: AlgebraElement,
    policy: SeriesPolicy = DEFAULT_POLICY,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> CommutingSumTrace:
    """Evaluate (a+b)^‡ = (1 + a^‡b)^‡ a^‡ + b^‡ Σ (-b^‡ a a^Π)^i a^Π."""
    gate("commutation", commutation_residual(a, b), tolerances)
    ra = pdrazin(a, tolerances)
    b_inv = pdrazin(b, tolerances).inverse
    a_inv, a_pi = ra.inverse, ra.spectral_idempotent

    c = add(identity(a.context), mul(a_inv, b))
    c_inv = pdrazin(c, tolerances).inverse
    step = scale(mul(mul(b_inv, a), a_pi), -1.0)
    series = evaluate_series(step, a_pi, policy)

    result = add(mul(c_inv, a_inv), mul(b_inv, series.value))
    logger.debug(
        f"Commuting sum on {a.context.describe()}: {series.terms} series terms"
    )
    return CommutingSumTrace(
        result=result,
        one_plus_inverse=c_inv,
        series=series.value,
        series_terms=series.terms,
    )


def add_commuting(
    a: AlgebraElement,
    b: AlgebraElement,
    policy: SeriesPolicy = DEFAULT_POLICY,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> AlgebraElement:
    """(a + b)^‡ for commuting a, b."""
    return add_commuting_trace(a, b, policy, tolerances).result


def one_plus_from_sum(
    a: AlgebraElement,
    b: AlgebraElement,
    sum_inv: AlgebraElement,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> AlgebraElement:
    """(1 + a^‡b)^‡ = a^Π + a^2 a^‡ (a+b)^‡, given (a+b)^‡ as `sum_inv`.

    `sum_inv` is axiom-checked against a + b; a failing check is reported as a
    violated hypothesis.
    """
    gate("commutation", commutation_residual(a, b), tolerances)
    s = add(a, b)
    k = max(1, drazin_index(s, tolerances))
    axioms = check_pdrazin_axioms(s, sum_inv, k, tolerances)
    worst = max(c.residual for c in axioms.checks[AXIOM].values())
    gate(
        "sum_inverse_axioms",
        worst,
        tolerances,
        accept=max(tolerances.tol_res, tolerances.tol_rad),
    )

    ra = pdrazin(a, tolerances)
    a2_ainv = mul(mul(a, a), ra.inverse)
    return add(ra.spectral_idempotent, mul(a2_ainv, sum_inv))


def specialize_2_8_trace(
    a: AlgebraElement,
    b: AlgebraElement,
    case: Union[SpecialCase, str],
    policy: SeriesPolicy = DEFAULT_POLICY,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SpecializationTrace:
    """Specialise the commuting-sum formula to a nilpotent, invertible or group-invertible a.

    Besides the corrected value, evaluates the closed form as commonly printed:
    nilpotent `b^‡`; invertible `(1 + a^-1 b)^‡ a^-1 + b^‡ a^-1`; group
    `(1 + a^# b)^‡ a^# + b^‡ a^Π` (identical to the corrected form).
    """
    case = SpecialCase(case)
    gate("commutation", commutation_residual(a, b), tolerances)
    ra = pdrazin(a, tolerances)
    b_inv = pdrazin(b, tolerances).inverse
    one = identity(a.context)

    if case is SpecialCase.NILPOTENT:
        gate("nilpotent", nilpotency_residual(a), tolerances)
        series = evaluate_series(scale(mul(b_inv, a), -1.0), one, policy)
        return SpecializationTrace(case, mul(b_inv, series.value), b_inv, series.terms)

    if case is SpecialCase.INVERTIBLE:
        gate("invertible", invertibility_residual(ra), tolerances)
        a_inv = ra.inverse
        c_inv = pdrazin(add(one, mul(a_inv, b)), tolerances).inverse
        result = mul(c_inv, a_inv)
        printed = add(result, mul(b_inv, a_inv))
        return SpecializationTrace(case, result, printed, 0)

    gate("group_invertible", group_residual(a, ra), tolerances)
    a_sharp, a_pi = ra.inverse, ra.spectral_idempotent
    c_inv = pdrazin(add(one, mul(a_sharp, b)), tolerances).inverse
    # a a^Π = 0 collapses the series to its first term a^Π
    series = evaluate_series(scale(mul(mul(b_inv, a), a_pi), -1.0), a_pi, policy)
    result = add(mul(c_inv, a_sharp), mul(b_inv, series.value))
    printed = add(mul(c_inv, a_sharp), mul(b_inv, a_pi))
    return SpecializationTrace(case, result, printed, series.terms)


def specialize_2_8(
    a: AlgebraElement,
    b: AlgebraElement,
    case: Union[SpecialCase, str],
    policy: SeriesPolicy = DEFAULT_POLICY,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> AlgebraElement:
    """Corrected specialisation of the commuting-sum formula for the given case."""
    return specialize_2_8_trace(a, b, case, policy, tolerances).result
