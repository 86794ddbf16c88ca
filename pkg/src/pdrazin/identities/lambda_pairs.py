"""
Identities for λ-commuting pairs (ab = λ ba, λ != 0).

Power laws, swap relations, the product formula and two evaluations of
(a - b)^‡: one with terminating series and one with explicit finite sums.
"""

import logging

from ..algebra import (
    AlgebraElement,
    add,
    mul,
    power,
    relative_difference,
    scale,
    sub,
    zero,
)
from ..drazin import pdrazin
from ..drazin.models import DEFAULT_POLICY, SeriesPolicy
from ..reports import IDENTITY, VerificationReport
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from . import hypotheses
from .hypotheses import gate, lambda_residual
from .models import LambdaPair, SubLambdaTrace
from .series import evaluate_series

logger = logging.getLogger(__name__)


def _gate_pair(pair: LambdaPair, tolerances: Tolerances) -> None:
    gate("lambda_commutation", lambda_residual(pair), tolerances)


def _new_report(
    identity_tag: str, pair: LambdaPair, tolerances: Tolerances
) -> VerificationReport:
    report = VerificationReport(
        identity=identity_tag, context=pair.a.context.describe()
    )
    hypotheses.record(report, "lambda_commutation", lambda_residual(pair), tolerances)
    return report


def lambda_power_identities(
    pair: LambdaPair, n: int, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> VerificationReport:
    """Check the five power laws of a λ-commuting pair for exponent n.

    a b^n = λ^n b^n a, a^n b = λ^n b a^n, (ab)^n = λ^(-n(n-1)/2) a^n b^n,
    (a^‡ b)^n = λ^(n(n-1)/2) (a^‡)^n b^n and (a b^‡)^n = λ^(n(n-1)/2) a^n (b^‡)^n.
    """
    _gate_pair(pair, tolerances)
    a, b, lam = pair.a, pair.b, pair.lam
    a_inv = pdrazin(a, tolerances).inverse
    b_inv = pdrazin(b, tolerances).inverse
    report = _new_report("lambda_powers", pair, tolerances)
    tri = n * (n - 1) // 2

    a_n, b_n = power(a, n), power(b, n)
    sides = {
        f"a*b^{n}": (mul(a, b_n), scale(mul(b_n, a), lam**n)),
        f"a^{n}*b": (mul(a_n, b), scale(mul(b, a_n), lam**n)),
        f"(ab)^{n}": (power(mul(a, b), n), scale(mul(a_n, b_n), lam ** (-tri))),
        f"(a^D*b)^{n}": (
            power(mul(a_inv, b), n),
            scale(mul(power(a_inv, n), b_n), lam**tri),
        ),
        f"(a*b^D)^{n}": (
            power(mul(a, b_inv), n),
            scale(mul(a_n, power(b_inv, n)), lam**tri),
        ),
    }
    for name, (lhs, rhs) in sides.items():
        report.record(IDENTITY, name, relative_difference(lhs, rhs), tolerances.tol_acc)
    return report


def lambda_swap_relations(
    pair: LambdaPair, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> VerificationReport:
    """Check the swap relations of a λ-commuting pair.

    a a^‡ b = b a a^‡ and b b^‡ a = a b b^‡, then
    a^‡ b = λ^-1 b a^‡ and a b^‡ = λ^-1 b^‡ a.
    """
    _gate_pair(pair, tolerances)
    a, b, lam = pair.a, pair.b, pair.lam
    a_inv = pdrazin(a, tolerances).inverse
    b_inv = pdrazin(b, tolerances).inverse
    report = _new_report("lambda_swaps", pair, tolerances)

    aa = mul(a, a_inv)
    bb = mul(b, b_inv)
    sides = {
        "a*a^D*b": (mul(aa, b), mul(b, aa)),
        "b*b^D*a": (mul(bb, a), mul(a, bb)),
        "a^D*b": (mul(a_inv, b), scale(mul(b, a_inv), 1 / lam)),
        "a*b^D": (mul(a, b_inv), scale(mul(b_inv, a), 1 / lam)),
    }
    for name, (lhs, rhs) in sides.items():
        report.record(IDENTITY, name, relative_difference(lhs, rhs), tolerances.tol_acc)
    return report


def product_lambda(
    pair: LambdaPair, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> AlgebraElement:
    """(ab)^‡ = b^‡ a^‡ (which also equals λ^-1 a^‡ b^‡)."""
    _gate_pair(pair, tolerances)
    return mul(pdrazin(pair.b, tolerances).inverse, pdrazin(pair.a, tolerances).inverse)


def sub_lambda(
    pair: LambdaPair,
    policy: SeriesPolicy = DEFAULT_POLICY,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SubLambdaTrace:
    """(a - b)^‡ = w^‡ + a^‡ Σ (b a^‡)^i b^Π - Σ (b^‡ a)^i a^Π b^‡.

    w = a a^‡ (a - b) b b^‡ and w^‡ comes from the oracle. The right series is
    evaluated with a^Π folded into its trailing factor (a^Π commutes with b^‡
    and a), so each term carries the projector that makes it vanish.
    """
    _gate_pair(pair, tolerances)
    a, b = pair.a, pair.b
    ra = pdrazin(a, tolerances)
    rb = pdrazin(b, tolerances)
    a_inv, a_pi = ra.inverse, ra.spectral_idempotent
    b_inv, b_pi = rb.inverse, rb.spectral_idempotent

    w = mul(mul(mul(a, a_inv), sub(a, b)), mul(b, b_inv))
    w_inv = pdrazin(w, tolerances).inverse
    left = evaluate_series(mul(b, a_inv), b_pi, policy)
    right = evaluate_series(mul(b_inv, a), mul(a_pi, b_inv), policy)

    result = sub(add(w_inv, mul(a_inv, left.value)), right.value)
    logger.debug(
        f"λ-difference on {a.context.describe()}: "
        f"series terms {left.terms}/{right.terms}"
    )
    return SubLambdaTrace(
        w=w,
        w_inverse=w_inv,
        series_left_terms=left.terms,
        series_right_terms=right.terms,
        result=result,
    )


def sub_lambda_finite(
    pair: LambdaPair, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> AlgebraElement:
    """(a - b)^D as finite sums bounded by the Drazin indices.

    (a-b)^D = w^D + (1 - b b^D) Σ_{i<t} λ^(i(i+1)/2) (a^D)^(i+1) b^i
              - [Σ_{i<s} λ^(i(i+1)/2) a^i (b^D)^(i+1)] (1 - a a^D)

    with s = max(ind(a), 1) and t = max(ind(b), 1).
    """
    _gate_pair(pair, tolerances)
    a, b, lam = pair.a, pair.b, pair.lam
    ra = pdrazin(a, tolerances)
    rb = pdrazin(b, tolerances)
    a_inv, b_inv = ra.inverse, rb.inverse
    s = max(ra.drazin_index, 1)
    t = max(rb.drazin_index, 1)

    w = mul(mul(mul(a, a_inv), sub(a, b)), mul(b, b_inv))
    result = pdrazin(w, tolerances).inverse

    left = zero(a.context)
    for i in range(t):
        term = mul(power(a_inv, i + 1), power(b, i))
        left = add(left, scale(term, lam ** (i * (i + 1) // 2)))
    right = zero(a.context)
    for i in range(s):
        term = mul(power(a, i), power(b_inv, i + 1))
        right = add(right, scale(term, lam ** (i * (i + 1) // 2)))

    result = add(result, mul(rb.spectral_idempotent, left))
    return sub(result, mul(right, ra.spectral_idempotent))


def scaled_power_residual(
    pair: LambdaPair, i: int, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> float:
    """Relative residual of a^D (b a^D)^i = λ^(i(i+1)/2) (a^D)^(i+1) b^i."""
    a, b, lam = pair.a, pair.b, pair.lam
    a_inv = pdrazin(a, tolerances).inverse
    lhs = mul(a_inv, power(mul(b, a_inv), i))
    rhs = scale(mul(power(a_inv, i + 1), power(b, i)), lam ** (i * (i + 1) // 2))
    return relative_difference(lhs, rhs)

