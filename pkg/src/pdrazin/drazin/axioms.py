"""
Residual measures for the p-Drazin axioms and the axiom checker.

All residuals are relative: an absolute norm divided by max(1, a natural
scale of the quantities involved).
"""

from ..algebra import AlgebraElement, mul, norm, power, radical_distance, sub
from ..algebra.operations import require_same_context
from ..reports import AXIOM, VerificationReport
from ..tolerances import DEFAULT_TOLERANCES, Tolerances


def commutation_residual(a: AlgebraElement, b: AlgebraElement) -> float:
    """||ab - ba|| / max(1, ||a|| ||b||)."""
    require_same_context(a, b)
    return norm(sub(mul(a, b), mul(b, a))) / max(1.0, norm(a) * norm(b))


def inner_inverse_residual(a: AlgebraElement, b: AlgebraElement) -> float:
    """||bab - b|| / max(1, ||b||)."""
    return norm(sub(mul(mul(b, a), b), b)) / max(1.0, norm(b))


def radical_residual(a: AlgebraElement, b: AlgebraElement, k: int) -> float:
    """radical_distance(a^k - a^(k+1) b) / max(1, ||a^k||)."""
    ak = power(a, k)
    return radical_distance(sub(ak, mul(mul(ak, a), b))) / max(1.0, norm(ak))


def check_pdrazin_axioms(
    a: AlgebraElement,
    b: AlgebraElement,
    k: int,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> VerificationReport:
    """Grade b as a p-Drazin inverse of a with exponent k.

    Failures are report entries, never exceptions.
    """
    require_same_context(a, b)
    report = VerificationReport(identity="axioms", context=a.context.describe())
    report.record(AXIOM, "commutation", commutation_residual(a, b), tolerances.tol_res)
    report.record(
        AXIOM, "inner_inverse", inner_inverse_residual(a, b), tolerances.tol_res
    )
    report.record(AXIOM, f"radical_k{k}", radical_residual(a, b, k), tolerances.tol_rad)
    return report
