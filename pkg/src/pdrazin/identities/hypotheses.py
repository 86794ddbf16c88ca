"""
Hypothesis residuals and the acceptance gate shared by every formula.

A residual at or above `hypothesis_reject` raises `HypothesisError`. A residual
between the acceptance tolerance and the rejection threshold is evaluated
anyway but emits `MarginalHypothesisWarning`.
"""

import logging
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

from ..algebra import AlgebraElement, mul, norm, power, radical_distance, scale, sub
from ..drazin import commutation_residual
from ..drazin.models import PDrazinResult
from ..errors import HypothesisError, MarginalHypothesisWarning
from ..reports import HYPOTHESIS, VerificationReport
from ..tolerances import Tolerances
from .models import LambdaPair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    residual: float
    marginal: bool


def gate(
    name: str,
    residual: float,
    tolerances: Tolerances,
    accept: Optional[float] = None,
    pair: Optional[Tuple[int, int]] = None,
) -> HypothesisCheck:
    """Accept, warn about, or reject a measured hypothesis residual."""
    accept = tolerances.tol_res if accept is None else accept
    if not residual < tolerances.hypothesis_reject:
        logger.info(f"Hypothesis '{name}' rejected: residual {residual:.3e}")
        raise HypothesisError(name, residual, tolerances.hypothesis_reject, pair)
    marginal = residual > accept
    if marginal:
        where = f" for pair {pair}" if pair is not None else ""
        message = (
            f"hypothesis '{name}'{where} holds only marginally: "
            f"residual {residual:.3e} in ({accept:.1e}, {tolerances.hypothesis_reject:.1e})"
        )
        logger.warning(message)
        warnings.warn(message, MarginalHypothesisWarning, stacklevel=3)
    return HypothesisCheck(name, residual, marginal)


def record(
    report: VerificationReport,
    name: str,
    residual: float,
    tolerances: Tolerances,
    accept: Optional[float] = None,
) -> None:
    """Enter a hypothesis residual in a report without raising or warning."""
    accept = tolerances.tol_res if accept is None else accept
    report.record(HYPOTHESIS, name, residual, tolerances.hypothesis_reject)
    if residual > accept:
        report.marginal_hypotheses.append(name)


# === RESIDUALS ===


def orthogonality_residual(a: AlgebraElement, b: AlgebraElement) -> float:
    """max(||ab||, ||ba||) / max(1, ||a|| ||b||)."""
    return max(norm(mul(a, b)), norm(mul(b, a))) / max(1.0, norm(a) * norm(b))


def lambda_residual(pair: LambdaPair) -> float:
    """||ab - λ ba|| / max(1, ||a|| ||b||)."""
    a, b = pair.a, pair.b
    return norm(sub(mul(a, b), scale(mul(b, a), pair.lam))) / max(
        1.0, norm(a) * norm(b)
    )


def nilpotency_residual(a: AlgebraElement) -> float:
    """||a^rep_dim|| / max(1, ||a||)^rep_dim."""
    n = a.rep_dim
    return norm(power(a, n)) / max(1.0, norm(a)) ** n


def invertibility_residual(result: PDrazinResult) -> float:
    """||a^Π||, zero exactly for invertible a and at least 1 otherwise."""
    return norm(result.spectral_idempotent)


def group_residual(a: AlgebraElement, result: PDrazinResult) -> float:
    """||a a^Π|| / max(1, ||a||), the size of the nilpotent part."""
    return norm(mul(a, result.spectral_idempotent)) / max(1.0, norm(a))


def radical_membership_residual(a: AlgebraElement) -> float:
    """radical_distance(a) / max(1, ||a||)."""
    return radical_distance(a) / max(1.0, norm(a))


__all__ = [
    "HypothesisCheck",
    "commutation_residual",
    "gate",
    "group_residual",
    "invertibility_residual",
    "lambda_residual",
    "nilpotency_residual",
    "orthogonality_residual",
    "radical_membership_residual",
    "record",
]
