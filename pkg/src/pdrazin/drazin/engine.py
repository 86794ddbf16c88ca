"""
The definition-based oracle: indices, Drazin/group/p-Drazin inverses and the
strongly spectral idempotent.

The inverse is computed as a^D = a^l pinv(a^(2l+1)) a^l with l = ind(a) and is
then checked against its own axioms; every identity formula is compared with
this value.
"""

import logging
from typing import Tuple

import numpy as np

from ..algebra import (
    AlgebraElement,
    identity,
    is_radical,
    mul,
    norm,
    power,
    sub,
    validate_element,
)
from ..algebra.operations import snap_to_pattern
from ..errors import InternalConsistencyError, NotGroupInvertibleError
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .axioms import commutation_residual, inner_inverse_residual
from .linalg import numerical_rank, pinv, spectral_norm
from .models import PDrazinResult, QuasinilpotenceReport

logger = logging.getLogger(__name__)


def _rank_tol(a: AlgebraElement, tolerances: Tolerances) -> float:
    return tolerances.rank_rtol * a.rep_dim


def _round_off_scale(magnitude: np.ndarray) -> float:
    """||(|a|^k)||_2, which bounds the round-off in a computed power a^k."""
    return spectral_norm(magnitude)


def drazin_index(a: AlgebraElement, tolerances: Tolerances = DEFAULT_TOLERANCES) -> int:
    """Smallest k >= 0 with rank(a^(k+1)) = rank(a^k); 0 iff a is invertible.

    Each power is thresholded against its own largest singular value, or
    against ||(|a|^k)||_2 when that is larger, so the round-off of a power that
    vanishes exactly counts as rank 0.
    """
    n = a.rep_dim
    tol = _rank_tol(a, tolerances)
    current = np.eye(n, dtype=np.complex128)
    magnitude = np.eye(n)
    previous_rank = n
    ranks = [n]
    for k in range(n + 1):
        current = current @ a.matrix
        magnitude = magnitude @ np.abs(a.matrix)
        rank = numerical_rank(current, tol, scale=_round_off_scale(magnitude))
        ranks.append(rank)
        if rank == previous_rank:
            logger.debug(f"Drazin index {k} (rank sequence {ranks})")
            return k
        previous_rank = rank
    # Ranks strictly decrease until they stabilise, so this is unreachable
    raise InternalConsistencyError(f"rank sequence did not stabilise: {ranks}")


def _radical_index(
    a: AlgebraElement, spectral: AlgebraElement, tolerances: Tolerances
) -> int:
    x = mul(a, spectral)
    for k in range(1, a.rep_dim + 2):
        if is_radical(x, tolerances):
            return k
        x = mul(a, x)
    raise InternalConsistencyError(
        f"no power a^k a^Pi with k <= {a.rep_dim + 1} lies in the radical"
    )


def drazin_inverse(
    a: AlgebraElement, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> PDrazinResult:
    """Compute a^D and fill every PDrazinResult field.

    Raises:
        InternalConsistencyError: An axiom residual exceeds tol_res or the
            result leaves the context pattern (numerical breakdown).
    """
    n = a.rep_dim
    index = drazin_index(a, tolerances)
    al = power(a, index)
    big = power(a, 2 * index + 1)
    scale = _round_off_scale(
        np.linalg.matrix_power(np.abs(a.matrix), 2 * index + 1)
    )
    middle = pinv(big.matrix, _rank_tol(a, tolerances), scale)
    raw = AlgebraElement(a.context, al.matrix @ middle @ al.matrix)

    residuals = {
        "commutation": commutation_residual(a, raw),
        "inner_inverse": inner_inverse_residual(a, raw),
        "nilpotency": norm(sub(al, mul(mul(al, a), raw))) / max(1.0, norm(al)),
    }
    bad = {k: v for k, v in residuals.items() if v > tolerances.tol_res}
    if bad:
        logger.error(f"Oracle axiom check failed on {a.context.describe()}: {bad}")
        raise InternalConsistencyError(
            f"Drazin inverse axioms violated (index {index}): "
            + ", ".join(f"{k}={v:.3e}" for k, v in bad.items()),
            residuals,
        )
    if not validate_element(raw, tolerances):
        raise InternalConsistencyError(
            f"Drazin inverse left the pattern of {a.context.describe()}", residuals
        )

    inverse = snap_to_pattern(raw)
    spectral = sub(identity(a.context), mul(a, inverse))
    radical_index = _radical_index(a, spectral, tolerances)
    logger.debug(
        f"Oracle on {a.context.describe()} (rep_dim {n}): "
        f"index {index}, radical index {radical_index}"
    )
    return PDrazinResult(
        inverse=inverse,
        drazin_index=index,
        radical_index=radical_index,
        spectral_idempotent=spectral,
        axiom_residuals=residuals,
    )


def pdrazin(
    a: AlgebraElement, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> PDrazinResult:
    """The p-Drazin inverse.

    In finite dimension it coincides with the Drazin inverse; only the radical
    index depends on the context's Jacobson radical.
    """
    return drazin_inverse(a, tolerances)


def group_inverse(
    a: AlgebraElement, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> AlgebraElement:
    """a^# for elements of Drazin index <= 1."""
    result = drazin_inverse(a, tolerances)
    if result.drazin_index > 1:
        raise NotGroupInvertibleError(result.drazin_index)
    return result.inverse


def quasinilpotence_report(
    a: AlgebraElement, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> QuasinilpotenceReport:
    n = a.rep_dim
    roots = []
    x = a
    for k in range(1, n + 1):
        if k > 1:
            x = mul(x, a)
        roots.append(norm(x) ** (1.0 / k))
    final = norm(x)
    flag = final <= tolerances.tol_res * max(1.0, norm(a)) ** n
    return QuasinilpotenceReport(
        is_quasinilpotent=flag, root_sequence=roots, final_norm=final
    )


def is_quasinilpotent(
    a: AlgebraElement, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> bool:
    """True iff ||a^rep_dim|| <= tol_res * max(1, ||a||)^rep_dim."""
    return quasinilpotence_report(a, tolerances).is_quasinilpotent


def core_nilpotent_parts(
    a: AlgebraElement, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Tuple[AlgebraElement, AlgebraElement]:
    """Return (a^2 a^‡, a a^Π), whose sum is a."""
    result = drazin_inverse(a, tolerances)
    core = mul(mul(a, a), result.inverse)
    nilpotent = mul(a, result.spectral_idempotent)
    return core, nilpotent
