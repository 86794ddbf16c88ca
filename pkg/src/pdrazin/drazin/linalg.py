"""
Rank determination and pseudoinverse by singular value thresholding.
"""

from typing import Optional

import numpy as np
import scipy.linalg

from ..algebra.models import ComplexMatrix


def spectral_norm(m: ComplexMatrix) -> float:
    """Largest singular value (0 for an empty or zero matrix)."""
    if m.size == 0:
        return 0.0
    return float(scipy.linalg.svdvals(m)[0])


def _reference(s: np.ndarray, scale: Optional[float]) -> float:
    smax = float(s[0]) if s.size else 0.0
    return max(smax, float(scale or 0.0))


def numerical_rank(
    m: ComplexMatrix, tol: float, scale: Optional[float] = None
) -> int:
    """Number of singular values above tol * max(sigma_max, scale).

    `scale` raises the reference to a round-off floor, so that the noise left in
    an exactly vanishing power counts as rank 0.
    """
    s = scipy.linalg.svdvals(np.asarray(m, dtype=np.complex128))
    ref = _reference(s, scale)
    if ref == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * ref))


def pinv(m: ComplexMatrix, tol: float, scale: Optional[float] = None) -> ComplexMatrix:
    """Moore-Penrose pseudoinverse, discarding singular values at or below tol * reference."""
    m = np.asarray(m, dtype=np.complex128)
    s = scipy.linalg.svdvals(m)
    ref = _reference(s, scale)
    if ref == 0.0:
        return np.zeros(m.shape[::-1], dtype=np.complex128)
    return scipy.linalg.pinv(m, atol=tol * ref, rtol=0.0)
