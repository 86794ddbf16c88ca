"""
Random similarities for FullMatrix instances.
"""

import numpy as np

from ..algebra.models import ComplexMatrix


def random_unitary(rng: np.random.Generator, n: int) -> ComplexMatrix:
    """Haar-distributed unitary from the QR factorisation of a complex Gaussian."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.where(np.abs(d) == 0, 1.0, np.abs(d)))
    return q.astype(np.complex128)


def conjugate(m: ComplexMatrix, q: ComplexMatrix) -> ComplexMatrix:
    """q m q^H."""
    return q @ m @ q.conj().T
