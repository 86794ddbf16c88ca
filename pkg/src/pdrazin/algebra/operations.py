"""
Element-level arithmetic, norms and Jacobson-radical geometry.

Every function is pure: inputs are immutable `AlgebraElement` values and a
new element is returned. Structural checks (same context, valid pattern)
raise `StructuralError`.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np
import scipy.linalg

from ..errors import StructuralError
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .models import AlgebraContext, AlgebraElement, ComplexMatrix, ContextKind, Scalar

logger = logging.getLogger(__name__)


def require_same_context(x: AlgebraElement, y: AlgebraElement) -> None:
    if x.context != y.context:
        raise StructuralError(
            f"Context mismatch: {x.context.describe()} vs {y.context.describe()}"
        )


# === CONSTRUCTION ===


def identity(context: AlgebraContext) -> AlgebraElement:
    return AlgebraElement(context, np.eye(context.rep_dim, dtype=np.complex128))


def zero(context: AlgebraContext) -> AlgebraElement:
    n = context.rep_dim
    return AlgebraElement(context, np.zeros((n, n), dtype=np.complex128))


def element(context: AlgebraContext, matrix: ComplexMatrix) -> AlgebraElement:
    """Wrap a matrix as an element and check it against the context pattern."""
    x = AlgebraElement(context, matrix)
    if not validate_element(x):
        raise StructuralError(
            f"Matrix does not match the pattern of {context.describe()} "
            f"(pattern residual {pattern_residual(x.matrix, context):.3e})"
        )
    return x


def from_coefficients(
    context: AlgebraContext, coefficients: Sequence[Scalar]
) -> AlgebraElement:
    """Build c0 + c1 x + ... in TruncatedPolynomial as its Toeplitz representative.

    Coefficients beyond the truncation order are dropped; missing ones are zero.
    """
    if context.kind is not ContextKind.TRUNCATED_POLYNOMIAL:
        raise StructuralError(
            f"from_coefficients needs a TruncatedPolynomial context, got {context.describe()}"
        )
    m = context.dim
    c = np.zeros(m, dtype=np.complex128)
    values = np.asarray(list(coefficients)[:m], dtype=np.complex128)
    c[: values.size] = values
    first_col = np.zeros(m, dtype=np.complex128)
    first_col[0] = c[0]
    return AlgebraElement(context, scipy.linalg.toeplitz(first_col, c))


def coefficients(x: AlgebraElement) -> List[complex]:
    """Series coefficients of a TruncatedPolynomial element (diagonal averages)."""
    if x.context.kind is not ContextKind.TRUNCATED_POLYNOMIAL:
        raise StructuralError(
            f"coefficients needs a TruncatedPolynomial context, got {x.context.describe()}"
        )
    return _toeplitz_coefficients(x.matrix)


def _toeplitz_coefficients(m: ComplexMatrix) -> List[complex]:
    return [complex(np.mean(np.diagonal(m, k))) for k in range(m.shape[0])]


def component(x: AlgebraElement, index: int) -> AlgebraElement:
    """Return block `index` of a DirectSum element as an element of that summand."""
    ctx = x.context
    if ctx.kind is not ContextKind.DIRECT_SUM:
        raise StructuralError(
            f"component needs a DirectSum context, got {ctx.describe()}"
        )
    if not 0 <= index < len(ctx.summands):
        raise StructuralError(
            f"Summand index {index} out of range for {len(ctx.summands)} summands"
        )
    start = ctx.offsets[index]
    size = ctx.summands[index].rep_dim
    return AlgebraElement(
        ctx.summands[index], x.matrix[start : start + size, start : start + size]
    )


def assemble_direct_sum(
    context: AlgebraContext, parts: Sequence[AlgebraElement]
) -> AlgebraElement:
    """Inverse of `component`: place summand elements on the block diagonal."""
    if context.kind is not ContextKind.DIRECT_SUM:
        raise StructuralError(
            f"assemble_direct_sum needs a DirectSum context, got {context.describe()}"
        )
    if len(parts) != len(context.summands):
        raise StructuralError(
            f"Expected {len(context.summands)} parts, got {len(parts)}"
        )
    for part, summand in zip(parts, context.summands):
        if part.context != summand:
            raise StructuralError(
                f"Part context {part.context.describe()} does not match {summand.describe()}"
            )
    return AlgebraElement(context, scipy.linalg.block_diag(*[p.matrix for p in parts]))


# === ARITHMETIC ===


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Algebra product.

    For TruncatedPolynomial the matrix product of Toeplitz representatives is
    the truncated coefficient convolution.
    """
    require_same_context(x, y)
    return AlgebraElement(x.context, x.matrix @ y.matrix)


def add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    require_same_context(x, y)
    return AlgebraElement(x.context, x.matrix + y.matrix)


def sub(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    require_same_context(x, y)
    return AlgebraElement(x.context, x.matrix - y.matrix)


def scale(x: AlgebraElement, factor: Scalar) -> AlgebraElement:
    return AlgebraElement(x.context, complex(factor) * x.matrix)


def power(x: AlgebraElement, k: int) -> AlgebraElement:
    """x**k by repeated multiplication, x**0 = 1."""
    if k < 0:
        raise StructuralError(f"Negative power {k} is not an algebra operation")
    result = np.eye(x.rep_dim, dtype=np.complex128)
    for _ in range(k):
        result = result @ x.matrix
    return AlgebraElement(x.context, result)


# === NORMS AND RADICAL GEOMETRY ===


def norm(x: AlgebraElement) -> float:
    """Frobenius norm of the representing matrix (submultiplicative)."""
    return float(np.linalg.norm(x.matrix, "fro"))


def relative_difference(x: AlgebraElement, y: AlgebraElement) -> float:
    """||x - y|| / max(1, ||y||), the comparison used for formula-vs-reference checks."""
    require_same_context(x, y)
    return float(np.linalg.norm(x.matrix - y.matrix, "fro")) / max(1.0, norm(y))


def _radical_complement(m: ComplexMatrix, context: AlgebraContext) -> ComplexMatrix:
    """Coordinates of a valid matrix that lie outside the radical pattern."""
    kind = context.kind
    if kind is ContextKind.FULL_MATRIX:
        return m
    if kind in (ContextKind.UPPER_TRIANGULAR, ContextKind.TRUNCATED_POLYNOMIAL):
        return np.diag(np.diagonal(m))
    out = np.zeros_like(m)
    for start, summand in zip(context.offsets, context.summands):
        stop = start + summand.rep_dim
        block = m[start:stop, start:stop]
        out[start:stop, start:stop] = _radical_complement(block, summand)
    return out


def radical_distance(x: AlgebraElement) -> float:
    """Frobenius distance from x to the Jacobson radical of its context.

    FullMatrix: the full norm. UpperTriangular: norm of the diagonal part.
    TruncatedPolynomial: sqrt(m) * |c0|. DirectSum: root-sum-square over blocks.
    """
    ctx = x.context
    if ctx.kind is ContextKind.TRUNCATED_POLYNOMIAL:
        c0 = complex(np.mean(np.diagonal(x.matrix)))
        return float(np.sqrt(ctx.dim) * abs(c0))
    if ctx.kind is ContextKind.DIRECT_SUM:
        parts = [radical_distance(component(x, i)) for i in range(len(ctx.summands))]
        return float(np.sqrt(sum(d * d for d in parts)))
    return float(np.linalg.norm(_radical_complement(x.matrix, ctx), "fro"))


def is_radical(x: AlgebraElement, tolerances: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """Membership test: radical_distance(x) <= tol_rad * max(1, norm(x))."""
    return radical_distance(x) <= tolerances.tol_rad * max(1.0, norm(x))


def radical_part(x: AlgebraElement) -> AlgebraElement:
    """Projection of x onto the radical (x minus its non-radical coordinates)."""
    ctx = x.context
    if ctx.kind is ContextKind.TRUNCATED_POLYNOMIAL:
        c = _toeplitz_coefficients(x.matrix)
        c[0] = 0j
        return from_coefficients(ctx, c)
    if ctx.kind is ContextKind.DIRECT_SUM:
        return assemble_direct_sum(
            ctx, [radical_part(component(x, i)) for i in range(len(ctx.summands))]
        )
    return AlgebraElement(ctx, x.matrix - _radical_complement(x.matrix, ctx))


# === PATTERN VALIDATION ===


def project_to_pattern(m: ComplexMatrix, context: AlgebraContext) -> ComplexMatrix:
    """Nearest matrix (Frobenius) that matches the context's structural pattern."""
    m = np.asarray(m, dtype=np.complex128)
    kind = context.kind
    if kind is ContextKind.FULL_MATRIX:
        return m.copy()
    if kind is ContextKind.UPPER_TRIANGULAR:
        return np.triu(m)
    if kind is ContextKind.TRUNCATED_POLYNOMIAL:
        return from_coefficients(context, _toeplitz_coefficients(m)).matrix.copy()
    out = np.zeros_like(m)
    for start, summand in zip(context.offsets, context.summands):
        stop = start + summand.rep_dim
        block = m[start:stop, start:stop]
        out[start:stop, start:stop] = project_to_pattern(block, summand)
    return out


def pattern_residual(m: ComplexMatrix, context: AlgebraContext) -> float:
    """Frobenius norm of the coordinates forbidden by the context pattern."""
    return float(np.linalg.norm(m - project_to_pattern(m, context), "fro"))


def validate_element(
    x: AlgebraElement, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> bool:
    """True iff x is finite and matches its context pattern within tol_pattern."""
    if not np.all(np.isfinite(x.matrix)):
        return False
    residual = pattern_residual(x.matrix, x.context)
    ok = residual <= tolerances.tol_pattern * max(1.0, norm(x))
    if not ok:
        logger.debug(
            f"Element rejected by {x.context.describe()} pattern: residual {residual:.3e}"
        )
    return ok


def snap_to_pattern(x: AlgebraElement) -> AlgebraElement:
    """Replace x by its pattern projection (used after numerically validated results)."""
    return AlgebraElement(x.context, project_to_pattern(x.matrix, x.context))


def embed(
    context: AlgebraContext, block: ComplexMatrix, coordinates: Optional[Sequence[int]]
) -> AlgebraElement:
    """Place `block` on the given coordinate subset (rows and columns) of a zero matrix."""
    n = context.rep_dim
    m = np.zeros((n, n), dtype=np.complex128)
    idx = np.arange(n) if coordinates is None else np.asarray(coordinates, dtype=int)
    if len(idx):
        m[np.ix_(idx, idx)] = block
    return AlgebraElement(context, m)
