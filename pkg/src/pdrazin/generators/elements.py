"""
Seeded elements with a prescribed Drazin index.

Elements are built as an invertible core block plus nilpotent Jordan-type
blocks at unit scale: core eigenvalues have modulus in [0.9, 1.1] and phase
in [-π/8, π/8], nilpotent blocks have a unit superdiagonal. FullMatrix
elements are then conjugated by a random unitary; the pattern contexts keep
the identity similarity so their structure stays exact.
"""

import logging
import math
from typing import List, Sequence, Set, Tuple

import numpy as np
import scipy.linalg

from ..algebra import (
    AlgebraContext,
    AlgebraElement,
    ContextKind,
    add,
    assemble_direct_sum,
    from_coefficients,
)
from ..algebra.models import ComplexMatrix
from ..errors import GeneratorError
from .models import RandomSpec
from .similarity import conjugate, random_unitary

logger = logging.getLogger(__name__)

CORE_MODULUS = (0.9, 1.1)
CORE_PHASE = math.pi / 8
COUPLING = 0.1


# === REACHABILITY ===


def poly_index_for_order(m: int, j: int) -> int:
    """Nilpotency index of x^j·(unit) in TruncatedPolynomial(m)."""
    return 1 if j >= m else -(-m // j)


def reachable_indices(context: AlgebraContext) -> Set[int]:
    """Drazin indices an element of `context` can have."""
    kind = context.kind
    if kind is ContextKind.TRUNCATED_POLYNOMIAL:
        m = context.dim
        return {0, 1} | {poly_index_for_order(m, j) for j in range(1, m)}
    if kind is ContextKind.DIRECT_SUM:
        result: Set[int] = set()
        for s in context.summands:
            result |= reachable_indices(s)
        return result
    return set(range(context.dim + 1))


def clip_index(context: AlgebraContext, target: int) -> int:
    """Largest reachable index not above `target` (0 is always reachable)."""
    return max(k for k in reachable_indices(context) if k <= target)


# === BLOCKS ===


def unit_scalars(rng: np.random.Generator, count: int) -> np.ndarray:
    modulus = rng.uniform(*CORE_MODULUS, size=count)
    phase = rng.uniform(-CORE_PHASE, CORE_PHASE, size=count)
    return modulus * np.exp(1j * phase)


def _small_upper(rng: np.random.Generator, size: int, offset: int) -> ComplexMatrix:
    """Strictly upper entries from diagonal `offset` on, scaled to COUPLING / sqrt(size)."""
    z = rng.standard_normal((size, size)) + 1j * rng.standard_normal((size, size))
    return np.triu(z, offset) * (COUPLING / math.sqrt(2 * max(size, 1)))


def core_block(rng: np.random.Generator, size: int) -> ComplexMatrix:
    """Invertible upper-triangular block with unit-scale eigenvalues."""
    return np.diag(unit_scalars(rng, size)) + _small_upper(rng, size, 1)


def nilpotent_block(rng: np.random.Generator, size: int) -> ComplexMatrix:
    """Strictly upper-triangular block of nilpotency index exactly `size`."""
    block = np.diag(np.ones(size - 1, dtype=np.complex128), 1)
    return block + _small_upper(rng, size, 2)


def jordan_sizes(
    rng: np.random.Generator, nilpotent_size: int, largest: int
) -> List[int]:
    """Random block sizes summing to `nilpotent_size` whose maximum is `largest`."""
    sizes = [largest]
    remaining = nilpotent_size - largest
    while remaining > 0:
        size = int(rng.integers(1, min(largest, remaining) + 1))
        sizes.append(size)
        remaining -= size
    return sizes


def triangular_parts(
    rng: np.random.Generator, n: int, target: int
) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """Upper-triangular (core, nilpotent) matrices of size n with index `target`."""
    if not 0 <= target <= n:
        raise GeneratorError(f"index {target} not reachable in dimension {n}")
    nil_size = 0 if target == 0 else int(rng.integers(target, n + 1))
    core_size = n - nil_size
    core = np.zeros((n, n), dtype=np.complex128)
    nil = np.zeros((n, n), dtype=np.complex128)
    if core_size:
        core[:core_size, :core_size] = core_block(rng, core_size)
    if nil_size:
        blocks = [nilpotent_block(rng, s) for s in jordan_sizes(rng, nil_size, target)]
        nil[core_size:, core_size:] = scipy.linalg.block_diag(*blocks)
    return core, nil


def unit_coefficients(rng: np.random.Generator, m: int) -> np.ndarray:
    """Coefficients of a unit of TruncatedPolynomial(m) with unit-scale constant term."""
    c = (rng.standard_normal(m) + 1j * rng.standard_normal(m)) * (COUPLING * 3)
    c[0] = unit_scalars(rng, 1)[0]
    return c


def monomial_times_unit(
    context: AlgebraContext, rng: np.random.Generator, order: int
) -> AlgebraElement:
    """x^order · u for a random unit u (zero when order >= m)."""
    m = context.dim
    c = np.zeros(m, dtype=np.complex128)
    if order < m:
        c[order:] = unit_coefficients(rng, m - order)
    return from_coefficients(context, c)


def _poly_order_for_index(
    context: AlgebraContext, rng: np.random.Generator, target: int
) -> int:
    m = context.dim
    if target == 0:
        return 0
    if target == 1:
        return m
    orders = [j for j in range(1, m) if poly_index_for_order(m, j) == target]
    if not orders:
        raise GeneratorError(
            f"index {target} is not reachable in {context.describe()}; "
            f"reachable: {sorted(reachable_indices(context))}"
        )
    return int(rng.choice(orders))


# === ELEMENTS ===


def element_parts(
    context: AlgebraContext,
    rng: np.random.Generator,
    target: int,
) -> Tuple[AlgebraElement, AlgebraElement]:
    """Return (core, nilpotent) with core + nilpotent of Drazin index `target`.

    Both parts are polynomials in their sum, so they commute with it and with
    each other.
    """
    kind = context.kind
    if target not in reachable_indices(context):
        raise GeneratorError(
            f"index {target} is not reachable in {context.describe()}; "
            f"reachable: {sorted(reachable_indices(context))}"
        )

    if kind is ContextKind.TRUNCATED_POLYNOMIAL:
        order = _poly_order_for_index(context, rng, target)
        x = monomial_times_unit(context, rng, order)
        zero = from_coefficients(context, [])
        return (x, zero) if order == 0 else (zero, x)

    if kind is ContextKind.DIRECT_SUM:
        targets = distribute_index(context, rng, target)
        parts = [element_parts(s, rng, t) for s, t in zip(context.summands, targets)]
        return (
            assemble_direct_sum(context, [p[0] for p in parts]),
            assemble_direct_sum(context, [p[1] for p in parts]),
        )

    core, nil = triangular_parts(rng, context.dim, target)
    if kind is ContextKind.FULL_MATRIX:
        q = random_unitary(rng, context.dim)
        core, nil = conjugate(core, q), conjugate(nil, q)
    return AlgebraElement(context, core), AlgebraElement(context, nil)


def distribute_index(
    context: AlgebraContext, rng: np.random.Generator, target: int
) -> List[int]:
    """Summand indices whose maximum is `target`."""
    carriers = [
        i for i, s in enumerate(context.summands) if target in reachable_indices(s)
    ]
    chosen = int(rng.choice(carriers))
    targets = []
    for i, s in enumerate(context.summands):
        if i == chosen:
            targets.append(target)
        else:
            options = sorted(k for k in reachable_indices(s) if k <= target)
            targets.append(int(rng.choice(options)))
    return targets


def random_index(
    context: AlgebraContext, rng: np.random.Generator, upper: int, lower: int = 0
) -> int:
    """Uniform choice among reachable indices in lower..upper.

    Raises:
        GeneratorError: No reachable index lies in the range.
    """
    choices = sorted(k for k in reachable_indices(context) if lower <= k <= upper)
    if not choices:
        raise GeneratorError(
            f"no Drazin index in {lower}..{upper} is reachable in {context.describe()}"
        )
    return int(rng.choice(choices))


def gen_with_index(spec: RandomSpec) -> AlgebraElement:
    """Random element whose Drazin index is exactly spec.target_index.

    Raises:
        GeneratorError: The index is not reachable in the context.
    """
    core, nil = element_parts(spec.context, spec.rng(), spec.target_index)
    logger.debug(
        f"Generated element of index {spec.target_index} in {spec.context.describe()}"
    )
    return add(core, nil)


def gen_core_nilpotent(spec: RandomSpec) -> Tuple[AlgebraElement, AlgebraElement]:
    """The (core, nilpotent) parts of the element gen_with_index(spec) returns."""
    return element_parts(spec.context, spec.rng(), spec.target_index)


def block_element(
    context: AlgebraContext,
    rng: np.random.Generator,
    size: int,
    target: int,
) -> ComplexMatrix:
    """Matrix of a size x size block of index `target`, pattern-compatible with `context`.

    Used for blocks that are embedded on coordinate subsets of FullMatrix or
    UpperTriangular elements; FullMatrix blocks get their own similarity.
    """
    core, nil = triangular_parts(rng, size, target)
    m = core + nil
    if context.kind is ContextKind.FULL_MATRIX:
        m = conjugate(m, random_unitary(rng, size))
    return m


def random_subsets(
    rng: np.random.Generator, n: int, count: int
) -> List[Sequence[int]]:
    """Partition range(n) into `count` sorted subsets, nonempty while n allows."""
    order = rng.permutation(n)
    if count <= n:
        cuts = np.sort(rng.choice(np.arange(1, n), size=count - 1, replace=False))
    else:
        cuts = np.concatenate([np.arange(1, n), np.full(count - n, n)])
    return [sorted(int(i) for i in part) for part in np.split(order, cuts)]
