"""
Seeded pairs and tuples satisfying the hypotheses of each formula family.
"""

import logging
import math
from typing import List, Optional, Tuple, Union

import numpy as np
import scipy.linalg

from ..algebra import (
    AlgebraContext,
    AlgebraElement,
    ContextKind,
    add,
    assemble_direct_sum,
    embed,
    from_coefficients,
    identity,
    mul,
    power,
    scale,
    zero,
)
from ..algebra.models import ComplexMatrix
from ..identities.models import LambdaPair, SpecialCase
from .elements import (
    block_element,
    clip_index,
    element_parts,
    monomial_times_unit,
    random_index,
    random_subsets,
)
from .models import RandomSpec
from .similarity import conjugate, random_unitary

logger = logging.getLogger(__name__)

Pair = Tuple[AlgebraElement, AlgebraElement]

# Base elements of commuting pairs keep their index at most this
MAX_BASE_INDEX = 4
# Weighted-shift blocks stay this small when |λ| != 1
MAX_SCALED_BLOCK = 3


# === COMMUTING PAIRS ===


def random_polynomial(
    x: AlgebraElement, rng: np.random.Generator, orders: Tuple[int, ...] = (0, 1, 2)
) -> AlgebraElement:
    """α x^j (1 + η x) with j from `orders`, α in [0.8, 1.25], η in [0, 0.2]."""
    j = int(rng.choice(orders))
    alpha = rng.uniform(0.8, 1.25)
    eta = rng.uniform(0.0, 0.2)
    factor = add(identity(x.context), scale(x, eta))
    return scale(mul(power(x, j), factor), alpha)


def _base_parts(spec: RandomSpec, rng: np.random.Generator, floor: int = 0) -> Pair:
    target = min(max(spec.target_index, floor), MAX_BASE_INDEX)
    target = clip_index(spec.context, target)
    return element_parts(spec.context, rng, target)


def gen_commuting_pair(spec: RandomSpec) -> Pair:
    """(p(m), q(m)) for one random base element m and random low-degree p, q."""
    rng = spec.rng()
    core, nil = _base_parts(spec, rng)
    m = add(core, nil)
    return random_polynomial(m, rng), random_polynomial(m, rng)


def gen_special_pair(spec: RandomSpec, case: Union[SpecialCase, str]) -> Pair:
    """Commuting pair whose `a` is nilpotent, invertible or group invertible.

    `a` is a polynomial in the nilpotent part N, in the base m (with nonzero
    constant term) or in the core part C of the base, respectively.
    """
    case = SpecialCase(case)
    rng = spec.rng()
    floor = 2 if case is SpecialCase.NILPOTENT else 0
    core, nil = _base_parts(spec, rng, floor)
    m = add(core, nil)
    if case is SpecialCase.NILPOTENT:
        a = random_polynomial(nil, rng, orders=(1,))
    elif case is SpecialCase.INVERTIBLE:
        a = random_polynomial(m, rng, orders=(0,))
    else:
        a = random_polynomial(core, rng, orders=(1, 2))
    return a, random_polynomial(m, rng)


# === ORTHOGONAL PAIRS AND TUPLES ===


def _block_tuple(
    context: AlgebraContext, rng: np.random.Generator, count: int, first_target: int
) -> List[AlgebraElement]:
    n = context.dim
    parts = random_subsets(rng, n, count)
    q = random_unitary(rng, n) if context.kind is ContextKind.FULL_MATRIX else None
    elements = []
    for k, coords in enumerate(parts):
        size = len(coords)
        if size == 0:
            elements.append(zero(context))
            continue
        target = min(first_target, size) if k == 0 else int(rng.integers(0, size + 1))
        block = block_element(context, rng, size, target)
        x = embed(context, block, coords)
        if q is not None:
            x = AlgebraElement(context, conjugate(x.matrix, q))
        elements.append(x)
    return elements


def _orthogonal_pair(
    context: AlgebraContext,
    rng: np.random.Generator,
    target: int,
    unbalanced: bool = False,
) -> Pair:
    kind = context.kind
    if kind is ContextKind.TRUNCATED_POLYNOMIAL:
        m = context.dim
        orders = [i for i in range(m + 1) if not (unbalanced and 2 * i == m)]
        i = int(rng.choice(orders))
        return (
            monomial_times_unit(context, rng, i),
            monomial_times_unit(context, rng, m - i),
        )
    if kind is ContextKind.DIRECT_SUM:
        pairs = [_orthogonal_pair(s, rng, target, unbalanced) for s in context.summands]
        return (
            assemble_direct_sum(context, [p[0] for p in pairs]),
            assemble_direct_sum(context, [p[1] for p in pairs]),
        )
    a, b = _block_tuple(context, rng, 2, target)
    return a, b


def gen_orthogonal_pair(spec: RandomSpec) -> Pair:
    """(a, b) with ab = ba = 0 exactly before similarity.

    Matrix kinds place the two elements on complementary coordinate sets;
    TruncatedPolynomial uses x^i·u and x^(m-i)·v.
    """
    return _orthogonal_pair(spec.context, spec.rng(), spec.target_index)


def _orthogonal_tuple(
    context: AlgebraContext, rng: np.random.Generator, count: int, target: int
) -> List[AlgebraElement]:
    kind = context.kind
    if kind is ContextKind.TRUNCATED_POLYNOMIAL:
        m = context.dim
        low = math.ceil(m / 2)
        return [
            monomial_times_unit(context, rng, int(rng.integers(low, m + 1)))
            for _ in range(count)
        ]
    if kind is ContextKind.DIRECT_SUM:
        tuples = [_orthogonal_tuple(s, rng, count, target) for s in context.summands]
        return [
            assemble_direct_sum(context, [t[k] for t in tuples]) for k in range(count)
        ]
    return _block_tuple(context, rng, count, target)


def gen_orthogonal_tuple(spec: RandomSpec, count: int = 3) -> List[AlgebraElement]:
    """`count` pairwise orthogonal elements (a_i a_j = 0 for i != j)."""
    return _orthogonal_tuple(spec.context, spec.rng(), count, spec.target_index)


# === RADICAL PAIRS ===


def _radical_element(
    context: AlgebraContext, rng: np.random.Generator
) -> AlgebraElement:
    kind = context.kind
    n = context.dim
    if kind is ContextKind.FULL_MATRIX:
        return zero(context)
    if kind is ContextKind.UPPER_TRIANGULAR:
        z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        return AlgebraElement(context, np.triu(z, 1) * (0.5 / math.sqrt(n)))
    if kind is ContextKind.TRUNCATED_POLYNOMIAL:
        c = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) * 0.5
        c[0] = 0
        return from_coefficients(context, c)
    return assemble_direct_sum(
        context, [_radical_element(s, rng) for s in context.summands]
    )


def gen_radical_pair(spec: RandomSpec) -> Pair:
    """Two elements of the Jacobson radical, exactly (zero in FullMatrix)."""
    rng = spec.rng()
    return _radical_element(spec.context, rng), _radical_element(spec.context, rng)


def gen_radical_mixed_pair(spec: RandomSpec) -> Pair:
    """a in the radical with b either in the radical or an arbitrary element."""
    rng = spec.rng()
    a = _radical_element(spec.context, rng)
    if rng.random() < 0.5:
        return a, _radical_element(spec.context, rng)
    core, nil = element_parts(
        spec.context, rng, random_index(spec.context, rng, spec.context.rep_dim)
    )
    return a, add(core, nil)


# === λ-COMMUTING PAIRS ===


def root_order(lam: complex) -> Optional[int]:
    """Smallest d in 2..4 with λ^d = 1 (λ != 1), else None."""
    if abs(lam - 1) < 1e-12:
        return None
    for d in (2, 3, 4):
        if abs(lam**d - 1) < 1e-12:
            return d
    return None


def _shift(d: int) -> ComplexMatrix:
    return np.diag(np.ones(d - 1, dtype=np.complex128), 1)


def _geometric_diag(lam: complex, d: int, reverse: bool) -> ComplexMatrix:
    """diag(λ^(d-1), ..., 1) (or its reverse ratio), normalised to largest modulus 1."""
    exps = np.arange(d - 1, -1, -1) if reverse else np.arange(d) - (d - 1)
    values = np.array([lam ** int(k) for k in exps], dtype=np.complex128)
    return np.diag(values / np.max(np.abs(values)))


def _weyl_block(
    rng: np.random.Generator, lam: complex, d: int
) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """a = sC, b = tS with clock C = diag(λ^j) and cyclic shift S, so CS = λ SC."""
    clock = np.diag(np.array([lam**j for j in range(d)], dtype=np.complex128))
    cyclic = np.roll(np.eye(d, dtype=np.complex128), 1, axis=0)
    return rng.uniform(1.0, 1.25) * clock, rng.uniform(0.5, 0.8) * cyclic


def _triangular_lambda_blocks(
    rng: np.random.Generator, n: int, lam: complex, target: int, allow_weyl: bool
) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """Block-diagonal (a, b) with ab = λ ba built from weighted-shift and scalar blocks."""
    order = root_order(lam) if allow_weyl else None
    unimodular = abs(abs(lam) - 1) < 1e-12
    a_blocks: List[ComplexMatrix] = []
    b_blocks: List[ComplexMatrix] = []
    remaining = n
    while remaining > 0:
        weyl_fits = order is not None and order <= remaining
        if weyl_fits and (not a_blocks or rng.random() < 0.3):
            a0, b0 = _weyl_block(rng, lam, order)
            d = order
        else:
            cap = remaining if unimodular else min(remaining, MAX_SCALED_BLOCK)
            kind = int(rng.integers(0, 4))
            if kind < 2 and cap >= 2:
                d = int(rng.integers(2, cap + 1))
                s, t = rng.uniform(0.8, 1.25), rng.uniform(0.5, 1.0)
                if kind == 0:
                    a0, b0 = s * _geometric_diag(lam, d, True), t * _shift(d)
                else:
                    a0, b0 = t * _shift(d), s * _geometric_diag(lam, d, False)
            else:
                d = int(rng.integers(1, min(remaining, MAX_SCALED_BLOCK) + 1))
                block = block_element(
                    AlgebraContext.upper_triangular(d), rng, d, min(target, d)
                )
                empty = np.zeros((d, d), dtype=np.complex128)
                a0, b0 = (block, empty) if kind != 3 else (empty, block)
        a_blocks.append(a0)
        b_blocks.append(b0)
        remaining -= d
    return scipy.linalg.block_diag(*a_blocks), scipy.linalg.block_diag(*b_blocks)


def _poly_commuting_pair(
    context: AlgebraContext, rng: np.random.Generator, target: int
) -> Pair:
    """Commuting pair in TruncatedPolynomial whose difference has a clean leading term."""
    m = context.dim
    core, nil = element_parts(context, rng, clip_index(context, target))
    a = add(core, nil)
    a_order = _leading_order(a)
    choices = [j for j in range(1, m + 1) if j != a_order]
    b = monomial_times_unit(context, rng, int(rng.choice(choices)))
    return a, b


def _leading_order(x: AlgebraElement) -> int:
    row = x.matrix[0]
    nonzero = np.flatnonzero(row)
    return int(nonzero[0]) if nonzero.size else x.context.dim


def _lambda_pair(
    context: AlgebraContext, rng: np.random.Generator, lam: complex, target: int
) -> Pair:
    kind = context.kind
    if kind is ContextKind.TRUNCATED_POLYNOMIAL:
        if abs(lam - 1) < 1e-12:
            return _poly_commuting_pair(context, rng, target)
        return _orthogonal_pair(context, rng, target, unbalanced=True)
    if kind is ContextKind.DIRECT_SUM:
        pairs = [_lambda_pair(s, rng, lam, target) for s in context.summands]
        return (
            assemble_direct_sum(context, [p[0] for p in pairs]),
            assemble_direct_sum(context, [p[1] for p in pairs]),
        )
    full = kind is ContextKind.FULL_MATRIX
    a, b = _triangular_lambda_blocks(rng, context.dim, lam, target, allow_weyl=full)
    if full:
        q = random_unitary(rng, context.dim)
        a, b = conjugate(a, q), conjugate(b, q)
    return AlgebraElement(context, a), AlgebraElement(context, b)


def gen_lambda_pair(spec: RandomSpec) -> LambdaPair:
    """A pair with ab = λ ba.

    Matrix kinds assemble weighted-shift blocks (diag(λ^(d-1), ..., 1) with an
    upper shift, or a shift with the reciprocal diagonal) and scalar blocks
    with b = 0 or a = 0. FullMatrix adds clock/shift blocks, invertible on both
    sides, when λ is a root of unity of order 2..4. A commutative algebra only
    has orthogonal pairs for λ != 1.
    """
    lam = spec.require_lambda()
    a, b = _lambda_pair(spec.context, spec.rng(), lam, spec.target_index)
    logger.debug(f"Generated λ-pair (λ={lam}) in {spec.context.describe()}")
    return LambdaPair(a, b, lam)


__all__ = [
    "gen_commuting_pair",
    "gen_lambda_pair",
    "gen_orthogonal_pair",
    "gen_orthogonal_tuple",
    "gen_radical_mixed_pair",
    "gen_radical_pair",
    "gen_special_pair",
    "random_polynomial",
    "root_order",
]
