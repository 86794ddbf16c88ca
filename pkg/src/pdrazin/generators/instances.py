"""
Instance builders keyed by identity tag or by generator kind.

`gen_instance` is the single entry point used by the fuzz runner and the `gen`
command: it returns an InstanceFile whose elements satisfy the hypotheses of
the requested identity.
"""

import logging
from typing import Callable, Dict

from ..identities.models import SpecialCase
from ..instances.models import InstanceFile
from .elements import gen_with_index
from .models import RandomSpec
from .pairs import (
    gen_commuting_pair,
    gen_lambda_pair,
    gen_orthogonal_pair,
    gen_orthogonal_tuple,
    gen_radical_mixed_pair,
    gen_radical_pair,
    gen_special_pair,
)

logger = logging.getLogger(__name__)

Builder = Callable[[RandomSpec], InstanceFile]

ORTHOGONAL_TUPLE_SIZE = 3


def _single(spec: RandomSpec) -> InstanceFile:
    return InstanceFile(spec.context, {"a": gen_with_index(spec)})


def _commuting(spec: RandomSpec) -> InstanceFile:
    a, b = gen_commuting_pair(spec)
    return InstanceFile(spec.context, {"a": a, "b": b})


def _orthogonal(spec: RandomSpec) -> InstanceFile:
    a, b = gen_orthogonal_pair(spec)
    return InstanceFile(spec.context, {"a": a, "b": b})


def _orthogonal_tuple(spec: RandomSpec) -> InstanceFile:
    elements = gen_orthogonal_tuple(spec, ORTHOGONAL_TUPLE_SIZE)
    return InstanceFile(
        spec.context, {f"a{i + 1}": x for i, x in enumerate(elements)}
    )


def _radical(spec: RandomSpec) -> InstanceFile:
    a, b = gen_radical_pair(spec)
    return InstanceFile(spec.context, {"a": a, "b": b})


def _radical_mixed(spec: RandomSpec) -> InstanceFile:
    a, b = gen_radical_mixed_pair(spec)
    return InstanceFile(spec.context, {"a": a, "b": b})


def _lambda(spec: RandomSpec) -> InstanceFile:
    pair = gen_lambda_pair(spec)
    return InstanceFile(spec.context, {"a": pair.a, "b": pair.b}, lam=pair.lam)


def _special(case: SpecialCase) -> Builder:
    def build(spec: RandomSpec) -> InstanceFile:
        a, b = gen_special_pair(spec, case)
        return InstanceFile(spec.context, {"a": a, "b": b})

    return build


IDENTITY_BUILDERS: Dict[str, Builder] = {
    "oracle": _single,
    "lem2.1": _commuting,
    "lem2.2": _radical_mixed,
    "thm2.3": _single,
    "cor2.4": _single,
    "thm2.5": _orthogonal,
    "cor2.6": _orthogonal_tuple,
    "thm2.7": _commuting,
    "cor2.8-nilpotent": _special(SpecialCase.NILPOTENT),
    "cor2.8-invertible": _special(SpecialCase.INVERTIBLE),
    "cor2.8-group": _special(SpecialCase.GROUP),
    "lem3.1": _lambda,
    "lem3.2": _lambda,
    "thm3.3": _lambda,
    "cor3.4": _lambda,
    "thm3.5": _lambda,
    "cor3.6": _lambda,
}

KIND_BUILDERS: Dict[str, Builder] = {
    "index": _single,
    "commuting": _commuting,
    "orthogonal": _orthogonal,
    "lambda": _lambda,
    "radical": _radical,
}


def gen_instance(identity: str, spec: RandomSpec) -> InstanceFile:
    """Hypothesis-satisfying instance for the identity tag `identity`.

    Raises:
        KeyError: Unknown identity tag
        GeneratorError: The spec cannot be satisfied (e.g. missing λ)
    """
    instance = IDENTITY_BUILDERS[identity](spec)
    instance.identity = identity
    instance.seed = int(spec.seed)
    logger.debug(
        f"Generated {identity} instance (seed {spec.seed}) in {spec.context.describe()}"
    )
    return instance


def gen_kind(kind: str, spec: RandomSpec) -> InstanceFile:
    """Instance of a generator kind (index, commuting, orthogonal, lambda, radical)."""
    instance = KIND_BUILDERS[kind](spec)
    instance.seed = int(spec.seed)
    return instance
