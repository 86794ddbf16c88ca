"""
Seeded random instances satisfying each formula's hypotheses.
"""

from .elements import (
    block_element,
    clip_index,
    gen_core_nilpotent,
    gen_with_index,
    random_index,
    reachable_indices,
)
from .instances import IDENTITY_BUILDERS, KIND_BUILDERS, gen_instance, gen_kind
from .models import RandomSpec
from .pairs import (
    gen_commuting_pair,
    gen_lambda_pair,
    gen_orthogonal_pair,
    gen_orthogonal_tuple,
    gen_radical_mixed_pair,
    gen_radical_pair,
    gen_special_pair,
    root_order,
)
from .similarity import conjugate, random_unitary

__all__ = [
    "IDENTITY_BUILDERS",
    "KIND_BUILDERS",
    "RandomSpec",
    "block_element",
    "clip_index",
    "conjugate",
    "gen_commuting_pair",
    "gen_core_nilpotent",
    "gen_instance",
    "gen_kind",
    "gen_lambda_pair",
    "gen_orthogonal_pair",
    "gen_orthogonal_tuple",
    "gen_radical_mixed_pair",
    "gen_radical_pair",
    "gen_special_pair",
    "gen_with_index",
    "random_index",
    "random_unitary",
    "reachable_indices",
    "root_order",
]
