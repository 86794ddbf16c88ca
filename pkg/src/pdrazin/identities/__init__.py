"""
Identity engine: constructive formulas for p-Drazin inverses of products and sums.
"""

from .commuting import (
    add_commuting,
    add_commuting_trace,
    add_orthogonal,
    add_orthogonal_n,
    one_plus_from_sum,
    product_commuting,
    specialize_2_8,
    specialize_2_8_trace,
)
from .hypotheses import (
    gate,
    group_residual,
    invertibility_residual,
    lambda_residual,
    nilpotency_residual,
    orthogonality_residual,
    radical_membership_residual,
)
from .lambda_pairs import (
    lambda_power_identities,
    lambda_swap_relations,
    product_lambda,
    scaled_power_residual,
    sub_lambda,
    sub_lambda_finite,
)
from .models import (
    CommutingSumTrace,
    LambdaPair,
    SeriesEvaluation,
    SpecialCase,
    SpecializationTrace,
    SubLambdaTrace,
)
from .series import evaluate_series, terminating_series

__all__ = [
    "CommutingSumTrace",
    "LambdaPair",
    "SeriesEvaluation",
    "SpecialCase",
    "SpecializationTrace",
    "SubLambdaTrace",
    "add_commuting",
    "add_commuting_trace",
    "add_orthogonal",
    "add_orthogonal_n",
    "evaluate_series",
    "gate",
    "group_residual",
    "invertibility_residual",
    "lambda_power_identities",
    "lambda_residual",
    "lambda_swap_relations",
    "nilpotency_residual",
    "one_plus_from_sum",
    "orthogonality_residual",
    "product_commuting",
    "product_lambda",
    "radical_membership_residual",
    "scaled_power_residual",
    "specialize_2_8",
    "specialize_2_8_trace",
    "sub_lambda",
    "sub_lambda_finite",
    "terminating_series",
]
