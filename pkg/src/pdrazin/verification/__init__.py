"""
Verification suite and fuzz runner.
"""

from .fuzz import FuzzConfig, FuzzRunner, FuzzSummary, InstanceOutcome, derive_seed
from .suite import (
    IDENTITIES,
    IdentityInfo,
    compare_with_oracle,
    get_identity,
    verify,
)

__all__ = [
    "IDENTITIES",
    "FuzzConfig",
    "FuzzRunner",
    "FuzzSummary",
    "IdentityInfo",
    "InstanceOutcome",
    "compare_with_oracle",
    "derive_seed",
    "get_identity",
    "verify",
]
