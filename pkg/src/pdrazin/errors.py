"""
Exception types for pdrazin.

Every error raised on purpose by the library derives from `PDrazinError`, so
callers (the CLI in particular) can map failure classes to exit codes.
"""

from typing import Optional, Sequence


class PDrazinError(Exception):
    """Base class for all library errors."""

    pass


class StructuralError(PDrazinError, ValueError):
    """Raised on context mismatch, invalid elements or malformed descriptors."""

    pass


class InternalConsistencyError(PDrazinError):
    """Raised when the oracle's own axiom check fails.

    Every square matrix has a Drazin inverse, so this signals numerical
    breakdown rather than non-existence.
    """

    def __init__(self, message: str, residuals: Optional[dict[str, float]] = None):
        super().__init__(message)
        self.residuals = residuals or {}


class NotGroupInvertibleError(PDrazinError):
    """Raised when a group inverse is requested for an element of index >= 2."""

    def __init__(self, index: int):
        super().__init__(f"element has Drazin index {index}, group inverse needs <= 1")
        self.index = index


class HypothesisError(PDrazinError):
    """Raised when a formula's hypothesis is violated."""

    def __init__(
        self,
        hypothesis: str,
        residual: float,
        threshold: float,
        pair: Optional[tuple[int, int]] = None,
    ):
        where = f" for pair {pair}" if pair is not None else ""
        super().__init__(
            f"hypothesis '{hypothesis}' violated{where}: "
            f"relative residual {residual:.3e} >= {threshold:.1e}"
        )
        self.hypothesis = hypothesis
        self.residual = residual
        self.threshold = threshold
        self.pair = pair


class SeriesDivergenceError(PDrazinError):
    """Raised when a series does not terminate within its policy."""

    def __init__(self, terms: int, last_norm: float, threshold: float):
        super().__init__(
            f"series did not terminate after {terms} terms "
            f"(last term norm {last_norm:.3e}, threshold {threshold:.3e})"
        )
        self.terms = terms
        self.last_norm = last_norm
        self.threshold = threshold


class GeneratorError(PDrazinError, ValueError):
    """Raised for a random instance request that cannot be satisfied."""

    pass


class InstanceFileError(PDrazinError):
    """Raised when an instance file cannot be read or fails validation."""

    def __init__(self, message: str, errors: Sequence[str] = ()):
        if errors:
            message = message + ":\n  - " + "\n  - ".join(errors)
        super().__init__(message)
        self.errors = list(errors)


class MarginalHypothesisWarning(UserWarning):
    """A hypothesis holds only within the gray zone between acceptance and rejection."""

    pass
