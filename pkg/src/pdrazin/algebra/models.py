"""
Data models for concrete finite-dimensional Banach algebras.

An `AlgebraContext` describes one algebra (its representation size and the
pattern of valid and radical coordinates); an `AlgebraElement` is an immutable
square complex matrix tagged with the context it belongs to.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple, Union

import numpy as np
import numpy.typing as npt

from ..errors import StructuralError

ComplexMatrix = npt.NDArray[np.complex128]
Scalar = Union[complex, float, int]


class ContextKind(Enum):
    """Kinds of shipped algebra contexts."""

    FULL_MATRIX = "FullMatrix"
    UPPER_TRIANGULAR = "UpperTriangular"
    TRUNCATED_POLYNOMIAL = "TruncatedPolynomial"
    DIRECT_SUM = "DirectSum"

    @classmethod
    def parse(cls, name: str) -> "ContextKind":
        """Parse a canonical kind name or a command-line alias (case-insensitive)."""
        key = name.strip().lower()
        aliases = {
            "full": cls.FULL_MATRIX,
            "upper": cls.UPPER_TRIANGULAR,
            "poly": cls.TRUNCATED_POLYNOMIAL,
            "sum": cls.DIRECT_SUM,
        }
        if key in aliases:
            return aliases[key]
        for kind in cls:
            if kind.value.lower() == key:
                return kind
        raise StructuralError(f"Unknown algebra kind: {name!r}")


@dataclass(frozen=True)
class AlgebraContext:
    """A concrete finite-dimensional complex Banach algebra with unity.

    Attributes:
        kind: Which family the algebra belongs to
        dim: Matrix size n for the matrix kinds, truncation order m for
            TruncatedPolynomial, total representation size for DirectSum
        summands: Component contexts (DirectSum only)
    """

    kind: ContextKind
    dim: int
    summands: Tuple["AlgebraContext", ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind is ContextKind.DIRECT_SUM:
            if not self.summands:
                raise StructuralError("DirectSum needs at least one summand")
            total = sum(s.rep_dim for s in self.summands)
            if self.dim != total:
                raise StructuralError(
                    f"DirectSum dim {self.dim} does not match summand total {total}"
                )
        elif self.summands:
            raise StructuralError(f"{self.kind.value} takes no summands")
        if int(self.dim) < 1:
            raise StructuralError(f"Algebra dimension must be positive, got {self.dim}")

    # === CONSTRUCTORS ===

    @classmethod
    def full_matrix(cls, n: int) -> "AlgebraContext":
        return cls(ContextKind.FULL_MATRIX, int(n))

    @classmethod
    def upper_triangular(cls, n: int) -> "AlgebraContext":
        return cls(ContextKind.UPPER_TRIANGULAR, int(n))

    @classmethod
    def truncated_polynomial(cls, m: int) -> "AlgebraContext":
        return cls(ContextKind.TRUNCATED_POLYNOMIAL, int(m))

    @classmethod
    def direct_sum(cls, *summands: "AlgebraContext") -> "AlgebraContext":
        if not summands:
            raise StructuralError("DirectSum needs at least one summand")
        return cls(
            ContextKind.DIRECT_SUM,
            sum(s.rep_dim for s in summands),
            tuple(summands),
        )

    @classmethod
    def from_kind(cls, kind: Union[str, ContextKind], dim: int) -> "AlgebraContext":
        """Build a context from a kind name and a size.

        `sum` builds FullMatrix(k) + UpperTriangular(dim - k) with k = ceil(dim / 2);
        a DirectSum of size 1 degenerates to FullMatrix(1) alone.
        """
        if isinstance(kind, str):
            kind = ContextKind.parse(kind)
        if kind is ContextKind.DIRECT_SUM:
            k = (int(dim) + 1) // 2
            parts = [cls.full_matrix(k)]
            if int(dim) - k > 0:
                parts.append(cls.upper_triangular(int(dim) - k))
            return cls.direct_sum(*parts)
        return cls(kind, int(dim))

    # === STRUCTURE ===

    @property
    def rep_dim(self) -> int:
        """Size of the square-matrix representation."""
        return self.dim

    @property
    def offsets(self) -> List[int]:
        """Start offsets of the summand blocks (DirectSum only)."""
        result: List[int] = []
        start = 0
        for s in self.summands:
            result.append(start)
            start += s.rep_dim
        return result

    def describe(self) -> str:
        """Short human-readable name, e.g. `DirectSum(FullMatrix(2), UpperTriangular(1))`."""
        if self.kind is ContextKind.DIRECT_SUM:
            return f"DirectSum({', '.join(s.describe() for s in self.summands)})"
        return f"{self.kind.value}({self.dim})"

    # === SERIALIZATION ===

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value, "dim": self.dim}
        if self.kind is ContextKind.DIRECT_SUM:
            data["summands"] = [s.to_dict() for s in self.summands]
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AlgebraContext":
        try:
            kind = ContextKind.parse(str(data["kind"]))
        except KeyError as e:
            raise StructuralError("Algebra descriptor is missing 'kind'") from e
        if kind is ContextKind.DIRECT_SUM:
            summands = [cls.from_dict(s) for s in data.get("summands", [])]
            context = cls.direct_sum(*summands)
            if "dim" in data and int(data["dim"]) != context.dim:
                raise StructuralError(
                    f"DirectSum dim {data['dim']} does not match summand total {context.dim}"
                )
            return context
        if "dim" not in data:
            raise StructuralError("Algebra descriptor is missing 'dim'")
        return cls(kind, int(data["dim"]))


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """An element of an algebra context, stored as its representing matrix.

    The matrix is copied to a read-only complex128 array on construction.
    Arithmetic operators map to the algebra operations: `x * y` is the algebra
    product (or scaling when one side is a number), `x ** k` is a power.
    """

    context: AlgebraContext
    matrix: ComplexMatrix

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=np.complex128, copy=True)
        n = self.context.rep_dim
        if m.shape != (n, n):
            raise StructuralError(
                f"Matrix shape {m.shape} does not match {self.context.describe()} "
                f"(expected {(n, n)})"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def rep_dim(self) -> int:
        return self.context.rep_dim

    def __repr__(self) -> str:
        return f"AlgebraElement({self.context.describe()}, {self.matrix.tolist()})"

    # === OPERATOR SUGAR ===

    def __mul__(self, other: Union["AlgebraElement", Scalar]) -> "AlgebraElement":
        from . import operations

        if isinstance(other, AlgebraElement):
            return operations.mul(self, other)
        return operations.scale(self, other)

    def __rmul__(self, other: Scalar) -> "AlgebraElement":
        from . import operations

        return operations.scale(self, other)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        from . import operations

        return operations.add(self, other)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        from . import operations

        return operations.sub(self, other)

    def __neg__(self) -> "AlgebraElement":
        from . import operations

        return operations.scale(self, -1.0)

    def __pow__(self, k: int) -> "AlgebraElement":
        from . import operations

        return operations.power(self, k)
