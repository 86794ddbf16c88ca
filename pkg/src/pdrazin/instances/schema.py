"""
Validation schema for instance JSON files.

Complex numbers are `[re, im]` arrays (a bare real number is accepted on
input); matrices are row-major nested arrays of them.
"""

import math
from typing import Any, cast

from ..algebra import AlgebraContext
from ..errors import StructuralError
from ..tolerances import Tolerances


def _is_real(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _is_integer(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class InstanceSchema:
    """Validation of instance JSON structure.

    Every method returns a list of error messages (empty if valid).
    """

    REQUIRED_ROOT_FIELDS = {"context", "elements"}
    OPTIONAL_ROOT_FIELDS = {"lambda", "policy", "tolerances", "n", "identity", "seed"}
    POLICY_FIELDS = {"max_terms", "term_tol"}
    TOLERANCE_FIELDS = set(Tolerances().to_dict())

    @staticmethod
    def validate_scalar(value: Any, where: str) -> list[str]:
        if _is_real(value):
            return [] if math.isfinite(value) else [f"{where}: non-finite number"]
        pair = isinstance(value, list) and len(value) == 2
        if pair and all(_is_real(v) for v in value):
            if all(math.isfinite(v) for v in value):
                return []
            return [f"{where}: non-finite number"]
        return [f"{where}: expected [re, im] or a real number, got {value!r}"]

    @staticmethod
    def validate_context(data: Any, where: str = "context") -> list[str]:
        if not isinstance(data, dict):
            return [f"'{where}' must be an object"]
        try:
            AlgebraContext.from_dict(cast(dict[str, Any], data))
        except (StructuralError, TypeError, ValueError) as e:
            return [f"'{where}': {e}"]
        return []

    @staticmethod
    def validate_matrix(name: str, data: Any, rep_dim: int) -> list[str]:
        where = f"element '{name}'"
        if not isinstance(data, list) or len(data) != rep_dim:
            return [f"{where} must be an array of {rep_dim} rows"]
        errors: list[str] = []
        for i, row in enumerate(cast(list[Any], data)):
            if not isinstance(row, list) or len(row) != rep_dim:
                errors.append(f"{where} row {i} must have {rep_dim} entries")
                continue
            for j, value in enumerate(cast(list[Any], row)):
                entry = f"{where}[{i}][{j}]"
                errors.extend(InstanceSchema.validate_scalar(value, entry))
        return errors

    @staticmethod
    def validate_root(data: Any) -> list[str]:
        if not isinstance(data, dict):
            return ["Instance root must be an object"]
        root = cast(dict[str, Any], data)
        errors: list[str] = []

        missing = InstanceSchema.REQUIRED_ROOT_FIELDS - root.keys()
        if missing:
            errors.append(f"Missing required fields: {sorted(missing)}")
        unknown = root.keys() - (
            InstanceSchema.REQUIRED_ROOT_FIELDS | InstanceSchema.OPTIONAL_ROOT_FIELDS
        )
        if unknown:
            errors.append(f"Unknown fields: {sorted(unknown)}")

        if root.get("lambda") is not None:
            errors.extend(InstanceSchema.validate_scalar(root["lambda"], "'lambda'"))
        for key, allowed in (
            ("policy", InstanceSchema.POLICY_FIELDS),
            ("tolerances", InstanceSchema.TOLERANCE_FIELDS),
        ):
            section = root.get(key, {})
            if not isinstance(section, dict):
                errors.append(f"'{key}' must be an object")
                continue
            for name, value in cast(dict[str, Any], section).items():
                if name not in allowed:
                    errors.append(f"'{key}' has unknown field '{name}'")
                elif value is not None and not _is_real(value):
                    errors.append(f"'{key}.{name}' must be a number")
                elif name == "max_terms" and not (value is None or _is_integer(value)):
                    errors.append(f"'policy.max_terms' must be an integer, got {value}")
        n = root.get("n")
        if n is not None and (not _is_integer(n) or n < 1):
            errors.append(f"'n' must be a positive integer, got {n!r}")
        seed = root.get("seed")
        if seed is not None and (not isinstance(seed, int) or seed < 0):
            errors.append(f"'seed' must be a nonnegative integer, got {seed!r}")
        if root.get("identity") is not None and not isinstance(root["identity"], str):
            errors.append("'identity' must be a string")
        return errors

    @staticmethod
    def validate_instance(data: Any) -> list[str]:
        """Full structural validation (pattern membership is checked by the loader)."""
        errors = InstanceSchema.validate_root(data)
        if errors:
            return errors
        root = cast(dict[str, Any], data)
        errors = InstanceSchema.validate_context(root["context"])
        if errors:
            return errors
        context = AlgebraContext.from_dict(root["context"])

        elements = root["elements"]
        if not isinstance(elements, dict):
            return ["'elements' must be an object"]
        for name, matrix in cast(dict[str, Any], elements).items():
            errors.extend(InstanceSchema.validate_matrix(name, matrix, context.rep_dim))
        return errors
