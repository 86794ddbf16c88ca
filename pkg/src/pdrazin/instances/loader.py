"""Reading and writing instance files.

Handles JSON (de)serialization of InstanceFile values and the byte-stable JSON
encoding shared by reports and counterexample files.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np
import orjson

from ..algebra import AlgebraContext, AlgebraElement, pattern_residual, validate_element
from ..algebra.models import ComplexMatrix
from ..errors import InstanceFileError, StructuralError
from .models import InstanceFile
from .schema import InstanceSchema

JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2


def encode_json(data: Any) -> bytes:
    """Byte-stable JSON (sorted keys, two-space indent, trailing newline)."""
    return orjson.dumps(data, option=JSON_OPTIONS) + b"\n"


def complex_to_json(value: complex) -> List[float]:
    value = complex(value)
    return [float(value.real), float(value.imag)]


def complex_from_json(value: Union[float, int, List[float]]) -> complex:
    if isinstance(value, list):
        return complex(float(value[0]), float(value[1]))
    return complex(float(value), 0.0)


def matrix_to_json(m: ComplexMatrix) -> List[List[List[float]]]:
    return [[complex_to_json(v) for v in row] for row in np.asarray(m)]


def matrix_from_json(rows: List[List[Any]]) -> ComplexMatrix:
    return np.array(
        [[complex_from_json(v) for v in row] for row in rows], dtype=np.complex128
    )


class InstanceLoader:
    """Loads and saves instance files.

    Handles parsing, schema validation, pattern validation of every element and
    conversion to InstanceFile values.
    """

    def __init__(self):
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    def load(self, path: Path) -> InstanceFile:
        """Load an instance file.

        Raises:
            InstanceFileError: The file is missing, not JSON, or fails validation
        """
        if not path.exists():
            raise InstanceFileError(f"Instance file not found: {path}")
        self.logger.info(f"Loading instance from: {path}")
        return self.loads(path.read_bytes(), source=str(path))

    def loads(self, raw: Union[bytes, str], source: str = "<memory>") -> InstanceFile:
        try:
            data = orjson.loads(raw)
        except orjson.JSONDecodeError as e:
            raise InstanceFileError(f"Failed to parse JSON from {source}: {e}")
        return self.from_data(data, source)

    def from_data(self, data: Any, source: str = "<memory>") -> InstanceFile:
        errors = InstanceSchema.validate_instance(data)
        if errors:
            raise InstanceFileError(f"Invalid instance in {source}", errors)

        context = AlgebraContext.from_dict(data["context"])
        elements: Dict[str, AlgebraElement] = {}
        for name, rows in data["elements"].items():
            x = AlgebraElement(context, matrix_from_json(rows))
            if not validate_element(x):
                errors.append(
                    f"element '{name}' does not match {context.describe()} "
                    f"(pattern residual {pattern_residual(x.matrix, context):.3e})"
                )
            elements[name] = x
        if errors:
            raise InstanceFileError(f"Invalid instance in {source}", errors)

        lam: Optional[complex] = None
        if data.get("lambda") is not None:
            lam = complex_from_json(data["lambda"])
            if lam == 0:
                raise InstanceFileError(
                    f"Invalid instance in {source}", ["'lambda' must be nonzero"]
                )

        policy = {k: v for k, v in data.get("policy", {}).items() if v is not None}
        instance = InstanceFile(
            context=context,
            elements=elements,
            lam=lam,
            policy=policy,
            tolerances={k: float(v) for k, v in data.get("tolerances", {}).items()},
            n=data.get("n"),
            identity=data.get("identity"),
            seed=data.get("seed"),
        )
        try:
            instance.series_policy()
        except StructuralError as e:
            raise InstanceFileError(f"Invalid instance in {source}", [str(e)])
        self.logger.debug(
            f"Instance {source}: {context.describe()}, elements {sorted(elements)}"
        )
        return instance

    # === WRITING ===

    def to_data(self, instance: InstanceFile) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "context": instance.context.to_dict(),
            "elements": {
                name: matrix_to_json(x.matrix) for name, x in instance.elements.items()
            },
        }
        if instance.lam is not None:
            data["lambda"] = complex_to_json(instance.lam)
        if instance.policy:
            data["policy"] = dict(instance.policy)
        if instance.tolerances:
            data["tolerances"] = dict(instance.tolerances)
        if instance.n is not None:
            data["n"] = instance.n
        if instance.identity is not None:
            data["identity"] = instance.identity
        if instance.seed is not None:
            data["seed"] = instance.seed
        return data

    def dumps(self, instance: InstanceFile) -> bytes:
        return encode_json(self.to_data(instance))

    def save(self, instance: InstanceFile, path: Path) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(self.dumps(instance))
        except OSError as e:
            self.logger.error(f"Cannot write {path}: {e}")
            raise InstanceFileError(f"Cannot write instance file {path}: {e}") from e
        self.logger.info(f"Saved instance to: {path}")
