"""
Instance files: the JSON unit of CLI input and output.
"""

from .loader import (
    InstanceLoader,
    complex_from_json,
    complex_to_json,
    encode_json,
    matrix_from_json,
    matrix_to_json,
)
from .models import InstanceFile
from .schema import InstanceSchema

__all__ = [
    "InstanceFile",
    "InstanceLoader",
    "InstanceSchema",
    "complex_from_json",
    "complex_to_json",
    "encode_json",
    "matrix_from_json",
    "matrix_to_json",
]
