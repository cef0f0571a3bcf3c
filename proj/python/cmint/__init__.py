"""Arithmetic intersection numbers for quartic CM fields."""

from ._core import (
    CmFieldError,
    b1_comparison,
    enumerate_fields,
    gz_total,
    intersect,
    singular_moduli_log,
    validate,
)

__all__ = [
    "CmFieldError",
    "b1_comparison",
    "enumerate_fields",
    "gz_total",
    "intersect",
    "singular_moduli_log",
    "validate",
]
