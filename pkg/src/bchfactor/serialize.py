"""JSON-friendly encodings of exact values."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .core import format_rational, is_scalar


def encode(value):
    """Encode scalars, matrices and algebra elements; rationals become ``"num/den"``."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if is_scalar(value):
        return format_rational(Fraction(value))
    if isinstance(value, np.ndarray):
        return [encode(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    for attr in ("to_json", "to_dict"):
        fn = getattr(value, attr, None)
        if fn is not None:
            return fn()
    return str(value)


def is_zero_value(value) -> bool:
    if is_scalar(value):
        return value == 0
    if isinstance(value, np.ndarray):
        return not any(v != 0 for v in value.flat)
    return not value
