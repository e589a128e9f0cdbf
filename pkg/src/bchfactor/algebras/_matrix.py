"""Exact d x d matrices as numpy object arrays of Fraction."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..core import as_rational, format_rational


def zeros(d: int) -> np.ndarray:
    m = np.empty((d, d), dtype=object)
    m.fill(Fraction(0))
    return m


def identity(d: int) -> np.ndarray:
    m = zeros(d)
    for i in range(d):
        m[i, i] = Fraction(1)
    return m


def as_matrix(rows) -> np.ndarray:
    """Exact copy of a nested sequence (ints, Fractions or ``"num/den"`` strings)."""
    src = np.asarray(rows, dtype=object)
    if src.ndim != 2 or src.shape[0] != src.shape[1]:
        raise ValueError("expected a square matrix")
    out = np.empty(src.shape, dtype=object)
    for idx, v in np.ndenumerate(src):
        out[idx] = as_rational(v)
    return out


def is_zero(m: np.ndarray) -> bool:
    return not any(v != 0 for v in m.flat)


def transpose(m: np.ndarray) -> np.ndarray:
    return m.T.copy()


def encode(m: np.ndarray) -> list[list[str]]:
    return [[format_rational(v) for v in row] for row in m]


def decode(rows) -> np.ndarray:
    return as_matrix(rows)
