"""Matrix series in two commuting parameters ``s`` and ``t``, total degree <= N."""
from __future__ import annotations

from typing import Mapping

import numpy as np

from ..core import INF, FilteredElement
from . import _matrix


class BivariateMatrixSeries(FilteredElement):
    """``sum M_{ij} s^i t^j`` with exact d x d coefficients.

    The filtration degree is the lowest total degree ``i + j`` present, so
    ``A_1 = s(...) + t(...)``.  Components keep their bidegree.
    """

    __slots__ = ("_c", "d", "N")

    def __init__(self, coeffs: Mapping[tuple[int, int], object] | None = None, d: int = 2, order: int = 4):
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        self.d = d
        self.N = order
        c = {}
        for (i, j), m in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be non-negative")
            if i + j > order:
                continue
            m = _matrix.as_matrix(m)
            if m.shape != (d, d):
                raise ValueError(f"coefficient has shape {m.shape}, expected {(d, d)}")
            if not _matrix.is_zero(m):
                c[(i, j)] = m
        self._c = c

    @classmethod
    def _raw(cls, c, d, N):
        obj = cls.__new__(cls)
        obj._c = {k: m for k, m in c.items() if not _matrix.is_zero(m)}
        obj.d = d
        obj.N = N
        return obj

    @property
    def order(self):
        return self.N

    @property
    def degree(self):
        return min(i + j for i, j in self._c) if self._c else INF

    @property
    def context(self):
        return ("bivariate", self.d, self.N)

    def one(self):
        return BivariateMatrixSeries._raw({(0, 0): _matrix.identity(self.d)}, self.d, self.N)

    def zero(self):
        return BivariateMatrixSeries._raw({}, self.d, self.N)

    def is_zero(self):
        return not self._c

    def _add(self, other):
        c = dict(self._c)
        for k, m in other._c.items():
            c[k] = c[k] + m if k in c else m
        return BivariateMatrixSeries._raw(c, self.d, self.N)

    def _scale(self, s):
        if s == 0:
            return self.zero()
        return BivariateMatrixSeries._raw({k: m * s for k, m in self._c.items()}, self.d, self.N)

    def _mul(self, other):
        c = {}
        for (i1, j1), a in self._c.items():
            for (i2, j2), b in other._c.items():
                k = (i1 + i2, j1 + j2)
                if k[0] + k[1] > self.N:
                    continue
                prod = a.dot(b)
                c[k] = c[k] + prod if k in c else prod
        return BivariateMatrixSeries._raw(c, self.d, self.N)

    def components(self) -> dict[tuple[int, int], np.ndarray]:
        return {k: m.copy() for k, m in self._c.items()}

    def coefficient(self, i: int, j: int) -> np.ndarray:
        return self._c[(i, j)].copy() if (i, j) in self._c else _matrix.zeros(self.d)

    def map_coefficients(self, fn) -> "BivariateMatrixSeries":
        return BivariateMatrixSeries._raw({k: fn(m) for k, m in self._c.items()}, self.d, self.N)

    def divisible_by(self, variable: str) -> bool:
        """True if every component carries at least one power of ``s`` (or ``t``)."""
        axis = {"s": 0, "t": 1}[variable]
        return all(k[axis] >= 1 for k in self._c)

    def __repr__(self):
        return f"BivariateMatrixSeries({self.to_dict()!r})"

    def to_dict(self) -> dict:
        return {
            "type": "BivariateMatrixSeries", "d": self.d, "order": self.N,
            "coefficients": [[i, j, _matrix.encode(m)] for (i, j), m in sorted(self._c.items())],
        }

    @classmethod
    def from_dict(cls, data) -> "BivariateMatrixSeries":
        return cls({(i, j): _matrix.decode(m) for i, j, m in data["coefficients"]},
                   data["d"], data["order"])
