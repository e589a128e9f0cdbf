"""Matrix-valued polynomial functions ``sum_k M_k x^k`` over Q, degree <= q.

As a filtered algebra the filtration is x-adic: ``A_n`` is spanned by the
``x^k`` with ``k >= n`` and ``x^{q+1}`` is an ideal, so truncation is exact.
"""
from __future__ import annotations


import numpy as np

from ..core import INF, FilteredElement, as_rational
from ..errors import DegreeOverflow
from . import _matrix


class MatrixPolyRing:
    """Descriptor for ``M_d(Q[x])`` truncated above ``x^q``."""

    __slots__ = ("d", "q")

    def __init__(self, d: int, q: int):
        self.d = d
        self.q = q

    @property
    def context(self):
        return ("matpoly", self.d, self.q)

    def zero(self) -> "MatrixPolyFunction":
        return MatrixPolyFunction({}, self.d, self.q)

    def one(self) -> "MatrixPolyFunction":
        return MatrixPolyFunction({0: _matrix.identity(self.d)}, self.d, self.q)

    def constant(self, m) -> "MatrixPolyFunction":
        return MatrixPolyFunction({0: m}, self.d, self.q)

    def coerce(self, x):
        if isinstance(x, MatrixPolyFunction):
            return x
        return self.one() * as_rational(x)

    def encode(self, x) -> dict:
        return x.to_dict()

    def decode(self, data) -> "MatrixPolyFunction":
        return MatrixPolyFunction.from_dict(data)

    def __eq__(self, other):
        return isinstance(other, MatrixPolyRing) and (self.d, self.q) == (other.d, other.q)

    def __hash__(self):
        return hash(self.context)

    def __repr__(self):
        return f"MatrixPolyRing(d={self.d}, q={self.q})"


class MatrixPolyFunction(FilteredElement):
    """``{k: M_k}`` with d x d exact matrices, truncated above ``x^q``.

    >>> A, B, C = ([[1, 0], [0, 2]], [[0, 1], [1, 0]], [[1, 1], [0, 1]])
    >>> f = MatrixPolyFunction({0: A, 1: B}, 2, 3)
    >>> g = MatrixPolyFunction({0: C}, 2, 3)
    >>> sorted((f * g).coefficients())
    [0, 1]
    """

    __slots__ = ("_c", "d", "q")

    def __init__(self, coeffs=None, d: int = 2, q: int = 5):
        self.d = d
        self.q = q
        c = {}
        for k, m in (coeffs or {}).items():
            if k < 0:
                raise ValueError("negative powers of x are not allowed")
            if k > q:
                continue
            m = _matrix.as_matrix(m)
            if m.shape != (d, d):
                raise ValueError(f"coefficient of x^{k} has shape {m.shape}, expected {(d, d)}")
            if not _matrix.is_zero(m):
                c[k] = m
        self._c = c

    @classmethod
    def _raw(cls, c, d, q):
        obj = cls.__new__(cls)
        obj._c = {k: m for k, m in c.items() if not _matrix.is_zero(m)}
        obj.d = d
        obj.q = q
        return obj

    @property
    def order(self):
        return self.q

    @property
    def degree(self):
        return min(self._c) if self._c else INF

    @property
    def context(self):
        return ("matpoly", self.d, self.q)

    @property
    def ring(self) -> MatrixPolyRing:
        return MatrixPolyRing(self.d, self.q)

    def one(self):
        return MatrixPolyFunction._raw({0: _matrix.identity(self.d)}, self.d, self.q)

    def zero(self):
        return MatrixPolyFunction._raw({}, self.d, self.q)

    def is_zero(self):
        return not self._c

    def _add(self, other):
        c = dict(self._c)
        for k, m in other._c.items():
            c[k] = c[k] + m if k in c else m
        return MatrixPolyFunction._raw(c, self.d, self.q)

    def _scale(self, s):
        if s == 0:
            return self.zero()
        return MatrixPolyFunction._raw({k: m * s for k, m in self._c.items()}, self.d, self.q)

    def _mul(self, other):
        c = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                k = i + j
                if k > self.q:
                    continue
                prod = a.dot(b)
                c[k] = c[k] + prod if k in c else prod
        return MatrixPolyFunction._raw(c, self.d, self.q)

    def coefficients(self) -> dict[int, np.ndarray]:
        return {k: m.copy() for k, m in self._c.items()}

    def coefficient(self, k: int) -> np.ndarray:
        return self._c[k].copy() if k in self._c else _matrix.zeros(self.d)

    @property
    def poly_degree(self) -> int:
        """Highest power of x present (-1 for zero)."""
        return max(self._c) if self._c else -1

    def riemann_integral(self, truncate: bool = False) -> "MatrixPolyFunction":
        """``x -> int_0^x f(y) dy``.

        Raises :class:`DegreeOverflow` when the antiderivative would exceed
        ``x^q`` unless ``truncate`` is set (valid because ``x^{q+1}`` is an ideal).
        """
        if not truncate and self.poly_degree >= self.q:
            raise DegreeOverflow(f"integral of degree {self.poly_degree} exceeds x^{self.q}")
        return MatrixPolyFunction._raw(
            {k + 1: m / (k + 1) for k, m in self._c.items() if k + 1 <= self.q}, self.d, self.q
        )

    def evaluate_at_zero(self) -> "MatrixPolyFunction":
        return MatrixPolyFunction._raw({0: self._c[0]} if 0 in self._c else {}, self.d, self.q)

    def evaluate(self, x) -> np.ndarray:
        x = as_rational(x)
        out = _matrix.zeros(self.d)
        for k, m in self._c.items():
            out = out + m * x ** k
        return out

    def transpose(self) -> "MatrixPolyFunction":
        return MatrixPolyFunction._raw({k: m.T.copy() for k, m in self._c.items()}, self.d, self.q)

    def map_coefficients(self, fn) -> "MatrixPolyFunction":
        return MatrixPolyFunction._raw({k: fn(m) for k, m in self._c.items()}, self.d, self.q)

    def __repr__(self):
        return f"MatrixPolyFunction({self.to_dict()!r})"

    def to_dict(self) -> dict:
        return {
            "type": "MatrixPolyFunction", "d": self.d, "q": self.q,
            "coefficients": {str(k): _matrix.encode(m) for k, m in sorted(self._c.items())},
        }

    @classmethod
    def from_dict(cls, data) -> "MatrixPolyFunction":
        return cls({int(k): _matrix.decode(m) for k, m in data["coefficients"].items()},
                   data["d"], data["q"])


def riemann_integral(f: MatrixPolyFunction, truncate: bool = False) -> MatrixPolyFunction:
    return f.riemann_integral(truncate=truncate)


def evaluate_at_zero(f):
    """``x -> 0`` substitution on ``M_d(Q[x])`` and coefficientwise on ``M_d(Q[x])[[t]]``."""
    if isinstance(f, MatrixPolyFunction):
        return f.evaluate_at_zero()
    return f.map_coefficients(lambda c: c.evaluate_at_zero())
