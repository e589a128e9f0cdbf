"""``A[[t]]``: power series in ``t`` over a coefficient ring, truncated at ``t^N``.

The filtration is t-adic, so any ring (commutative or not) becomes a
complete filtered algebra and an operator on the ring lifts coefficientwise.
"""
from __future__ import annotations

from typing import Callable, Mapping

from ..core import INF, FilteredElement, as_rational
from .laurent import QQ, LaurentRing, RationalField
from .matrixpoly import MatrixPolyRing


class AdjoinedSeries(FilteredElement):
    """``sum_{k=0}^{N} c_k t^k`` with ``c_k`` in ``ring``."""

    __slots__ = ("_c", "ring", "N")

    def __init__(self, coeffs: Mapping[int, object] | None = None, ring=QQ, order: int = 5):
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        self.ring = ring
        self.N = order
        c = {}
        for k, v in (coeffs or {}).items():
            if k < 0:
                raise ValueError("negative powers of t are not allowed")
            if k > order:
                continue
            v = ring.coerce(v)
            if v:
                c[k] = v
        self._c = c

    @classmethod
    def _raw(cls, c, ring, N):
        obj = cls.__new__(cls)
        obj._c = {k: v for k, v in c.items() if v}
        obj.ring = ring
        obj.N = N
        return obj

    @property
    def order(self):
        return self.N

    @property
    def degree(self):
        return min(self._c) if self._c else INF

    @property
    def context(self):
        return ("adjoined", self.N, self.ring.context)

    def one(self):
        return AdjoinedSeries._raw({0: self.ring.one()}, self.ring, self.N)

    def zero(self):
        return AdjoinedSeries._raw({}, self.ring, self.N)

    def is_zero(self):
        return not self._c

    def _add(self, other):
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c[k] + v if k in c else v
        return AdjoinedSeries._raw(c, self.ring, self.N)

    def _scale(self, s):
        if s == 0:
            return self.zero()
        return AdjoinedSeries._raw({k: v * s for k, v in self._c.items()}, self.ring, self.N)

    def _mul(self, other):
        c = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                k = i + j
                if k > self.N:
                    continue
                prod = a * b
                c[k] = c[k] + prod if k in c else prod
        return AdjoinedSeries._raw(c, self.ring, self.N)

    def coefficients(self) -> dict:
        return dict(self._c)

    def coefficient(self, k: int):
        return self._c.get(k, self.ring.zero())

    def map_coefficients(self, fn: Callable) -> "AdjoinedSeries":
        """Coefficientwise image ``sum fn(c_k) t^k`` (the lift of a ring map)."""
        return AdjoinedSeries._raw(
            {k: self.ring.coerce(fn(v)) for k, v in self._c.items()}, self.ring, self.N
        )

    def __repr__(self):
        return f"AdjoinedSeries({self.to_dict()!r})"

    def to_dict(self) -> dict:
        return {
            "type": "AdjoinedSeries",
            "order": self.N,
            "ring": _ring_to_dict(self.ring),
            "coefficients": {str(k): self.ring.encode(v) for k, v in sorted(self._c.items())},
        }

    @classmethod
    def from_dict(cls, data) -> "AdjoinedSeries":
        ring = _ring_from_dict(data["ring"])
        return cls({int(k): ring.decode(v) for k, v in data["coefficients"].items()},
                   ring, data["order"])


def _ring_to_dict(ring) -> dict:
    if isinstance(ring, RationalField):
        return {"type": "QQ"}
    if isinstance(ring, LaurentRing):
        return {"type": "Laurent", "p": ring.p, "q": ring.q}
    if isinstance(ring, MatrixPolyRing):
        return {"type": "MatrixPoly", "d": ring.d, "q": ring.q}
    raise TypeError(f"cannot serialize ring {ring!r}")


def _ring_from_dict(data):
    kind = data["type"]
    if kind == "QQ":
        return QQ
    if kind == "Laurent":
        return LaurentRing(data["p"], data["q"])
    if kind == "MatrixPoly":
        return MatrixPolyRing(data["d"], data["q"])
    raise ValueError(f"unknown ring type {kind!r}")


def scalar_series(coeffs: Mapping[int, object], order: int) -> AdjoinedSeries:
    """Series with rational coefficients, e.g. for power-series oracles."""
    return AdjoinedSeries({k: as_rational(v) for k, v in coeffs.items()}, QQ, order)
