"""Lower triangular n x n matrices over a commutative coefficient ring.

The filtration is by sub-diagonal band: ``A_k`` holds matrices whose entries
vanish unless ``i - j >= k``.  ``A_1`` (strictly lower) is nilpotent of order
``n``, so exp/log/BCH terminate and the truncation order is ``n - 1``.
Indices are 0-based.
"""
from __future__ import annotations

from typing import Mapping

from ..core import INF, FilteredElement
from .laurent import QQ, LaurentRing
from .adjoined import _ring_from_dict, _ring_to_dict


class TriangularMatrix(FilteredElement):
    """Sparse ``{(i, j): entry}`` with ``i >= j``.

    >>> E21 = TriangularMatrix.unit(1, 0, 3)
    >>> E32 = TriangularMatrix.unit(2, 1, 3)
    >>> (E21 * E32).is_zero(), (E32 * E21) == TriangularMatrix.unit(2, 0, 3)
    (True, True)
    """

    __slots__ = ("_e", "n", "ring")

    def __init__(self, entries: Mapping[tuple[int, int], object] | None = None, n: int = 3, ring=QQ):
        if n < 2:
            raise ValueError("need n >= 2 for a non-trivial filtration")
        self.n = n
        self.ring = ring
        e = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= j <= i < n):
                raise ValueError(f"entry ({i}, {j}) is not lower triangular in {n} x {n}")
            v = ring.coerce(v)
            if v:
                e[(i, j)] = v
        self._e = e

    @classmethod
    def _raw(cls, e, n, ring):
        obj = cls.__new__(cls)
        obj._e = {k: v for k, v in e.items() if v}
        obj.n = n
        obj.ring = ring
        return obj

    @classmethod
    def unit(cls, i: int, j: int, n: int, ring=QQ, value=1) -> "TriangularMatrix":
        return cls({(i, j): value}, n, ring)

    @classmethod
    def from_rows(cls, rows, ring=QQ) -> "TriangularMatrix":
        n = len(rows)
        return cls({(i, j): rows[i][j] for i in range(n) for j in range(i + 1)}, n, ring)

    @property
    def order(self):
        return self.n - 1

    @property
    def degree(self):
        return min(i - j for i, j in self._e) if self._e else INF

    @property
    def context(self):
        return ("triangular", self.n, self.ring.context)

    def one(self):
        return TriangularMatrix._raw({(i, i): self.ring.one() for i in range(self.n)}, self.n, self.ring)

    def zero(self):
        return TriangularMatrix._raw({}, self.n, self.ring)

    def is_zero(self):
        return not self._e

    def _add(self, other):
        e = dict(self._e)
        for k, v in other._e.items():
            e[k] = e[k] + v if k in e else v
        return TriangularMatrix._raw(e, self.n, self.ring)

    def _scale(self, s):
        if s == 0:
            return self.zero()
        return TriangularMatrix._raw({k: v * s for k, v in self._e.items()}, self.n, self.ring)

    def _mul(self, other):
        rows: dict[int, list] = {}
        for (k, j), b in other._e.items():
            rows.setdefault(k, []).append((j, b))
        e = {}
        for (i, k), a in self._e.items():
            for j, b in rows.get(k, ()):
                prod = a * b
                e[(i, j)] = e[(i, j)] + prod if (i, j) in e else prod
        return TriangularMatrix._raw(e, self.n, self.ring)

    def entries(self) -> dict:
        return dict(self._e)

    def entry(self, i: int, j: int):
        return self._e.get((i, j), self.ring.zero())

    def band(self, k: int) -> "TriangularMatrix":
        """Component on the k-th sub-diagonal."""
        return TriangularMatrix._raw({(i, j): v for (i, j), v in self._e.items() if i - j == k},
                                     self.n, self.ring)

    def map_entries(self, fn) -> "TriangularMatrix":
        """Entrywise image, used to lift operators on the coefficient ring."""
        return TriangularMatrix._raw({k: self.ring.coerce(fn(v)) for k, v in self._e.items()},
                                     self.n, self.ring)

    def __repr__(self):
        return f"TriangularMatrix({self.to_dict()!r})"

    def to_dict(self) -> dict:
        return {
            "type": "TriangularMatrix", "n": self.n, "ring": _ring_to_dict(self.ring),
            "entries": [[i, j, self.ring.encode(v)] for (i, j), v in sorted(self._e.items())],
        }

    @classmethod
    def from_dict(cls, data) -> "TriangularMatrix":
        ring = _ring_from_dict(data["ring"])
        return cls({(i, j): ring.decode(v) for i, j, v in data["entries"]}, data["n"], ring)


def laurent_triangular_ring(n: int) -> LaurentRing:
    """Laurent caps matched to the nilpotency of n x n strictly lower matrices."""
    return LaurentRing(n - 1, n - 1)
