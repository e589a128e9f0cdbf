"""Exact Gaussian elimination on sparse rational vectors (dicts column -> Fraction)."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Mapping

Vector = dict


def _axpy(target: dict, factor: Fraction, source: Mapping) -> None:
    for k, v in source.items():
        nv = target.get(k, 0) - factor * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class Echelon:
    """Incrementally built echelon basis that remembers how each row was formed.

    ``column_key`` orders columns; a new row's pivot is its smallest column,
    which makes :meth:`reduced_rows` the reduced row echelon form.
    """

    def __init__(self, column_key: Callable[[Hashable], object] | None = None):
        self.rows: list[tuple[Hashable, dict, dict]] = []
        self._key = column_key

    def reduce(self, vector: Mapping) -> tuple[dict, dict]:
        """Return ``(residual, combo)`` with ``vector = residual + sum combo[i] * v_i``."""
        r = {k: Fraction(v) for k, v in vector.items() if v}
        combo: dict = {}
        for pivot, row, row_combo in self.rows:
            f = r.get(pivot)
            if f:
                _axpy(r, f, row)
                _axpy(combo, -f, row_combo)
        return r, combo

    def add(self, vector: Mapping, label: Hashable) -> bool:
        """Insert ``vector`` (named ``label``); False if it was dependent."""
        r, combo = self.reduce(vector)
        if not r:
            return False
        combo = {k: -v for k, v in combo.items()}
        combo[label] = combo.get(label, 0) + 1
        pivot = min(r, key=self._key) if self._key else next(iter(r))
        scale = r[pivot]
        r = {k: v / scale for k, v in r.items()}
        combo = {k: v / scale for k, v in combo.items() if v}
        self.rows.append((pivot, r, combo))
        return True

    def express(self, vector: Mapping) -> dict | None:
        """Coefficients of ``vector`` in the inserted vectors, or None if outside the span."""
        r, combo = self.reduce(vector)
        if r:
            return None
        return {k: v for k, v in combo.items() if v}

    def reduced_rows(self) -> list[tuple[Hashable, dict]]:
        """Fully reduced rows sorted by pivot: the RREF of the span."""
        rows = [(p, dict(r)) for p, r, _ in self.rows]
        for i, (p, r) in enumerate(rows):
            for j, (q, s) in enumerate(rows):
                if i != j and s.get(p):
                    _axpy(s, s[p], r)
        if self._key:
            rows.sort(key=lambda pr: self._key(pr[0]))
        return rows
