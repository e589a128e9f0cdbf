"""Truncated Laurent series over Q and the scalar ring descriptors."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..core import as_rational, format_rational, is_scalar
from ..errors import PoleOverflow, TruncationMismatch


class RationalField:
    """Descriptor for Q used as a coefficient ring."""

    context = ("QQ",)

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        return as_rational(x)

    def encode(self, x) -> str:
        return format_rational(x)

    def decode(self, data) -> Fraction:
        return as_rational(data)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.context)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class LaurentRing:
    """Descriptor for Laurent series in ``eps`` with pole cap ``p`` and truncation ``q``."""

    __slots__ = ("p", "q")

    def __init__(self, p: int, q: int):
        if p < 0 or q < 0:
            raise ValueError("pole cap and truncation must be non-negative")
        self.p = p
        self.q = q

    @property
    def context(self):
        return ("laurent", self.p, self.q)

    def __call__(self, coeffs: Mapping[int, object] | None = None) -> "LaurentSeries":
        return LaurentSeries(coeffs, self.p, self.q)

    def zero(self) -> "LaurentSeries":
        return LaurentSeries({}, self.p, self.q)

    def one(self) -> "LaurentSeries":
        return LaurentSeries({0: 1}, self.p, self.q)

    def monomial(self, exponent: int, c=1) -> "LaurentSeries":
        return LaurentSeries({exponent: c}, self.p, self.q)

    def coerce(self, x) -> "LaurentSeries":
        if isinstance(x, LaurentSeries):
            if x.context != self.context:
                raise TruncationMismatch(f"{x.context} is not {self.context}")
            return x
        return LaurentSeries({0: as_rational(x)}, self.p, self.q)

    def encode(self, x) -> dict:
        return x.to_dict()

    def decode(self, data) -> "LaurentSeries":
        return LaurentSeries.from_dict(data, self.p, self.q)

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and (self.p, self.q) == (other.p, other.q)

    def __hash__(self):
        return hash(self.context)

    def __repr__(self):
        return f"LaurentRing(p={self.p}, q={self.q})"


class LaurentSeries:
    """``sum c_k eps^k`` for ``-p <= k <= q`` with exact rational coefficients.

    Products drop terms above ``eps^q``; a product that would need a pole of
    order greater than ``p`` raises :class:`PoleOverflow` instead of losing
    information.

    >>> L = LaurentRing(3, 3)
    >>> str((L({-1: 1, 0: 1})) * L.monomial(1))
    '1 + eps'
    """

    __slots__ = ("_c", "p", "q")
    __hash__ = None

    def __init__(self, coeffs: Mapping[int, object] | None = None, p: int = 5, q: int = 5):
        self.p = p
        self.q = q
        c = {}
        for k, v in (coeffs or {}).items():
            v = as_rational(v)
            if v == 0 or k > q:
                continue
            if k < -p:
                raise PoleOverflow(f"pole order {-k} exceeds cap {p}")
            c[k] = v
        self._c = c

    @classmethod
    def _raw(cls, c, p, q):
        obj = cls.__new__(cls)
        obj._c = c
        obj.p = p
        obj.q = q
        return obj

    @property
    def context(self):
        return ("laurent", self.p, self.q)

    @property
    def ring(self) -> LaurentRing:
        return LaurentRing(self.p, self.q)

    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._c)

    def coefficient(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def valuation(self):
        return min(self._c) if self._c else None

    def pole_part(self) -> "LaurentSeries":
        """Strict pole part (minimal subtraction projector)."""
        return LaurentSeries._raw({k: v for k, v in self._c.items() if k < 0}, self.p, self.q)

    def regular_part(self) -> "LaurentSeries":
        return LaurentSeries._raw({k: v for k, v in self._c.items() if k >= 0}, self.p, self.q)

    def _other(self, other):
        if isinstance(other, LaurentSeries):
            if other.context != self.context:
                raise TruncationMismatch(f"{other.context} is not {self.context}")
            return other
        if is_scalar(other):
            return LaurentSeries._raw({0: as_rational(other)} if other else {}, self.p, self.q)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in o._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentSeries._raw(c, self.p, self.q)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries._raw({k: -v for k, v in self._c.items()}, self.p, self.q)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            other = as_rational(other)
            if other == 0:
                return LaurentSeries._raw({}, self.p, self.q)
            return LaurentSeries._raw({k: v * other for k, v in self._c.items()}, self.p, self.q)
        o = self._other(other)
        if o is None:
            return NotImplemented
        c: dict[int, Fraction] = {}
        for i, a in self._c.items():
            for j, b in o._c.items():
                k = i + j
                if k > self.q:
                    continue
                c[k] = c.get(k, 0) + a * b
        c = {k: v for k, v in c.items() if v}
        if c and min(c) < -self.p:
            raise PoleOverflow(f"product needs pole order {-min(c)} > cap {self.p}")
        return LaurentSeries._raw(c, self.p, self.q)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (1 / as_rational(other))
        return NotImplemented

    def __pow__(self, n: int):
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c):
            v = self._c[k]
            if k == 0:
                body, coef = "", format_rational(abs(v))
            else:
                body = "eps" if k == 1 else f"eps^{k}"
                coef = "" if abs(v) == 1 else format_rational(abs(v)) + "*"
            text = coef + body
            if not parts:
                parts.append(("-" if v < 0 else "") + text)
            else:
                parts.append((" - " if v < 0 else " + ") + text)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentSeries({str(self)!r}, p={self.p}, q={self.q})"

    def to_dict(self) -> dict:
        return {str(k): format_rational(v) for k, v in sorted(self._c.items())}

    @classmethod
    def from_dict(cls, data: Mapping[str, str], p: int, q: int) -> "LaurentSeries":
        return cls({int(k): as_rational(v) for k, v in data.items()}, p, q)


def parse_laurent(text: str, ring: LaurentRing) -> LaurentSeries:
    """Read ``"1/2*eps^-1 + 3 - eps"``-style text (the ``str`` form) or a bare rational."""
    import re

    text = text.replace(" ", "")
    if not text or text == "0":
        return ring.zero()
    out = ring.zero()
    for sign, body in re.findall(r"([+-]?)([^+-]+(?:\^-?\d+)?)", text.replace("^-", "^~")):
        body = body.replace("^~", "^-")
        s = -1 if sign == "-" else 1
        if "eps" in body:
            coef, _, power = body.partition("eps")
            coef = coef.rstrip("*") or "1"
            k = int(power[1:]) if power.startswith("^") else 1
            out = out + ring.monomial(k, s * Fraction(coef))
        else:
            out = out + s * Fraction(body)
    return out
