"""Exact arithmetic backbone: the filtered-element protocol, exp/log/BCH and
Bernoulli coefficients.

Every concrete algebra in the package subclasses :class:`FilteredElement`.
The generic functions here only use ring operations, the filtration degree
and the truncation order, so they work unchanged in all of them.
"""
from __future__ import annotations

import math
import numbers
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Hashable, TypeVar

from .errors import DegreeError, NonConvergence, TruncationMismatch

INF = math.inf

E = TypeVar("E", bound="FilteredElement")


def is_scalar(x) -> bool:
    return isinstance(x, numbers.Rational)


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


def format_rational(x: Fraction) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class FilteredElement(ABC):
    """An element of a complete filtered algebra, truncated at a finite order.

    Subclasses provide the ring operations through ``_add``, ``_mul`` and
    ``_scale`` plus ``one``/``zero``/``is_zero`` and two properties:
    ``degree`` (filtration degree, ``math.inf`` for zero) and ``order``
    (components of degree above it are dropped).  ``context`` identifies the
    ambient truncated algebra; operands with different contexts are never
    combined.
    """

    __slots__ = ()
    __hash__ = None  # equality is by value and elements are not hashed

    @property
    @abstractmethod
    def order(self) -> int: ...

    @property
    @abstractmethod
    def degree(self) -> float: ...

    @property
    @abstractmethod
    def context(self) -> Hashable: ...

    @abstractmethod
    def _add(self: E, other: E) -> E: ...

    @abstractmethod
    def _mul(self: E, other: E) -> E: ...

    @abstractmethod
    def _scale(self: E, c: Fraction) -> E: ...

    @abstractmethod
    def one(self: E) -> E: ...

    @abstractmethod
    def zero(self: E) -> E: ...

    @abstractmethod
    def is_zero(self) -> bool: ...

    def _check(self, other) -> None:
        if type(other) is not type(self) or other.context != self.context:
            raise TruncationMismatch(
                f"cannot combine {type(self).__name__}{self.context!r} "
                f"with {type(other).__name__}{getattr(other, 'context', None)!r}"
            )

    def _coerce(self, other):
        if is_scalar(other):
            return self.one()._scale(as_rational(other))
        self._check(other)
        return other

    def __add__(self, other):
        return self._add(self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._add(self._coerce(other)._scale(Fraction(-1)))

    def __rsub__(self, other):
        return self._coerce(other)._add(self._scale(Fraction(-1)))

    def __neg__(self):
        return self._scale(Fraction(-1))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if is_scalar(other):
            return self._scale(as_rational(other))
        if not isinstance(other, FilteredElement):
            return NotImplemented
        self._check(other)
        return self._mul(other)

    def __rmul__(self, other):
        if is_scalar(other):
            return self._scale(as_rational(other))
        return NotImplemented

    def __truediv__(self, other):
        if is_scalar(other):
            return self._scale(1 / as_rational(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.one()
        for _ in range(n):
            result = result._mul(self)
        return result

    def __eq__(self, other):
        if is_scalar(other):
            return (self - other).is_zero()
        if type(other) is not type(self) or other.context != self.context:
            return NotImplemented
        return (self - other).is_zero()

    def __bool__(self):
        return not self.is_zero()


def commutator(x: E, y: E) -> E:
    """``[x, y] = xy - yx``."""
    return x * y - y * x


def _require_positive_degree(a: FilteredElement, what: str) -> None:
    if a.degree < 1:
        raise DegreeError(f"{what} needs filtration degree >= 1, got {a.degree}")


def _series_guard(a: FilteredElement) -> int:
    return a.order + 2


def exp(a: E) -> E:
    """Exponential series of an element of ``A_1``; the sum terminates by truncation."""
    _require_positive_degree(a, "exp")
    result = a.one()
    term = a.one()
    for k in range(1, _series_guard(a) + 1):
        term = term * a / k
        if term.is_zero():
            return result
        result = result + term
    raise NonConvergence("exp series did not terminate within the truncation order")


def log(u: E) -> E:
    """Logarithm of an element of ``1 + A_1``."""
    d = u - 1
    _require_positive_degree(d, "log (of u - 1)")
    result = u.zero()
    power = d
    for k in range(1, _series_guard(u) + 1):
        if power.is_zero():
            return result
        result = result + power * Fraction((-1) ** (k + 1), k)
        power = power * d
    raise NonConvergence("log series did not terminate within the truncation order")


def c_product(a: E, b: E) -> E:
    """``C(a, b) = log(exp(a) exp(b))``, always computed in the ambient algebra."""
    _require_positive_degree(a, "C(a, b)")
    _require_positive_degree(b, "C(a, b)")
    return log(exp(a) * exp(b))


def bch(a: E, b: E) -> E:
    """``BCH(a, b) = C(a, b) - a - b``."""
    return c_product(a, b) - a - b


def inverse(u: E) -> E:
    """Inverse of a unipotent element ``1 + A_1`` by the geometric series."""
    d = u - 1
    _require_positive_degree(d, "inverse")
    result = u.one()
    power = u.one()
    for _ in range(_series_guard(u)):
        power = -(power * d)
        if power.is_zero():
            return result
        result = result + power
    raise NonConvergence("geometric series did not terminate")


def iterate_fixed_point(step: Callable[[E], E], start: E, steps: int) -> E:
    """Apply ``step`` exactly ``steps`` times, then demand stationarity.

    In a complete filtered algebra a contraction that gains one filtration
    degree per application is exact after ``order`` steps; one extra
    application must return the same element or something is broken.
    """
    x = start
    for _ in range(steps):
        x = step(x)
    if step(x) != x:
        raise NonConvergence(f"fixed-point iteration not stationary after {steps} steps")
    return x


@lru_cache(maxsize=None)
def _bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    # sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, B_0 = 1 (B_1 = -1/2 convention)
    B = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum(math.comb(m + 1, k) * B[k] for k in range(m))
        B.append(-s / (m + 1))
    return tuple(B)


def bernoulli(n: int) -> Fraction:
    """Return ``b_n = B_n / n!``, the coefficients of ``x / (e^x - 1)``.

    >>> [str(bernoulli(k)) for k in range(5)]
    ['1', '-1/2', '1/12', '0', '-1/720']
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return _bernoulli_numbers(n)[n] / math.factorial(n)
