"""Outward-rounded interval arithmetic on IEEE doubles.

Soundness model: every arithmetic endpoint is computed in round-to-nearest
and then pushed outward with nextafter, which over-covers the <= 0.5 ulp
rounding error of +, -, *, /. Library transcendentals (exp, log, log1p,
pow) are assumed faithful to <= 1 ulp and their endpoints are pushed
outward LIBM_ULPS steps; on glibc this is conservative. The platform trig
functions are never used here - enclosures of the target functions come
from their product representations in the oracle module, so certification
does not lean on libm's cos/sin/cosh/sinh.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

_INF = math.inf

# outward steps applied after each libm transcendental endpoint
LIBM_ULPS = 2


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _down_libm(x: float) -> float:
    for _ in range(LIBM_ULPS):
        x = math.nextafter(x, -_INF)
    return x


def _up_libm(x: float) -> float:
    for _ in range(LIBM_ULPS):
        x = math.nextafter(x, _INF)
    return x


@dataclass(frozen=True, slots=True)
class Enclosure:
    """A closed interval [lo, hi] certified to contain a real value."""

    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi) or self.lo > self.hi:
            raise ValueError(f"invalid enclosure [{self.lo!r}, {self.hi!r}]")

    @classmethod
    def point(cls, x: float) -> "Enclosure":
        """Degenerate enclosure of an exactly-representable value."""
        return cls(x, x)

    @classmethod
    def around(cls, x: float) -> "Enclosure":
        """One-ulp inflation of a nearest-rounded value."""
        return cls(_down(x), _up(x))

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0.0

    def strictly_negative(self) -> bool:
        return self.hi < 0.0

    def strictly_below(self, other: "Enclosure") -> bool:
        return self.hi < other.lo

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __add__(self, other) -> "Enclosure":
        other = _coerce(other)
        return Enclosure(_down(self.lo + other.lo), _up(self.hi + other.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Enclosure":
        other = _coerce(other)
        return Enclosure(_down(self.lo - other.hi), _up(self.hi - other.lo))

    def __rsub__(self, other) -> "Enclosure":
        return _coerce(other) - self

    def __mul__(self, other) -> "Enclosure":
        other = _coerce(other)
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return Enclosure(_down(min(products)), _up(max(products)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Enclosure":
        other = _coerce(other)
        if other.lo <= 0.0 <= other.hi:
            raise ZeroDivisionError("division by an enclosure containing zero")
        quotients = (self.lo / other.lo, self.lo / other.hi,
                     self.hi / other.lo, self.hi / other.hi)
        return Enclosure(_down(min(quotients)), _up(max(quotients)))

    def __rtruediv__(self, other) -> "Enclosure":
        return _coerce(other) / self


def _coerce(value) -> Enclosure:
    if isinstance(value, Enclosure):
        return value
    if isinstance(value, (int, float)):
        return Enclosure.point(float(value))
    raise TypeError(f"cannot mix {type(value).__name__} with Enclosure")


def mul_pos(a: Enclosure, b: Enclosure) -> Enclosure:
    """Product of two nonnegative enclosures (series hot path)."""
    return Enclosure(_down(a.lo * b.lo), _up(a.hi * b.hi))


def div_int(a: Enclosure, n: int) -> Enclosure:
    """Divide by an exact positive integer."""
    return Enclosure(_down(a.lo / n), _up(a.hi / n))


def exp_enclosure(e: Enclosure) -> Enclosure:
    return Enclosure(max(0.0, _down_libm(math.exp(e.lo))), _up_libm(math.exp(e.hi)))


def log_enclosure(e: Enclosure) -> Enclosure:
    if e.lo <= 0.0:
        raise ValueError("log of an enclosure touching zero")
    return Enclosure(_down_libm(math.log(e.lo)), _up_libm(math.log(e.hi)))


def log1p_enclosure(e: Enclosure) -> Enclosure:
    if e.lo <= -1.0:
        raise ValueError("log1p of an enclosure touching -1")
    return Enclosure(_down_libm(math.log1p(e.lo)), _up_libm(math.log1p(e.hi)))


def ipow_enclosure(e: Enclosure, n: int) -> Enclosure:
    """e**n for integer n >= 1 on a nonnegative base."""
    if e.lo < 0.0:
        raise ValueError("ipow_enclosure requires a nonnegative base")
    if n == 1:
        return e
    return Enclosure(_down_libm(e.lo**n), _up_libm(e.hi**n))


def sum_enclosures(items: Iterable[Enclosure]) -> Enclosure:
    """Sum with one correctly-rounded pass per endpoint (math.fsum), so the
    rounding cost does not grow with the number of terms."""
    los: list[float] = []
    his: list[float] = []
    for item in items:
        los.append(item.lo)
        his.append(item.hi)
    return Enclosure(_down(math.fsum(los)), _up(math.fsum(his)))


def pi_enclosure() -> Enclosure:
    return _PI_ENC


def pi_power_enclosure(n: int) -> Enclosure:
    """pi^n for n in {1, 2, 4, 8}."""
    try:
        return _PI_POWERS[n]
    except KeyError:
        raise ValueError(f"unsupported pi power {n}") from None


_PI_ENC = Enclosure.around(math.pi)
_PI2 = _PI_ENC * _PI_ENC
_PI4 = _PI2 * _PI2
_PI_POWERS = {1: _PI_ENC, 2: _PI2, 4: _PI4, 8: _PI4 * _PI4}
