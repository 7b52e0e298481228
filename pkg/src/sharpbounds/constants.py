"""Series constants behind the bound catalog.

Six even-order sums appear in the exponents of the catalog's closed
forms: sums of 1/k^q over the positive integers and sums of 1/(2k-1)^q
over the odd integers, for q in {2, 4, 8}. Each has a closed form as a
rational multiple of a power of pi; each is also a monotonically
increasing series, which is what the partial-sum checker in the oracle
module exploits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError


@dataclass(frozen=True)
class ZetaTable:
    """Closed-form values of the six series, at double precision."""

    zeta2: float  # sum 1/k^2      = pi^2/6
    odd2: float   # sum 1/(2k-1)^2 = pi^2/8
    zeta4: float  # sum 1/k^4      = pi^4/90
    odd4: float   # sum 1/(2k-1)^4 = pi^4/96
    zeta8: float  # sum 1/k^8      = pi^8/9450
    odd8: float   # sum 1/(2k-1)^8 = 17*pi^8/161280


@lru_cache(maxsize=1)
def zeta_constants() -> ZetaTable:
    """Return the constants table, computed from pi at working precision."""
    pi2 = math.pi * math.pi
    pi4 = pi2 * pi2
    pi8 = pi4 * pi4
    return ZetaTable(
        zeta2=pi2 / 6.0,
        odd2=pi2 / 8.0,
        zeta4=pi4 / 90.0,
        odd4=pi4 / 96.0,
        zeta8=pi8 / 9450.0,
        odd8=17.0 * pi8 / 161280.0,
    )


@dataclass(frozen=True)
class SeriesSpec:
    """One table constant viewed as a summable series.

    ``power`` is the exponent q; ``odd`` selects summation over odd
    integers. ``tail_bound(n)`` is an integral-comparison upper bound on
    the tail omitted after n terms, valid for every n >= 1.
    """

    key: str
    power: int
    odd: bool
    formula: str

    def index(self, k: int) -> int:
        return 2 * k - 1 if self.odd else k

    def term(self, k: int) -> float:
        return 1.0 / self.index(k) ** self.power

    def closed_form(self) -> float:
        return getattr(zeta_constants(), self.key)

    def tail_bound(self, n: int) -> float:
        if n < 1:
            raise DomainError(f"partial-sum length must be >= 1, got {n}")
        q = self.power
        if self.odd:
            return (2 * n - 1) ** (1 - q) / (2.0 * (q - 1))
        return n ** (1 - q) / (q - 1.0)


SERIES: dict[str, SeriesSpec] = {
    s.key: s
    for s in (
        SeriesSpec("zeta2", 2, False, "pi^2/6"),
        SeriesSpec("odd2", 2, True, "pi^2/8"),
        SeriesSpec("zeta4", 4, False, "pi^4/90"),
        SeriesSpec("odd4", 4, True, "pi^4/96"),
        SeriesSpec("zeta8", 8, False, "pi^8/9450"),
        SeriesSpec("odd8", 8, True, "17*pi^8/161280"),
    )
}


def family_sum(power: int, odd: bool) -> float:
    """Table value of sum 1/m^power over the integer or odd-integer family."""
    for spec in SERIES.values():
        if spec.power == power and spec.odd == odd:
            return spec.closed_form()
    raise DomainError(f"no table constant for power={power}, odd={odd}")
