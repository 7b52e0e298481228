"""Inequality chain registry.

Seven chains order the catalog bounds around their targets:

  C1  B1 <= B2 <= cos           <= B3   on 0 < x < alpha < pi/2
  C2  B4 <= B5 <= sinc          <= B6   on 0 < x < alpha < pi/2
  C3  B7 <= B8 <= sinc                  on 0 < x < pi
  C4  B9 <= B10 <= sin*sinh/x^2 <= B11  on 0 < x < alpha < pi
  C5  B12 <= B13 <= sin*sinh/x^2        on 0 < x < pi
  C6  B14 <= B15 <= cos*cosh    <= B16  on 0 < x < alpha < pi/2
  C7  B17 <= B18 <= cos*cosh            on 0 < x < pi/2

C5 and C7 exist in both variants because they contain dual-form bounds;
the others only in the derivation-consistent form. The x domains of C6
and C7 are capped at pi/2: beyond it the base 1 - 16x^4/pi^4 (and the
anchor cos(alpha)cosh(alpha)) turns negative, so no larger open interval
keeps every factor of the defining product inside (0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .catalog import BOUND_SPECS, Bound, Variant
from .errors import UnknownChainError
from .targets import Target

_PI = math.pi
_HALF_PI = math.pi / 2

# a None member marks the target's slot in the ordering
Member = Bound | None


@dataclass(frozen=True)
class ChainSpec:
    """One ordered inequality chain (lower bounds <= target <= upper)."""

    chain_id: str
    target: Target
    members: tuple[Member, ...]
    x_sup: float
    alpha_sup: float | None
    variant: Variant

    @property
    def alpha_based(self) -> bool:
        return self.alpha_sup is not None

    def member_label(self, member: Member) -> str:
        return self.target.name if member is None else member.name

    def pair_labels(self) -> tuple[str, ...]:
        labels = [self.member_label(m) for m in self.members]
        return tuple(f"{a}<={b}" for a, b in zip(labels, labels[1:]))

    def dual_form(self) -> bool:
        return any(m is not None and BOUND_SPECS[m].dual_form for m in self.members)


def _chain(cid, target, members, x_sup, alpha_sup, variant):
    return ChainSpec(cid, target, members, x_sup, alpha_sup, variant)


@lru_cache(maxsize=1)
def chain_registry() -> tuple[ChainSpec, ...]:
    """All chains, in both variants where a printed variant exists."""
    corrected = Variant.DERIVATION_CONSISTENT
    printed = Variant.AS_PRINTED
    base = (
        _chain("C1", Target.COS, (Bound.B1, Bound.B2, None, Bound.B3),
               _HALF_PI, _HALF_PI, corrected),
        _chain("C2", Target.SINC, (Bound.B4, Bound.B5, None, Bound.B6),
               _HALF_PI, _HALF_PI, corrected),
        _chain("C3", Target.SINC, (Bound.B7, Bound.B8, None), _PI, None, corrected),
        _chain("C4", Target.SINC_RATIO_SINH, (Bound.B9, Bound.B10, None, Bound.B11),
               _PI, _PI, corrected),
        _chain("C5", Target.SINC_RATIO_SINH, (Bound.B12, Bound.B13, None),
               _PI, None, corrected),
        _chain("C6", Target.COSCOSH, (Bound.B14, Bound.B15, None, Bound.B16),
               _HALF_PI, _HALF_PI, corrected),
        _chain("C7", Target.COSCOSH, (Bound.B17, Bound.B18, None),
               _HALF_PI, None, corrected),
    )
    printed_variants = tuple(
        _chain(c.chain_id, c.target, c.members, c.x_sup, c.alpha_sup, printed)
        for c in base if c.dual_form()
    )
    return base + printed_variants


CHAIN_IDS: tuple[str, ...] = ("C1", "C2", "C3", "C4", "C5", "C6", "C7")


def get_chain(chain_id: str, variant: Variant = Variant.DERIVATION_CONSISTENT) -> ChainSpec:
    """Look up a chain by id and variant.

    Raises UnknownChainError for ids outside C1..C7 and for printed
    variants of chains that have none.
    """
    for spec in chain_registry():
        if spec.chain_id == chain_id and spec.variant is variant:
            return spec
    if chain_id in CHAIN_IDS:
        raise UnknownChainError(f"chain {chain_id} has no {variant.value} variant")
    raise UnknownChainError(f"unknown chain id {chain_id!r}")
