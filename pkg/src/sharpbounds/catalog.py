"""Closed-form bound catalog.

Eighteen bounds over the four targets, in five structural kinds:

* ALPHA_CLASSIC / ALPHA_REFINED - lower bounds anchored at a free
  parameter alpha, valid for 0 < x < alpha. The refined form multiplies
  the classic one by an exponential correction and squares the exponent
  on the anchor value; both reproduce the target exactly at x = alpha.
* ENDPOINT_CLASSIC / ENDPOINT_REFINED - parameter-free lower bounds
  anchored at the domain endpoint, of the shape (1 - v)^a * e^(b1*v +
  b2*v^2) with v the product coefficient of the target.
* UPPER - exponential upper bounds exp(-c(x) * S) where S is the
  per-factor sum of the target's product family.

Three endpoint entries (B13, B17, B18) circulate in two forms whose
exponents disagree: the derivation-consistent form obtained by
aggregating the refined factor inequality term by term, and an
alternative printed form. Both are kept behind a variant tag; the
verifier's audit classifies each empirically instead of silently
choosing one.

The catalog is closed: these eighteen entries and the seven chains in
``chains`` are the whole surface, there is no user-defined expression
support.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .constants import zeta_constants
from .errors import DomainError, MissingParameterError, VariantError
from .targets import PRODUCT_FORMS, Target, eval_target, log_target_values


class Variant(Enum):
    DERIVATION_CONSISTENT = "corrected"
    AS_PRINTED = "printed"


class Role(Enum):
    LOWER = "lower"
    UPPER = "upper"


class BoundKind(Enum):
    ALPHA_CLASSIC = "alpha-classic"
    ALPHA_REFINED = "alpha-refined"
    ENDPOINT_CLASSIC = "endpoint-classic"
    ENDPOINT_REFINED = "endpoint-refined"
    UPPER = "upper"


class Bound(Enum):
    B1 = "cos_lower_classic"
    B2 = "cos_lower_refined"
    B3 = "cos_upper"
    B4 = "sinc_lower_classic"
    B5 = "sinc_lower_refined"
    B6 = "sinc_upper"
    B7 = "sinc_pi_classic"
    B8 = "sinc_pi_refined"
    B9 = "ss_lower_classic"
    B10 = "ss_lower_refined"
    B11 = "ss_upper"
    B12 = "ss_pi_classic"
    B13 = "ss_pi_refined"
    B14 = "cc_lower_classic"
    B15 = "cc_lower_refined"
    B16 = "cc_upper"
    B17 = "cc_pi_classic"
    B18 = "cc_pi_refined"


@dataclass(frozen=True)
class BoundSpec:
    """Catalog metadata for one bound."""

    bound: Bound
    kind: BoundKind
    role: Role
    target: Target
    x_sup: float            # evaluation domain is [0, x_sup] (x <= alpha when alpha-based)
    alpha_sup: float | None  # alpha constraint is the open interval (0, alpha_sup)
    dual_form: bool
    formula: str

    @property
    def alpha_based(self) -> bool:
        return self.alpha_sup is not None


_PI = math.pi
_HALF_PI = math.pi / 2


def _spec(bound, kind, role, target, x_sup, alpha_sup, dual, formula):
    return BoundSpec(bound, kind, role, target, x_sup, alpha_sup, dual, formula)


BOUND_SPECS: dict[Bound, BoundSpec] = {
    s.bound: s
    for s in (
        _spec(Bound.B1, BoundKind.ALPHA_CLASSIC, Role.LOWER, Target.COS,
              _HALF_PI, _HALF_PI, False, "(cos a)^(x^2/a^2)"),
        _spec(Bound.B2, BoundKind.ALPHA_REFINED, Role.LOWER, Target.COS,
              _HALF_PI, _HALF_PI, False,
              "(cos a)^(x^4/a^4) * exp((x^4/a^4 - x^2/a^2) * a^2/2)"),
        _spec(Bound.B3, BoundKind.UPPER, Role.UPPER, Target.COS,
              _HALF_PI, None, False, "exp(-x^2/2)"),
        _spec(Bound.B4, BoundKind.ALPHA_CLASSIC, Role.LOWER, Target.SINC,
              _HALF_PI, _HALF_PI, False, "(sin a / a)^(x^2/a^2)"),
        _spec(Bound.B5, BoundKind.ALPHA_REFINED, Role.LOWER, Target.SINC,
              _HALF_PI, _HALF_PI, False,
              "(sin a / a)^(x^4/a^4) * exp((x^4/a^4 - x^2/a^2) * a^2/6)"),
        _spec(Bound.B6, BoundKind.UPPER, Role.UPPER, Target.SINC,
              _HALF_PI, None, False, "exp(-x^2/6)"),
        _spec(Bound.B7, BoundKind.ENDPOINT_CLASSIC, Role.LOWER, Target.SINC,
              _PI, None, False, "(1 - x^2/pi^2)^(pi^2/6)"),
        _spec(Bound.B8, BoundKind.ENDPOINT_REFINED, Role.LOWER, Target.SINC,
              _PI, None, False,
              "(1 - x^2/pi^2)^(pi^4/90) * exp(x^2 * (pi^2/90 - 1/6))"),
        _spec(Bound.B9, BoundKind.ALPHA_CLASSIC, Role.LOWER, Target.SINC_RATIO_SINH,
              _PI, _PI, False, "(sin a sinh a / a^2)^(x^4/a^4)"),
        _spec(Bound.B10, BoundKind.ALPHA_REFINED, Role.LOWER, Target.SINC_RATIO_SINH,
              _PI, _PI, False,
              "(sin a sinh a / a^2)^(x^8/a^8) * exp((x^4/90) * (x^4/a^4 - 1))"),
        _spec(Bound.B11, BoundKind.UPPER, Role.UPPER, Target.SINC_RATIO_SINH,
              _PI, None, False, "exp(-x^4/90)"),
        _spec(Bound.B12, BoundKind.ENDPOINT_CLASSIC, Role.LOWER, Target.SINC_RATIO_SINH,
              _PI, None, False, "(1 - x^4/pi^4)^(pi^4/90)"),
        _spec(Bound.B13, BoundKind.ENDPOINT_REFINED, Role.LOWER, Target.SINC_RATIO_SINH,
              _PI, None, True,
              "(1 - v)^(pi^8/9450) * exp(v * (pi^8/9450 - pi^4/90)), v = x^4/pi^4"
              "  [printed: exp factor (x^4/90) * (v - 1)]"),
        _spec(Bound.B14, BoundKind.ALPHA_CLASSIC, Role.LOWER, Target.COSCOSH,
              _HALF_PI, _HALF_PI, False, "(cos a cosh a)^(x^4/a^4)"),
        _spec(Bound.B15, BoundKind.ALPHA_REFINED, Role.LOWER, Target.COSCOSH,
              _HALF_PI, _HALF_PI, False,
              "(cos a cosh a)^(x^8/a^8) * exp((x^4/6) * (x^4/a^4 - 1))"),
        _spec(Bound.B16, BoundKind.UPPER, Role.UPPER, Target.COSCOSH,
              _HALF_PI, None, False, "exp(-x^4/6)"),
        _spec(Bound.B17, BoundKind.ENDPOINT_CLASSIC, Role.LOWER, Target.COSCOSH,
              _HALF_PI, None, True,
              "(1 - w)^(pi^4/96), w = 16 x^4/pi^4  [printed: exponent pi^4/90]"),
        _spec(Bound.B18, BoundKind.ENDPOINT_REFINED, Role.LOWER, Target.COSCOSH,
              _HALF_PI, None, True,
              "(1 - w)^(17 pi^8/161280) * exp(w * (17 pi^8/161280 - pi^4/96)), "
              "w = 16 x^4/pi^4  [printed: exp factor (x^4/6) * (x^4/pi^4 - 1)]"),
    )
}


def endpoint_coefficients(bound: Bound, variant: Variant) -> tuple[float, float, float]:
    """(a, b1, b2) with log B = a*log(1 - v) + b1*v + b2*v^2.

    v is the product coefficient of the bound's target. Only defined for
    the endpoint-anchored kinds.
    """
    t = zeta_constants()
    if bound is Bound.B7:
        return t.zeta2, 0.0, 0.0
    if bound is Bound.B8:
        return t.zeta4, t.zeta4 - t.zeta2, 0.0
    if bound is Bound.B12:
        return t.zeta4, 0.0, 0.0
    if bound is Bound.B13:
        if variant is Variant.DERIVATION_CONSISTENT:
            return t.zeta8, t.zeta8 - t.zeta4, 0.0
        # printed exp factor (x^4/90)(v - 1) = zeta4 * v * (v - 1)
        return t.zeta8, -t.zeta4, t.zeta4
    if bound is Bound.B17:
        if variant is Variant.DERIVATION_CONSISTENT:
            return t.odd4, 0.0, 0.0
        return t.zeta4, 0.0, 0.0
    if bound is Bound.B18:
        if variant is Variant.DERIVATION_CONSISTENT:
            return t.odd8, t.odd8 - t.odd4, 0.0
        # printed exp factor (x^4/6)(x^4/pi^4 - 1) = odd4 * w * (w/16 - 1)
        return t.odd8, -t.odd4, t.odd4 / 16.0
    raise DomainError(f"{bound.name} is not an endpoint-anchored bound")


def _resolve_variant(spec: BoundSpec, variant: Variant | None) -> Variant:
    if variant is None:
        return Variant.DERIVATION_CONSISTENT
    if variant is Variant.AS_PRINTED and not spec.dual_form:
        raise VariantError(f"{spec.bound.name} has a single form; no printed variant")
    return variant


def log_bound_values(bound: Bound, x, alpha: float | None = None,
                     variant: Variant | None = None):
    """log of a bound on a point or array of points. Hot path: no domain
    checks beyond variant resolution; the caller keeps x inside the
    domain interior (and x <= alpha for alpha-based entries)."""
    spec = BOUND_SPECS[bound]
    variant = _resolve_variant(spec, variant)
    form = PRODUCT_FORMS[spec.target]
    x = np.asarray(x, dtype=float)

    if spec.kind is BoundKind.UPPER:
        return -(form.scale / math.pi**form.power * form.per_factor_sum()) * x**form.power

    if spec.kind in (BoundKind.ALPHA_CLASSIC, BoundKind.ALPHA_REFINED):
        if alpha is None:
            raise MissingParameterError(f"{bound.name} requires alpha")
        log_anchor = math.log(eval_target(spec.target, alpha))
        u = (x / alpha) ** form.power
        if spec.kind is BoundKind.ALPHA_CLASSIC:
            return u * log_anchor
        shift = form.coefficient(alpha) * form.per_factor_sum()
        return u * u * log_anchor + (u * u - u) * shift

    # endpoint-anchored: (1 - v)^a * e^(b1 v + b2 v^2)
    v = (form.scale / math.pi**form.power) * x**form.power
    a, b1, b2 = endpoint_coefficients(bound, variant)
    return a * np.log1p(-v) + (b1 + b2 * v) * v


def eval_bound(bound: Bound, x: float, alpha: float | None = None,
               variant: Variant | None = None) -> float:
    """Closed-form value of a catalog bound at a point.

    Domains are the closures of the open validity intervals: x = 0,
    x = alpha and x = x_sup evaluate to their limit values. Raises
    DomainError / MissingParameterError / VariantError per the catalog
    contract.
    """
    spec = BOUND_SPECS[bound]
    variant = _resolve_variant(spec, variant)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x}")

    if spec.alpha_based:
        if alpha is None:
            raise MissingParameterError(f"{bound.name} requires alpha")
        if not (0.0 < alpha < spec.alpha_sup):
            raise DomainError(
                f"alpha for {bound.name} must lie in (0, {spec.alpha_sup!r}), got {alpha}")
        if not (0.0 <= x <= alpha):
            raise DomainError(f"x for {bound.name} must lie in [0, alpha], got {x}")
    else:
        if alpha is not None:
            raise MissingParameterError(f"{bound.name} does not take alpha")
        if not (0.0 <= x <= spec.x_sup):
            raise DomainError(
                f"x for {bound.name} must lie in [0, {spec.x_sup!r}], got {x}")
        if spec.kind is BoundKind.ENDPOINT_CLASSIC or spec.kind is BoundKind.ENDPOINT_REFINED:
            form = PRODUCT_FORMS[spec.target]
            if form.coefficient(x) >= 1.0:
                return 0.0  # base hits zero at the endpoint

    return float(np.exp(log_bound_values(bound, x, alpha, variant)))


def member_log_values(target: Target, member: Bound | None, x,
                      alpha: float | None, variant: Variant | None):
    """log of a chain member (a bound, or the target itself for None)."""
    if member is None:
        return log_target_values(target, np.asarray(x, dtype=float))
    spec = BOUND_SPECS[member]
    eff = variant if spec.dual_form else None
    return log_bound_values(member, x, alpha, eff)
