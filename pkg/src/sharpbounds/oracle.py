"""Certified reference values.

Three instruments, all independent of the float-side catalog formulas:

* truncated evaluation of the targets' infinite products with analytic
  tail control (``product_enclosure`` / ``log_product_enclosure``),
* series evaluation of the three-term factor inequality via the
  log-series log(1-t) = -sum t^k/k with remainder t^(N+1)/((N+1)(1-t))
  (``bernoulli_enclosure``),
* partial-sum checks of the table constants against their closed forms
  (``partial_sum_check``).

Tail handling for the products: with v_k = c/m_k^p the omitted log-tail
after N factors is sum_{k>N} log(1 - v_k) = -(c*T_p + c^2/2*T_2p +
c^3/3*T_3p + R), T_q(N) = sum_{k>N} 1/m_k^q and 0 <= R <=
c^4*T_4p/(4(1-v_{N+1})). T_p and T_2p are table constants minus interval
partial sums, so they carry no truncation slack of their own; T_3p and
T_4p use integral-comparison brackets
    1/((q-1)(N+1)^(q-1)) < sum_{k>N} 1/k^q < 1/((q-1)N^(q-1))
(and the (2k-1) analogue). Only the T_3p bracket width and the R bound
contribute analytic slack, which is what the term planner budgets
against; first- and second-order tail mass is carried exactly.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache

import mpmath as mp

from .constants import SERIES, SeriesSpec
from .enclosure import (
    Enclosure,
    _down,
    _up,
    div_int,
    exp_enclosure,
    ipow_enclosure,
    log1p_enclosure,
    mul_pos,
    pi_power_enclosure,
    sum_enclosures,
)
from .errors import DomainError, PrecisionError
from .targets import PRODUCT_FORMS, ProductForm, Target

_TINY = 5e-324  # smallest positive subnormal, used when a positive bound underflows


@dataclass(frozen=True)
class TailBudget:
    """Requested enclosure width and the truncation index serving it."""

    eps: float
    n_terms: int


# ---------------------------------------------------------------------------
# family sums sum_k 1/m_k^q and their tails
# ---------------------------------------------------------------------------

_term_lists: dict[tuple[int, bool], tuple[list[float], list[float]]] = {}
_term_lock = threading.Lock()


def _family_term_lists(power: int, odd: bool, n: int) -> tuple[list[float], list[float]]:
    key = (power, odd)
    with _term_lock:
        los, his = _term_lists.setdefault(key, ([], []))
        for k in range(len(los) + 1, n + 1):
            m = (2 * k - 1) if odd else k
            t = 1.0 / m**power  # exact int denominator, one correct rounding
            los.append(max(0.0, _down(t)))
            his.append(_up(t) if t > 0.0 else _TINY)
        return los[:n], his[:n]


def family_partial_enclosure(power: int, odd: bool, n: int) -> Enclosure:
    los, his = _family_term_lists(power, odd, n)
    return Enclosure(_down(math.fsum(los)), _up(math.fsum(his)))


def _integral_tail_hi(power: int, odd: bool, n: int) -> float:
    q = power
    base = (2 * n - 1) if odd else n
    scale = 2.0 * (q - 1) if odd else float(q - 1)
    t = base ** (1 - q) / scale
    return _up(_up(t)) if t > 0.0 else _TINY


def _integral_tail_lo(power: int, odd: bool, n: int) -> float:
    q = power
    base = (2 * n + 1) if odd else (n + 1)
    scale = 2.0 * (q - 1) if odd else float(q - 1)
    t = base ** (1 - q) / scale
    return max(0.0, _down(_down(t)))


def family_tail_crude(power: int, odd: bool, n: int) -> Enclosure:
    """Integral-comparison bracket for sum_{k>n} 1/m_k^power."""
    return Enclosure(_integral_tail_lo(power, odd, n), _integral_tail_hi(power, odd, n))


@lru_cache(maxsize=None)
def family_sum_enclosure(power: int, odd: bool) -> Enclosure:
    """Enclosure of sum_k 1/m_k^power.

    Powers 2, 4, 8 come from the closed forms; any other power is summed
    directly until the terms fall below relative 1e-22, plus the
    integral tail.
    """
    if power < 2:
        raise DomainError(f"family sums require power >= 2, got {power}")
    if power in (2, 4, 8):
        piq = pi_power_enclosure(power)
        if not odd:
            return piq / {2: 6, 4: 90, 8: 9450}[power]
        if power == 2:
            return piq / 8
        if power == 4:
            return piq / 96
        return (piq * 17) / 161280
    los: list[float] = []
    his: list[float] = []
    k = 0
    while True:
        k += 1
        m = (2 * k - 1) if odd else k
        t = 1.0 / m**power
        los.append(max(0.0, _down(t)))
        his.append(_up(t) if t > 0.0 else _TINY)
        if t < 1e-22 or k >= 600:
            break
    his.append(_integral_tail_hi(power, odd, k))
    return Enclosure(_down(math.fsum(los)), _up(math.fsum(his)))


def family_tail_enclosure(power: int, odd: bool, n: int) -> Enclosure:
    """Tight tail sum_{k>n} 1/m_k^power: closed form minus interval partial."""
    t = family_sum_enclosure(power, odd) - family_partial_enclosure(power, odd, n)
    return Enclosure(max(0.0, t.lo), max(t.hi, _TINY))


# ---------------------------------------------------------------------------
# elementary positive series on enclosures
# ---------------------------------------------------------------------------

def _series_tail_hi(v_hi: float, vpow_hi: float, j: int) -> float:
    # upper bound on sum_{i>j} v^i/i = v^(j+1)/((j+1)(1-v)) with outward steps
    if v_hi >= 1.0:
        return math.inf
    numer = _up(vpow_hi * v_hi)
    denom = _down((j + 1) * (1.0 - v_hi))
    if denom <= 0.0:
        return math.inf
    return _up(numer / denom)


def neg_g_enclosure(v: Enclosure, rel: float = 1e-13, cap: int = 200_000) -> Enclosure:
    """Enclosure of -(log(1-v) + v) = sum_{j>=2} v^j/j, a nonnegative value.

    Series evaluation keeps the result tight when v is an interval (the
    direct log1p(-v) + v form decorrelates); above v ~ 0.985 the series
    is too slow and the direct form takes over.
    """
    if v.lo < 0.0 or v.hi >= 1.0:
        raise DomainError(f"neg_g_enclosure requires v in [0, 1), got {v}")
    if v.hi == 0.0:
        return Enclosure.point(0.0)
    if v.hi > 0.985:
        direct = -(log1p_enclosure(-v) + v)
        return Enclosure(max(0.0, direct.lo), max(direct.hi, 0.0))
    los: list[float] = []
    his: list[float] = []
    vpow = mul_pos(v, v)
    j = 2
    running_lo = 0.0
    while True:
        los.append(_down(vpow.lo / j))
        his.append(_up(vpow.hi / j))
        running_lo += vpow.lo / j
        bound = _series_tail_hi(v.hi, vpow.hi, j)
        if bound <= max(1e-18, rel * running_lo) or j >= cap:
            his.append(bound)
            break
        vpow = mul_pos(vpow, v)
        j += 1
    return Enclosure(max(0.0, _down(math.fsum(los))), _up(math.fsum(his)))


def phi_factor_enclosure(u: Enclosure, v: Enclosure, rel: float = 1e-10,
                         cap: int = 200_000) -> Enclosure:
    """Enclosure of log(1-uv) - u^2 log(1-v) - uv(u-1) for one factor.

    Equals sum_{j>=3} (v^j/j) * u^2 * (1 - u^(j-2)); the factored form
    keeps every term's enclosure nonnegative, so the lower endpoint stays
    positive on boxes with u.hi < 1 instead of being lost to interval
    decorrelation. Above v ~ 0.995 the series is too slow and the direct
    log form takes over (boxes there carry gaps far larger than its
    decorrelation loss).
    """
    if u.lo < 0.0 or u.hi > 1.0 or v.lo < 0.0 or v.hi >= 1.0:
        raise DomainError(f"phi_factor_enclosure domain violated: u={u}, v={v}")
    if v.hi == 0.0 or u.hi == 0.0:
        return Enclosure.point(0.0)
    if v.hi > 0.995:
        uv = mul_pos(u, v)
        direct = (log1p_enclosure(-uv)
                  - ipow_enclosure(u, 2) * log1p_enclosure(-v)
                  - uv * (u - Enclosure.point(1.0)))
        return direct
    u2 = mul_pos(u, u)
    upow = u  # u^(j-2) at j = 3
    vpow = mul_pos(mul_pos(v, v), v)
    los: list[float] = []
    his: list[float] = []
    j = 3
    running_lo = 0.0
    u2_hi = _up(u.hi * u.hi)
    while True:
        one_minus = Enclosure(max(0.0, _down(1.0 - upow.hi)), _up(1.0 - upow.lo))
        term = div_int(mul_pos(vpow, mul_pos(u2, one_minus)), j)
        los.append(term.lo)
        his.append(term.hi)
        running_lo += term.lo
        bound = _up(u2_hi * _series_tail_hi(v.hi, vpow.hi, j))
        if bound <= max(1e-18, rel * running_lo) or j >= cap:
            his.append(bound)
            break
        vpow = mul_pos(vpow, v)
        upow = mul_pos(upow, u)
        j += 1
    return Enclosure(_down(math.fsum(los)), _up(math.fsum(his)))


# ---------------------------------------------------------------------------
# product enclosures
# ---------------------------------------------------------------------------

def coefficient_enclosure(form: ProductForm, x: Enclosure) -> Enclosure:
    """Enclosure of c(x) = scale * x^p / pi^p."""
    if x.lo < 0.0:
        raise DomainError(f"x must be nonnegative, got {x}")
    return ipow_enclosure(x, form.power) * form.scale / pi_power_enclosure(form.power)


def _plan_terms(form: ProductForm, c_hi: float, eps: float) -> int:
    """Smallest truncation index whose analytic tail slack is <= eps/2."""
    p, odd = form.power, form.odd

    def halfwidth(n: int) -> float:
        v_next = c_hi / form.factor_index(n + 1) ** p
        if v_next >= 0.5:
            return math.inf
        t3 = family_tail_crude(3 * p, odd, n)
        t4_hi = _integral_tail_hi(4 * p, odd, n)
        return (c_hi**3 / 3.0) * (t3.hi - t3.lo) + c_hi**4 * t4_hi / (4.0 * (1.0 - v_next))

    target_hw = eps / 2.0
    n = 4
    while halfwidth(n) > target_hw:
        n *= 2
        if n > 1_000_000:
            raise PrecisionError(
                f"tail budget eps={eps} unreachable for coefficient {c_hi}")
    lo, hi = max(1, n // 2), n
    while lo < hi:
        mid = (lo + hi) // 2
        if halfwidth(mid) <= target_hw:
            hi = mid
        else:
            lo = mid + 1
    return hi


def plan_tail_budget(target: Target, x: float, eps: float) -> TailBudget:
    """Truncation plan for product_enclosure at a point."""
    if eps <= 0.0:
        raise DomainError(f"eps must be positive, got {eps}")
    form = PRODUCT_FORMS[target]
    c = coefficient_enclosure(form, Enclosure.point(float(x)))
    if c.hi >= 1.0:
        raise DomainError(f"x={x} outside the product domain of {target.name}")
    return TailBudget(eps, _plan_terms(form, c.hi, eps))


def _log_tail_enclosure(form: ProductForm, c: Enclosure, n: int, shifted: bool) -> Enclosure:
    p, odd = form.power, form.odd
    v_next_hi = _up(c.hi / form.factor_index(n + 1) ** p)
    if v_next_hi >= 1.0:
        raise PrecisionError("truncation too short: first omitted factor not in (0,1)")
    c2 = mul_pos(c, c)
    c3 = mul_pos(c2, c)
    total = div_int(mul_pos(c2, family_tail_enclosure(2 * p, odd, n)), 2)
    total = total + div_int(mul_pos(c3, family_tail_crude(3 * p, odd, n)), 3)
    rem_hi = _up(c.hi**4 * _integral_tail_hi(4 * p, odd, n) / (4.0 * (1.0 - v_next_hi)))
    total = total + Enclosure(0.0, rem_hi)
    if not shifted:
        total = total + mul_pos(c, family_tail_enclosure(p, odd, n))
    return -total


def log_product_enclosure(target: Target, x, eps: float = 1e-13,
                          n_terms: int | None = None, shifted: bool = False) -> Enclosure:
    """Enclosure of log prod_k (1 - v_k), v_k = c(x)/m_k^p.

    With ``shifted`` the enclosed value is sum_k [log(1 - v_k) + v_k]
    instead, i.e. the log-distance between the target and its exponential
    upper bound; that variant has no first-order tail mass and stays
    relatively tight as x -> 0. ``x`` may be a float or an Enclosure
    (for box certification).
    """
    form = PRODUCT_FORMS[target]
    xe = x if isinstance(x, Enclosure) else Enclosure.point(float(x))
    c = coefficient_enclosure(form, xe)
    if c.hi >= 1.0:
        raise DomainError(
            f"x={x} outside the open product domain (0, {form.sup_x!r}) of {target.name}")
    if c.hi == 0.0:
        return Enclosure.point(0.0)
    n = n_terms if n_terms is not None else _plan_terms(form, c.hi, eps)
    terms: list[Enclosure] = []
    for k in range(1, n + 1):
        mq = form.factor_index(k) ** form.power
        v = Enclosure(max(0.0, _down(c.lo / mq)), _up(c.hi / mq))
        if shifted:
            terms.append(-neg_g_enclosure(v))
        else:
            terms.append(log1p_enclosure(-v))
    return sum_enclosures(terms) + _log_tail_enclosure(form, c, n, shifted)


def product_enclosure(target: Target, x: float, eps: float) -> Enclosure:
    """Enclosure of the infinite-product value of a target at a point.

    Raises PrecisionError when the requested width cannot be met, per the
    width contract; x = 0 returns the exact empty-product value 1.
    """
    if eps <= 0.0:
        raise DomainError(f"eps must be positive, got {eps}")
    form = PRODUCT_FORMS[target]
    if x == 0.0:
        return Enclosure.point(1.0)
    if not (0.0 < x < form.sup_x):
        raise DomainError(
            f"x={x} outside the open product domain (0, {form.sup_x!r}) of {target.name}")
    enc = exp_enclosure(log_product_enclosure(target, x, eps=eps / 2.0))
    if enc.width > eps:
        raise PrecisionError(
            f"width {enc.width} exceeds requested eps {eps} for {target.name} at x={x}")
    return enc


# ---------------------------------------------------------------------------
# factor-inequality enclosures
# ---------------------------------------------------------------------------

def _log1m_tail_index(v: float, eps_tail: float) -> int:
    vp = v
    n = 1
    while True:
        bound = vp * v / ((n + 1) * (1.0 - v))
        if bound <= eps_tail:
            return n
        vp *= v
        n += 1
        if n > 5_000_000:
            raise PrecisionError(f"log series for v={v} cannot reach tail {eps_tail}")


def _log1m_series_float(v: float, n: int) -> Enclosure:
    ve = Enclosure.point(v)
    vpow = ve
    los = [max(0.0, _down(v))]
    his = [_up(v)]
    for k in range(2, n + 1):
        vpow = mul_pos(vpow, ve)
        los.append(_down(vpow.lo / k))
        his.append(_up(vpow.hi / k))
    vpow = mul_pos(vpow, ve)  # v^(n+1)
    tail_lo = max(0.0, _down(vpow.lo / (n + 1)))
    tail_hi = _up(vpow.hi / _down((n + 1) * (1.0 - v)))
    s = sum_enclosures([Enclosure(lo, hi) for lo, hi in zip(los, his)])
    return -(s + Enclosure(tail_lo, tail_hi))


def _log1m_series_mp(v: float, n: int) -> Enclosure:
    # High-precision pass for slowly converging series (v > 1/2): nearest
    # rounding at `prec` bits, with an inflation covering <= 3n roundings of
    # relative size 2^(1-prec) on partials no larger than |s| + 1.
    prec = 96 + n.bit_length()
    with mp.workprec(prec):
        t = mp.mpf(v)
        s = mp.mpf(0)
        tp = mp.mpf(1)
        for k in range(1, n + 1):
            tp *= t
            s += tp / k
        slack = (abs(s) + 1) * n * mp.mpf(2) ** (4 - prec)
        tp *= t  # v^(n+1)
        tail_hi = tp / ((n + 1) * (1 - t))
        tail_lo = tp / (n + 1)
        lo = -(s + tail_hi + slack)
        hi = -(s + tail_lo - slack)
        return Enclosure(_down(float(lo)), _up(float(hi)))


@lru_cache(maxsize=4096)
def _log1m_series_enclosure(v: float, eps: float) -> Enclosure:
    """log(1 - v) via the power series, to width comfortably below eps."""
    n = _log1m_tail_index(v, eps / 4.0)
    if v <= 0.5:
        return _log1m_series_float(v, n)
    return _log1m_series_mp(v, n)


def bernoulli_enclosure(u: float, v: float,
                        eps: float = 1e-14) -> tuple[Enclosure, Enclosure, Enclosure]:
    """Enclosures of the three factor-inequality expressions at (u, v).

    The log of 1 - v comes from the series evaluation above, not from
    libm, so the certified ordering is independent of the float-side
    ``bernoulli_triple``.
    """
    if not (0.0 < u < 1.0) or not (0.0 < v < 1.0):
        raise DomainError(f"(u, v) must lie in (0,1)^2, got ({u}, {v})")
    if eps <= 0.0:
        raise DomainError(f"eps must be positive, got {eps}")
    log1mv = _log1m_series_enclosure(v, eps / 2.0)
    ue = Enclosure.point(u)
    ve = Enclosure.point(v)
    left = Enclosure.point(1.0) - ue * ve
    mid = exp_enclosure(mul_pos(ue, ue) * log1mv + ue * ve * (ue - Enclosure.point(1.0)))
    right = exp_enclosure(ue * log1mv)
    for name, enc in (("left", left), ("mid", mid), ("right", right)):
        if enc.width > eps:
            raise PrecisionError(
                f"{name} enclosure width {enc.width} exceeds eps {eps} at ({u}, {v})")
    return left, mid, right


def bernoulli_box_certified(u_box: Enclosure, v_box: Enclosure) -> bool:
    """Certify the triple ordering over a whole (u, v) box.

    Both adjacent log-gaps have positive-term series forms, so the
    ordering holds on the box iff both enclosures stay strictly positive.
    """
    left_mid = phi_factor_enclosure(u_box, v_box, rel=0.25)
    one_minus_u = Enclosure(max(0.0, _down(1.0 - u_box.hi)), _up(1.0 - u_box.lo))
    mid_right = mul_pos(mul_pos(u_box, one_minus_u), neg_g_enclosure(v_box, rel=0.25))
    return left_mid.strictly_positive() and mid_right.strictly_positive()


# ---------------------------------------------------------------------------
# constants checks
# ---------------------------------------------------------------------------

def partial_sum_check(series: str | SeriesSpec, n: int) -> tuple[float, float]:
    """n-term partial sum of a table series and an analytic tail bound.

    The closed form always lies in (partial, partial + residual_bound].
    """
    spec = SERIES[series] if isinstance(series, str) else series
    if n < 1:
        raise DomainError(f"partial-sum length must be >= 1, got {n}")
    partial = math.fsum(spec.term(k) for k in range(1, n + 1))
    return partial, spec.tail_bound(n)
