"""Sweeps, interval certification, sharpness comparison and the
printed-vs-corrected audit.

Float sweeps compare chain members in log domain on dense grids; the
violation threshold is -tol rather than 0 so rounding noise is kept
apart from genuine falsification, with interval certification as the
arbiter. Certification bisects boxes and only certifies a box when the
enclosure of every adjacent pairwise log-gap is strictly positive; the
per-pair gap enclosures below are algebraically rearranged (positive
series forms) so that the correlated difference survives interval
evaluation instead of being lost to decorrelation.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .catalog import (
    BOUND_SPECS,
    Bound,
    BoundKind,
    Role,
    Variant,
    endpoint_coefficients,
    eval_bound,
    eval_target,
    log_bound_values,
    member_log_values,
)
from .chains import ChainSpec, get_chain
from .constants import zeta_constants
from .enclosure import (
    Enclosure,
    _down,
    _up,
    ipow_enclosure,
    log1p_enclosure,
    mul_pos,
    sum_enclosures,
)
from .errors import (
    ConfigError,
    DegenerateDomainError,
    DomainError,
    PrecisionError,
    SideMismatchError,
)
from .oracle import (
    _log_tail_enclosure,
    _plan_terms,
    coefficient_enclosure,
    family_sum_enclosure,
    log_product_enclosure,
    neg_g_enclosure,
    phi_factor_enclosure,
)
from .targets import PRODUCT_FORMS, Target

ENDPOINT_MARGIN = 1e-9
VIOLATION_CAP = 200  # stored per pair; the count field is exact regardless


class Mode(Enum):
    FLOAT = "float"
    INTERVAL = "interval"


@dataclass(frozen=True)
class SweepConfig:
    chain: str | None = None
    variant: Variant = Variant.DERIVATION_CONSISTENT
    grid: int = 100_000
    alpha_samples: int = 20
    alphas: tuple[float, ...] | None = None
    refine_depth: int = 3
    tol: float = 1e-12
    mode: Mode = Mode.FLOAT
    max_boxes: int = 20_000

    def __post_init__(self):
        if self.grid < 2:
            raise ConfigError(f"grid must be >= 2, got {self.grid}")
        if not (self.tol > 0.0):
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if self.alpha_samples < 1:
            raise ConfigError(f"alpha_samples must be >= 1, got {self.alpha_samples}")
        if self.refine_depth < 0:
            raise ConfigError(f"refine_depth must be >= 0, got {self.refine_depth}")
        if self.max_boxes < 1:
            raise ConfigError(f"max_boxes must be >= 1, got {self.max_boxes}")


@dataclass(frozen=True)
class GapSample:
    x: float
    alpha: float | None
    pair: str
    gap: float


@dataclass(frozen=True)
class PairReport:
    pair: str
    min_gap: float
    argmin_x: float
    argmin_alpha: float | None
    violation_count: int
    violations: tuple[GapSample, ...]


@dataclass(frozen=True)
class ChainReport:
    chain: str
    variant: str
    mode: str
    grid: int
    tol: float
    alphas: tuple[float, ...] | None
    pairs: tuple[PairReport, ...]
    certified_fraction: float | None
    certify_status: str | None
    wall_time: float = field(compare=False, default=0.0)

    @property
    def violation_count(self) -> int:
        return sum(p.violation_count for p in self.pairs)


def default_alphas(alpha_sup: float, n: int) -> tuple[float, ...]:
    """n anchor samples inside (0, alpha_sup), log-spaced offsets from the
    upper end: the bounds degrade as alpha approaches the constraint, so
    the worst cases concentrate there."""
    offsets = np.geomspace(alpha_sup / 2.0, alpha_sup * 1e-7, n)
    return tuple(float(alpha_sup - d) for d in offsets)


def _sweep_alphas(spec: ChainSpec, config: SweepConfig) -> tuple[float | None, ...]:
    if not spec.alpha_based:
        if config.alphas:
            raise ConfigError(f"chain {spec.chain_id} takes no alpha samples")
        return (None,)
    if config.alphas is not None:
        for a in config.alphas:
            if not (0.0 < a < spec.alpha_sup):
                raise ConfigError(
                    f"alpha sample {a} outside the open constraint (0, {spec.alpha_sup!r})")
        return tuple(config.alphas)
    return default_alphas(spec.alpha_sup, config.alpha_samples)


def _pair_gap_values(spec: ChainSpec, i: int, x, alpha):
    lhs = member_log_values(spec.target, spec.members[i], x, alpha, spec.variant)
    rhs = member_log_values(spec.target, spec.members[i + 1], x, alpha, spec.variant)
    return rhs - lhs


class _PairTracker:
    """Running minimum and violation records for one adjacent pair."""

    def __init__(self, label: str, tol: float):
        self.label = label
        self.tol = tol
        self.min_gap = math.inf
        self.argmin_x = math.nan
        self.argmin_alpha: float | None = None
        self.violation_count = 0
        self.violations: list[GapSample] = []

    def update(self, gaps: np.ndarray, xs: np.ndarray, alpha: float | None) -> None:
        i = int(np.argmin(gaps))
        self._offer(float(gaps[i]), float(xs[i]), alpha)
        mask = gaps < -self.tol
        n = int(np.count_nonzero(mask))
        if n:
            self.violation_count += n
            room = VIOLATION_CAP - len(self.violations)
            if room > 0:
                for j in np.nonzero(mask)[0][:room]:
                    self.violations.append(GapSample(
                        float(xs[j]), alpha, self.label, float(gaps[j])))

    def _offer(self, gap: float, x: float, alpha: float | None) -> None:
        current = (self.min_gap, self.argmin_x,
                   -math.inf if self.argmin_alpha is None else self.argmin_alpha)
        offered = (gap, x, -math.inf if alpha is None else alpha)
        if offered < current:
            self.min_gap, self.argmin_x, self.argmin_alpha = gap, x, alpha

    def report(self) -> PairReport:
        return PairReport(self.label, self.min_gap, self.argmin_x, self.argmin_alpha,
                          self.violation_count, tuple(self.violations))


def _grid_for(spec: ChainSpec, alpha: float | None, n: int) -> np.ndarray:
    hi = (alpha if alpha is not None else spec.x_sup) - ENDPOINT_MARGIN
    lo = ENDPOINT_MARGIN
    if hi <= lo:
        raise DegenerateDomainError(
            f"sweep domain for chain {spec.chain_id} is empty at alpha={alpha}")
    return np.linspace(lo, hi, n)


def sweep_chain(spec: ChainSpec, config: SweepConfig) -> ChainReport:
    """Grid sweep of every adjacent pair of a chain, in log domain.

    Deterministic for a fixed config: the grid is fixed, minima are
    reduced with ties broken by smallest x then smallest alpha, and
    refinement around each minimum is a fixed bisection schedule.
    """
    if config.chain is not None and config.chain != spec.chain_id:
        raise ConfigError(
            f"config is for chain {config.chain}, spec is {spec.chain_id}")
    start = time.perf_counter()
    alphas = _sweep_alphas(spec, config)
    labels = spec.pair_labels()
    trackers = [_PairTracker(lbl, config.tol) for lbl in labels]

    for alpha in alphas:
        xs = _grid_for(spec, alpha, config.grid)
        logs = [member_log_values(spec.target, m, xs, alpha, spec.variant)
                for m in spec.members]
        for i, tracker in enumerate(trackers):
            tracker.update(logs[i + 1] - logs[i], xs, alpha)

    for i, tracker in enumerate(trackers):
        _refine_minimum(spec, config, i, tracker)

    certified_fraction = None
    certify_status = None
    if config.mode is Mode.INTERVAL:
        x_box, alpha_box = canonical_box(spec)
        result = certify_region(spec, x_box, alpha_box,
                                tol=config.tol, max_boxes=config.max_boxes)
        certified_fraction = result.certified_fraction
        certify_status = result.status.name

    alphas_field = None if alphas == (None,) else tuple(a for a in alphas)
    return ChainReport(
        chain=spec.chain_id,
        variant=spec.variant.value,
        mode=config.mode.value,
        grid=config.grid,
        tol=config.tol,
        alphas=alphas_field,
        pairs=tuple(t.report() for t in trackers),
        certified_fraction=certified_fraction,
        certify_status=certify_status,
        wall_time=time.perf_counter() - start,
    )


def _refine_minimum(spec: ChainSpec, config: SweepConfig, i: int,
                    tracker: _PairTracker) -> None:
    if config.refine_depth == 0 or not math.isfinite(tracker.min_gap):
        return
    alpha = tracker.argmin_alpha
    hi = (alpha if alpha is not None else spec.x_sup) - ENDPOINT_MARGIN
    lo = ENDPOINT_MARGIN
    h = (hi - lo) / (config.grid - 1)
    for _ in range(config.refine_depth):
        w0 = max(lo, tracker.argmin_x - h)
        w1 = min(hi, tracker.argmin_x + h)
        xs = np.linspace(w0, w1, 33)
        gaps = np.asarray(_pair_gap_values(spec, i, xs, alpha))
        j = int(np.argmin(gaps))
        tracker._offer(float(gaps[j]), float(xs[j]), alpha)
        if gaps[j] < -config.tol and len(tracker.violations) < VIOLATION_CAP:
            tracker.violation_count += 1
            tracker.violations.append(GapSample(
                float(xs[j]), alpha, tracker.label, float(gaps[j])))
        h = (w1 - w0) / 16.0


# ---------------------------------------------------------------------------
# interval certification
# ---------------------------------------------------------------------------

class CertifyStatus(Enum):
    CERTIFIED = "certified"
    FALSIFIED = "falsified"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Witness:
    x: float
    alpha: float | None
    pair: str
    lhs_log: Enclosure
    rhs_log: Enclosure
    gap: Enclosure


@dataclass(frozen=True)
class CertifyResult:
    status: CertifyStatus
    certified_fraction: float
    boxes_used: int
    witness: Witness | None


def canonical_box(spec: ChainSpec) -> tuple[tuple[float, float], tuple[float, float] | None]:
    """Default certification region: the full open x-domain trimmed by 0.01
    for endpoint-anchored chains, or a representative anchor with x across
    (0, alpha) for anchored ones."""
    if not spec.alpha_based:
        return (0.01, spec.x_sup - 0.01), None
    a0 = 0.75 * spec.alpha_sup
    return (0.01 * a0, 0.99 * a0), (a0, a0)


def _endpoint_coefficient_enclosures(bound: Bound, variant: Variant):
    z2 = family_sum_enclosure(2, False)
    z4 = family_sum_enclosure(4, False)
    z8 = family_sum_enclosure(8, False)
    o4 = family_sum_enclosure(4, True)
    o8 = family_sum_enclosure(8, True)
    zero = Enclosure.point(0.0)
    corrected = variant is Variant.DERIVATION_CONSISTENT
    if bound is Bound.B7:
        return z2, zero, zero
    if bound is Bound.B8:
        return z4, z4 - z2, zero
    if bound is Bound.B12:
        return z4, zero, zero
    if bound is Bound.B13:
        return (z8, z8 - z4, zero) if corrected else (z8, -z4, z4)
    if bound is Bound.B17:
        return (o4, zero, zero) if corrected else (z4, zero, zero)
    if bound is Bound.B18:
        return (o8, o8 - o4, zero) if corrected else (o8, -o4, o4 / 16)
    raise DomainError(f"{bound.name} is not endpoint-anchored")


def _endpoint_gap_vs_target(bound: Bound, variant: Variant, xe: Enclosure,
                            rel: float = 1e-10, cap: int = 100_000) -> Enclosure:
    """Enclosure of log(target) - log(bound) for an endpoint-anchored bound.

    The derivation-consistent gap is the positive-coefficient series
    sum_{j>=j0} (v^j/j) (S_base - S_{j p}); a printed form adds the exactly
    known log-difference between the two forms on top of it.
    """
    spec = BOUND_SPECS[bound]
    form = PRODUCT_FORMS[spec.target]
    p, odd = form.power, form.odd
    v = coefficient_enclosure(form, xe)
    if v.hi >= 1.0:
        raise DomainError(f"box outside the product domain of {spec.target.name}")
    refined = spec.kind is BoundKind.ENDPOINT_REFINED
    j0 = 3 if refined else 2
    base = family_sum_enclosure(2 * p if refined else p, odd)

    canonical = Enclosure.point(0.0)
    if v.hi > 0.0:
        los: list[float] = []
        his: list[float] = []
        vpow = v
        for _ in range(j0 - 1):
            vpow = mul_pos(vpow, v)
        j = j0
        running_lo = 0.0
        base_minus_one_hi = max(_up(base.hi - 1.0), _TINY_COEF)
        while True:
            coef = base - family_sum_enclosure(j * p, odd)
            coef = Enclosure(max(0.0, coef.lo), max(coef.hi, 0.0))
            los.append(_down(vpow.lo / j * coef.lo))
            his.append(_up(vpow.hi / j * coef.hi))
            running_lo += los[-1]
            tail = _up(base_minus_one_hi * _series_tail_hi_local(v.hi, vpow.hi, j))
            if tail <= max(1e-18, rel * running_lo) or j >= cap:
                his.append(tail)
                break
            vpow = mul_pos(vpow, v)
            j += 1
        canonical = Enclosure(_down(math.fsum(los)), _up(math.fsum(his)))

    if variant is Variant.DERIVATION_CONSISTENT or not spec.dual_form:
        return canonical
    a_act, b1_act, b2_act = _endpoint_coefficient_enclosures(bound, Variant.AS_PRINTED)
    a_can, b1_can, b2_can = _endpoint_coefficient_enclosures(
        bound, Variant.DERIVATION_CONSISTENT)
    correction = (a_can - a_act) * log1p_enclosure(-v) \
        + (b1_can - b1_act) * v + (b2_can - b2_act) * mul_pos(v, v)
    return canonical + correction


_TINY_COEF = 5e-324


def _series_tail_hi_local(v_hi: float, vpow_hi: float, j: int) -> float:
    if v_hi >= 1.0:
        return math.inf
    denom = _down((j + 1) * (1.0 - v_hi))
    if denom <= 0.0:
        return math.inf
    return _up(_up(vpow_hi * v_hi) / denom)


def _endpoint_pair_gap(spec: ChainSpec, xe: Enclosure) -> Enclosure:
    """Enclosure of log(refined) - log(classic) for an endpoint chain pair."""
    classic, refined = spec.members[0], spec.members[1]
    form = PRODUCT_FORMS[spec.target]
    v = coefficient_enclosure(form, xe)
    if spec.variant is Variant.DERIVATION_CONSISTENT:
        s_p = family_sum_enclosure(form.power, form.odd)
        s_2p = family_sum_enclosure(2 * form.power, form.odd)
        return mul_pos(Enclosure(max(0.0, (s_p - s_2p).lo), (s_p - s_2p).hi),
                       neg_g_enclosure(v))
    a_l, b1_l, b2_l = _endpoint_coefficient_enclosures(classic, spec.variant)
    a_r, b1_r, b2_r = _endpoint_coefficient_enclosures(refined, spec.variant)
    return (a_r - a_l) * log1p_enclosure(-v) + (b1_r - b1_l) * v \
        + (b2_r - b2_l) * mul_pos(v, v)


def _alpha_u(spec: ChainSpec, xe: Enclosure, ae: Enclosure) -> Enclosure:
    form = PRODUCT_FORMS[spec.target]
    return ipow_enclosure(xe / ae, form.power)


def pair_gap_enclosure(spec: ChainSpec, i: int, xe: Enclosure,
                       ae: Enclosure | None, tol: float = 1e-12) -> Enclosure:
    """Enclosure of the i-th adjacent log-gap of a chain over a box."""
    lhs, rhs = spec.members[i], spec.members[i + 1]
    lk = None if lhs is None else BOUND_SPECS[lhs].kind
    rk = None if rhs is None else BOUND_SPECS[rhs].kind
    form = PRODUCT_FORMS[spec.target]

    if lk is BoundKind.ALPHA_CLASSIC and rk is BoundKind.ALPHA_REFINED:
        u = _alpha_u(spec, xe, ae)
        neg_shift = -log_product_enclosure(spec.target, ae, eps=tol, shifted=True)
        return u * (Enclosure.point(1.0) - u) * neg_shift

    if lk is BoundKind.ALPHA_REFINED and rhs is None:
        u = _alpha_u(spec, xe, ae)
        c = coefficient_enclosure(form, ae)
        n = _plan_terms(form, c.hi, tol)
        terms = []
        for k in range(1, n + 1):
            mq = form.factor_index(k) ** form.power
            v = Enclosure(max(0.0, _down(c.lo / mq)), _up(c.hi / mq))
            terms.append(phi_factor_enclosure(
                Enclosure(max(0.0, u.lo), min(1.0, u.hi)), v, rel=1e-8))
        tail_shift = _log_tail_enclosure(form, c, n, shifted=True)
        k_tail = Enclosure(0.0, _up(_up(u.hi * u.hi) * max(-tail_shift.lo, 0.0)))
        return sum_enclosures(terms) + k_tail

    if lhs is None and rk is BoundKind.UPPER:
        return -log_product_enclosure(spec.target, xe, eps=tol, shifted=True)

    if lk is BoundKind.UPPER and rhs is None:
        return log_product_enclosure(spec.target, xe, eps=tol, shifted=True)

    if lk is BoundKind.ENDPOINT_CLASSIC and rk is BoundKind.ENDPOINT_REFINED:
        return _endpoint_pair_gap(spec, xe)

    if rhs is None and lk in (BoundKind.ENDPOINT_CLASSIC, BoundKind.ENDPOINT_REFINED):
        variant = spec.variant if BOUND_SPECS[lhs].dual_form else Variant.DERIVATION_CONSISTENT
        return _endpoint_gap_vs_target(lhs, variant, xe)

    raise ConfigError(
        f"no interval evaluator for pair {spec.member_label(lhs)} <= {spec.member_label(rhs)}")


def member_log_enclosure(spec: ChainSpec, member, xe: Enclosure,
                         ae: Enclosure | None, tol: float = 1e-12) -> Enclosure:
    """Enclosure of one chain member's log value (for witness records)."""
    if member is None:
        return log_product_enclosure(spec.target, xe, eps=tol)
    bspec = BOUND_SPECS[member]
    form = PRODUCT_FORMS[spec.target]
    variant = spec.variant if bspec.dual_form else Variant.DERIVATION_CONSISTENT
    if bspec.kind is BoundKind.UPPER:
        return -(coefficient_enclosure(form, xe) * family_sum_enclosure(form.power, form.odd))
    if bspec.kind is BoundKind.ALPHA_CLASSIC:
        u = _alpha_u(spec, xe, ae)
        return u * log_product_enclosure(spec.target, ae, eps=tol)
    if bspec.kind is BoundKind.ALPHA_REFINED:
        u = _alpha_u(spec, xe, ae)
        anchor = log_product_enclosure(spec.target, ae, eps=tol)
        shift = coefficient_enclosure(form, ae) * family_sum_enclosure(form.power, form.odd)
        u2 = mul_pos(u, u)
        return u2 * anchor + (u2 - u) * shift
    a, b1, b2 = _endpoint_coefficient_enclosures(member, variant)
    v = coefficient_enclosure(form, xe)
    return a * log1p_enclosure(-v) + b1 * v + b2 * mul_pos(v, v)


def _box_measure(x_box, alpha_box) -> float:
    m = x_box[1] - x_box[0]
    if alpha_box is not None and alpha_box[1] > alpha_box[0]:
        m *= alpha_box[1] - alpha_box[0]
    return m


_MIN_REL_WIDTH = 4e-13


def certify_region(spec: ChainSpec, x_box: tuple[float, float],
                   alpha_box: tuple[float, float] | None = None,
                   tol: float = 1e-12, max_boxes: int = 100_000) -> CertifyResult:
    """Bisection certification of every adjacent pair over a box.

    CERTIFIED means every sub-box had all pairwise gap enclosures
    strictly positive; FALSIFIED returns a concrete witness point whose
    values are enclosure-separated; UNDECIDED reports the certified
    measure fraction once the box budget (or resolution) is exhausted.
    """
    if not (0.0 <= x_box[0] < x_box[1] <= spec.x_sup):
        raise ConfigError(f"x box {x_box} outside chain domain closure")
    if spec.alpha_based:
        if alpha_box is None:
            raise ConfigError(f"chain {spec.chain_id} needs an alpha box")
        if not (0.0 < alpha_box[0] <= alpha_box[1] < spec.alpha_sup):
            raise ConfigError(f"alpha box {alpha_box} outside the constraint")
        if x_box[1] > alpha_box[0]:
            raise ConfigError("x box must satisfy x <= alpha over the whole region")
    elif alpha_box is not None:
        raise ConfigError(f"chain {spec.chain_id} takes no alpha box")
    if max_boxes < 1:
        raise ConfigError(f"max_boxes must be >= 1, got {max_boxes}")

    total = _box_measure(x_box, alpha_box)
    queue: deque = deque([(x_box, alpha_box)])
    certified = 0.0
    used = 0
    slivers = False
    n_pairs = len(spec.members) - 1

    while queue:
        if used >= max_boxes:
            return CertifyResult(CertifyStatus.UNDECIDED, certified / total, used, None)
        xb, ab = queue.popleft()
        used += 1
        xe = Enclosure(xb[0], xb[1])
        ae = None if ab is None else Enclosure(ab[0], ab[1])
        undecided = []
        falsified_pair = None
        try:
            for i in range(n_pairs):
                gap = pair_gap_enclosure(spec, i, xe, ae, tol)
                if gap.strictly_negative():
                    falsified_pair = i
                    break
                if not gap.strictly_positive():
                    undecided.append(i)
        except (PrecisionError, ZeroDivisionError, OverflowError):
            undecided = [0]
        if falsified_pair is not None:
            witness = _witness_at(spec, falsified_pair, xb, ab, tol)
            return CertifyResult(CertifyStatus.FALSIFIED, certified / total, used, witness)
        if not undecided:
            certified += _box_measure(xb, ab)
            continue
        children = _split_box(xb, ab, x_box, alpha_box)
        if children is None:
            slivers = True
        else:
            queue.extend(children)

    if not slivers and certified > 0.0:
        return CertifyResult(CertifyStatus.CERTIFIED, 1.0, used, None)
    return CertifyResult(CertifyStatus.UNDECIDED, certified / total, used, None)


def _split_box(xb, ab, x_root, alpha_root):
    x_rel = (xb[1] - xb[0]) / max(x_root[1] - x_root[0], _TINY_COEF)
    a_rel = 0.0
    if ab is not None and alpha_root[1] > alpha_root[0]:
        a_rel = (ab[1] - ab[0]) / (alpha_root[1] - alpha_root[0])
    if x_rel >= a_rel:
        if xb[1] - xb[0] <= _MIN_REL_WIDTH * max(1.0, abs(xb[1])):
            return None
        mid = 0.5 * (xb[0] + xb[1])
        return ((xb[0], mid), ab), ((mid, xb[1]), ab)
    if ab[1] - ab[0] <= _MIN_REL_WIDTH * max(1.0, abs(ab[1])):
        return None
    mid = 0.5 * (ab[0] + ab[1])
    return (xb, (ab[0], mid)), (xb, (mid, ab[1]))


def _witness_at(spec: ChainSpec, i: int, xb, ab, tol: float) -> Witness:
    x_mid = 0.5 * (xb[0] + xb[1])
    a_mid = None if ab is None else 0.5 * (ab[0] + ab[1])
    xe = Enclosure.point(x_mid)
    ae = None if a_mid is None else Enclosure.point(a_mid)
    lhs = member_log_enclosure(spec, spec.members[i], xe, ae, tol)
    rhs = member_log_enclosure(spec, spec.members[i + 1], xe, ae, tol)
    gap = pair_gap_enclosure(spec, i, xe, ae, tol)
    return Witness(x_mid, a_mid, spec.pair_labels()[i], lhs, rhs, gap)


# ---------------------------------------------------------------------------
# sharpness comparison
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SharpnessReport:
    bound_a: str
    bound_b: str
    variant_a: str
    variant_b: str
    domain: tuple[float, float]
    grid: int
    alpha: float | None
    a_tighter: int
    b_tighter: int
    ties: int
    max_abs_log_gap: float
    argmax_x: float
    mean_abs_log_gap: float
    crossovers: tuple[float, ...]

    @property
    def winner(self) -> str:
        if self.a_tighter >= self.b_tighter:
            return self.bound_a
        return self.bound_b


def sharpness(a: Bound, b: Bound, domain: tuple[float, float], grid: int = 10_000,
              alpha: float | None = None, variant_a: Variant | None = None,
              variant_b: Variant | None = None) -> SharpnessReport:
    """Pointwise tightness comparison of two same-side bounds.

    For lower bounds the larger value is tighter; crossover points are
    located by bisection to 1e-10 in x.
    """
    sa, sb = BOUND_SPECS[a], BOUND_SPECS[b]
    if sa.role is not sb.role or sa.target is not sb.target:
        raise SideMismatchError(
            f"{a.name} and {b.name} do not bound the same target from the same side")
    lo, hi = domain
    sup = min(_eval_sup(sa, alpha), _eval_sup(sb, alpha))
    if not (0.0 <= lo < hi) or hi >= sup:
        raise DomainError(f"domain {domain} not inside [0, {sup!r})")
    if grid < 2:
        raise ConfigError(f"grid must be >= 2, got {grid}")

    xs = np.linspace(max(lo, ENDPOINT_MARGIN), hi, grid)
    la = log_bound_values(a, xs, alpha if sa.alpha_based else None, variant_a)
    lb = log_bound_values(b, xs, alpha if sb.alpha_based else None, variant_b)
    diff = la - lb
    band = 4.44e-16 * (1.0 + np.abs(la) + np.abs(lb))
    sign = np.where(diff > band, 1, np.where(diff < -band, -1, 0))
    if sa.role is Role.UPPER:
        sign = -sign  # for upper bounds the smaller value is tighter
    a_tighter = int(np.count_nonzero(sign > 0))
    b_tighter = int(np.count_nonzero(sign < 0))
    ties = len(xs) - a_tighter - b_tighter

    abs_diff = np.abs(diff)
    k = int(np.argmax(abs_diff))
    crossings = []
    nz = np.nonzero(sign)[0]
    for p, q in zip(nz, nz[1:]):
        if sign[p] * sign[q] < 0:
            crossings.append(_bisect_root(
                lambda t: float(_scalar_log_gap(a, b, t, alpha, variant_a, variant_b)),
                float(xs[p]), float(xs[q])))
    return SharpnessReport(
        a.name, b.name,
        _variant_name(sa, variant_a), _variant_name(sb, variant_b),
        (lo, hi), grid, alpha,
        a_tighter, b_tighter, ties,
        float(abs_diff[k]), float(xs[k]), float(np.mean(abs_diff)),
        tuple(crossings),
    )


def _variant_name(spec, variant: Variant | None) -> str:
    if not spec.dual_form:
        return Variant.DERIVATION_CONSISTENT.value
    return (variant or Variant.DERIVATION_CONSISTENT).value


def _eval_sup(spec, alpha: float | None) -> float:
    if spec.alpha_based:
        if alpha is None:
            raise DomainError(f"{spec.bound.name} requires alpha for comparison")
        if not (0.0 < alpha < spec.alpha_sup):
            raise DomainError(f"alpha {alpha} outside (0, {spec.alpha_sup!r})")
        return alpha
    return spec.x_sup


def _scalar_log_gap(a, b, x, alpha, variant_a, variant_b) -> float:
    sa, sb = BOUND_SPECS[a], BOUND_SPECS[b]
    la = log_bound_values(a, x, alpha if sa.alpha_based else None, variant_a)
    lb = log_bound_values(b, x, alpha if sb.alpha_based else None, variant_b)
    return float(la - lb)


def _bisect_root(f, lo: float, hi: float, xtol: float = 1e-10) -> float:
    flo = f(lo)
    for _ in range(200):
        if hi - lo <= xtol:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (flo < 0.0) == (fm < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# printed-vs-corrected audit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VariantWitness:
    x: float
    printed: float
    corrected: float
    target: float
    note: str


@dataclass(frozen=True)
class AuditRow:
    bound: str
    domain: tuple[float, float]
    printed_valid: bool
    corrected_valid: bool
    printed_violations: int
    corrected_violations: int
    printed_min_gap: float
    printed_argmin_x: float
    corrected_min_gap: float
    corrected_argmin_x: float
    tighter_variant: str
    corrected_tighter: int
    printed_tighter: int
    max_variant_log_gap: float
    argmax_x: float
    crossover_x: float | None
    witnesses: tuple[VariantWitness, ...]
    notes: tuple[str, ...]


@dataclass(frozen=True)
class AuditReport:
    rows: tuple[AuditRow, ...]
    grid: int
    tol: float


_AUDIT_TARGETS = (
    (Bound.B13, "C5", (2.0, 3.1)),
    (Bound.B17, "C7", (0.7, 1.2)),
    (Bound.B18, "C7", (0.7, 1.2)),
)


def discrepancy_audit(config: SweepConfig | None = None) -> AuditReport:
    """Empirical classification of the dual-form bounds B13, B17, B18.

    For each variant the sweep looks for falsification against the
    target; a variant is reported valid only when the sweep is clean and
    a canonical sub-box certifies against oracle enclosures, and invalid
    only on an enclosure-separated witness. Inconclusive evidence is
    recorded in the notes rather than dropped.
    """
    config = config or SweepConfig()
    if config.chain is not None:
        raise ConfigError("audit config must not pin a chain")
    rows = []
    for bound, chain_id, witness_xs in _AUDIT_TARGETS:
        rows.append(_audit_bound(bound, chain_id, witness_xs, config))
    return AuditReport(tuple(rows), config.grid, config.tol)


def _audit_bound(bound: Bound, chain_id: str, witness_xs, config: SweepConfig) -> AuditRow:
    spec = BOUND_SPECS[bound]
    chain = get_chain(chain_id)
    sup = chain.x_sup
    xs = np.linspace(ENDPOINT_MARGIN, sup - ENDPOINT_MARGIN, config.grid)
    log_target = member_log_values(spec.target, None, xs, None, None)
    notes: list[str] = []
    witnesses: list[VariantWitness] = []

    stats = {}
    logs = {}
    for variant in (Variant.AS_PRINTED, Variant.DERIVATION_CONSISTENT):
        lb = log_bound_values(bound, xs, None, variant)
        gap = log_target - lb
        k = int(np.argmin(gap))
        violations = int(np.count_nonzero(gap < -config.tol))
        valid, vnotes = _confirm_validity(bound, variant, xs, gap, sup, config)
        notes.extend(vnotes)
        stats[variant] = (valid, violations, float(gap[k]), float(xs[k]))
        logs[variant] = lb
        if not valid:
            witnesses.append(_variant_witness(
                bound, float(xs[k]), "enclosure-separated falsification of the "
                f"{variant.value} form"))

    diff = logs[Variant.DERIVATION_CONSISTENT] - logs[Variant.AS_PRINTED]
    band = 4.44e-16 * (1.0 + np.abs(logs[Variant.DERIVATION_CONSISTENT])
                       + np.abs(logs[Variant.AS_PRINTED]))
    corrected_tighter = int(np.count_nonzero(diff > band))
    printed_tighter = int(np.count_nonzero(diff < -band))
    tighter = "corrected" if corrected_tighter >= printed_tighter else "printed"
    k = int(np.argmax(np.abs(diff)))
    crossover = None
    sgn = np.where(diff > band, 1, np.where(diff < -band, -1, 0))
    nz = np.nonzero(sgn)[0]
    for p, q in zip(nz, nz[1:]):
        if sgn[p] * sgn[q] < 0:
            crossover = _bisect_root(
                lambda t: float(log_bound_values(bound, t, None, Variant.DERIVATION_CONSISTENT)
                                - log_bound_values(bound, t, None, Variant.AS_PRINTED)),
                float(xs[p]), float(xs[q]))
            witnesses.append(_variant_witness(
                bound, crossover, "variants swap tightness here"))
            break

    for x in witness_xs:
        witnesses.append(_variant_witness(bound, float(x), "reference point"))

    pv, pviol, pmin, pargx = stats[Variant.AS_PRINTED]
    cv, cviol, cmin, cargx = stats[Variant.DERIVATION_CONSISTENT]
    return AuditRow(
        bound=bound.name, domain=(0.0, sup),
        printed_valid=pv, corrected_valid=cv,
        printed_violations=pviol, corrected_violations=cviol,
        printed_min_gap=pmin, printed_argmin_x=pargx,
        corrected_min_gap=cmin, corrected_argmin_x=cargx,
        tighter_variant=tighter,
        corrected_tighter=corrected_tighter, printed_tighter=printed_tighter,
        max_variant_log_gap=float(abs(diff[k])), argmax_x=float(xs[k]),
        crossover_x=crossover,
        witnesses=tuple(witnesses), notes=tuple(notes),
    )


def _confirm_validity(bound: Bound, variant: Variant, xs, gap, sup: float,
                      config: SweepConfig) -> tuple[bool, list[str]]:
    notes: list[str] = []
    bad = np.nonzero(gap < -config.tol)[0]
    if bad.size:
        order = np.argsort(gap[bad])
        for j in bad[order][:5]:
            enc = _endpoint_gap_vs_target(bound, variant, Enclosure.point(float(xs[j])))
            if enc.strictly_negative():
                return False, notes
        notes.append(
            f"{bound.name} {variant.value}: float violations not enclosure-separated")
        return False, notes
    # clean sweep: certify a canonical sub-box against the oracle
    sub = (0.05 * sup, 0.85 * sup)
    probe = ChainSpec(f"audit-{bound.name}", BOUND_SPECS[bound].target,
                      (bound, None), sup, None, variant)
    result = certify_region(probe, sub, None, tol=config.tol,
                            max_boxes=config.max_boxes)
    if result.status is not CertifyStatus.CERTIFIED:
        notes.append(
            f"{bound.name} {variant.value}: sweep clean but sub-box "
            f"{sub} only {result.certified_fraction:.3f} certified")
        return True, notes
    return True, notes


def _variant_witness(bound: Bound, x: float, note: str) -> VariantWitness:
    spec = BOUND_SPECS[bound]
    return VariantWitness(
        x=x,
        printed=eval_bound(bound, x, variant=Variant.AS_PRINTED),
        corrected=eval_bound(bound, x, variant=Variant.DERIVATION_CONSISTENT),
        target=eval_target(spec.target, x),
        note=note,
    )


__all__ = [
    "Mode", "SweepConfig", "GapSample", "PairReport", "ChainReport",
    "default_alphas", "sweep_chain", "canonical_box",
    "CertifyStatus", "CertifyResult", "Witness", "certify_region",
    "pair_gap_enclosure", "member_log_enclosure",
    "SharpnessReport", "sharpness",
    "VariantWitness", "AuditRow", "AuditReport", "discrepancy_audit",
]
