"""Refined three-term inequality for factors of the form 1 - u*v.

For u, v in (0, 1) the classic product estimate 1 - uv >= (1 - v)^u can
be sharpened by inserting (1 - v)^(u^2) * e^(uv(u-1)) between the two
sides. Aggregated over the factors of the Euler-type products this
middle term is what turns each classic lower bound of the catalog into
its refined counterpart.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError


def _check_unit_open(name: str, value: float) -> None:
    if not (0.0 < value < 1.0):
        raise DomainError(f"{name} must lie in the open interval (0, 1), got {value}")


def bernoulli_triple(u: float, v: float) -> tuple[float, float, float]:
    """Evaluate (1 - uv, (1-v)^(u^2) * e^(uv(u-1)), (1-v)^u).

    The components are decreasing left to right; the chain collapses to
    equality as u -> 1. Powers are assembled in log domain so that the
    ordering stays stable when all three values are close to 1.
    """
    _check_unit_open("u", u)
    _check_unit_open("v", v)
    log1mv = math.log1p(-v)
    left = 1.0 - u * v
    mid = math.exp(u * u * log1mv + u * v * (u - 1.0))
    right = math.exp(u * log1mv)
    return left, mid, right


def triple_log_values(u, v):
    """Log-domain components of the triple; accepts numpy arrays.

    Returns (log(1-uv), u^2*log(1-v) + uv(u-1), u*log(1-v)) without
    domain checks; used by bulk ordering sweeps.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    log1mv = np.log1p(-v)
    return np.log1p(-u * v), u * u * log1mv + u * v * (u - 1.0), u * log1mv
