"""The four bounded functions and their defining infinite products.

Each target equals a product prod_k (1 - c(x)/m_k^p) with c(x) a monomial
in x, where m_k runs over the positive integers or the odd integers. The
elementary-function evaluators here are the float-side reference; the
oracle module evaluates the same products with certified tail control.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .constants import family_sum
from .errors import DomainError


class Target(Enum):
    COS = "cos"
    SINC = "sinc"
    SINC_RATIO_SINH = "sin-sinh-ratio"
    COSCOSH = "cos-cosh"


@dataclass(frozen=True)
class ProductForm:
    """Parameters of the representation prod_k (1 - c(x)/m_k^p).

    c(x) = scale * x^p / pi^p; m_k = k, or 2k-1 when ``odd``. All factors
    stay strictly positive for 0 <= x < sup_x.
    """

    scale: float
    power: int
    odd: bool
    sup_x: float

    def coefficient(self, x: float) -> float:
        return self.scale * x**self.power / math.pi**self.power

    def factor_index(self, k: int) -> int:
        return 2 * k - 1 if self.odd else k

    def per_factor_sum(self) -> float:
        """sum_k 1/m_k^p for this family (a table constant)."""
        return family_sum(self.power, self.odd)

    def squared_factor_sum(self) -> float:
        """sum_k 1/m_k^(2p) for this family (a table constant)."""
        return family_sum(2 * self.power, self.odd)


PRODUCT_FORMS: dict[Target, ProductForm] = {
    Target.COS: ProductForm(4.0, 2, True, math.pi / 2),
    Target.SINC: ProductForm(1.0, 2, False, math.pi),
    Target.SINC_RATIO_SINH: ProductForm(1.0, 4, False, math.pi),
    Target.COSCOSH: ProductForm(16.0, 4, True, math.pi / 2),
}


def eval_target(target: Target, x: float) -> float:
    """Elementary-function value, with removable singularities filled at 0."""
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x}")
    if target is Target.COS:
        return math.cos(x)
    if target is Target.SINC:
        return 1.0 if x == 0.0 else math.sin(x) / x
    if target is Target.SINC_RATIO_SINH:
        return 1.0 if x == 0.0 else math.sin(x) * math.sinh(x) / (x * x)
    if target is Target.COSCOSH:
        return math.cos(x) * math.cosh(x)
    raise DomainError(f"unknown target {target!r}")


def log_target_values(target: Target, x: np.ndarray) -> np.ndarray:
    """log of the target on an array of points.

    Hot path for sweeps; the caller keeps x inside the region where the
    target is strictly positive (x < sup_x of the product form).
    """
    if target is Target.COS:
        return np.log(np.cos(x))
    if target is Target.SINC:
        return np.log(np.sin(x) / x)
    if target is Target.SINC_RATIO_SINH:
        return np.log(np.sin(x) * np.sinh(x) / (x * x))
    if target is Target.COSCOSH:
        return np.log(np.cos(x) * np.cosh(x))
    raise DomainError(f"unknown target {target!r}")
