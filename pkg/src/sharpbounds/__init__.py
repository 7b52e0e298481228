"""Certified sharp exponential-type bounds for circular and hyperbolic
functions: a closed bound catalog, ordered inequality chains, a
high-precision enclosure oracle, and sweep/certification machinery."""

__version__ = "0.1.0"

from .bernoulli import bernoulli_triple, triple_log_values
from .catalog import (
    BOUND_SPECS,
    Bound,
    BoundKind,
    BoundSpec,
    Role,
    Variant,
    endpoint_coefficients,
    eval_bound,
    log_bound_values,
    member_log_values,
)
from .chains import CHAIN_IDS, ChainSpec, chain_registry, get_chain
from .constants import SERIES, SeriesSpec, ZetaTable, family_sum, zeta_constants
from .enclosure import Enclosure
from .errors import (
    ConfigError,
    DegenerateDomainError,
    DomainError,
    MissingParameterError,
    PrecisionError,
    SharpBoundsError,
    SideMismatchError,
    UnknownChainError,
    VariantError,
)
from .oracle import (
    TailBudget,
    bernoulli_box_certified,
    bernoulli_enclosure,
    log_product_enclosure,
    partial_sum_check,
    plan_tail_budget,
    product_enclosure,
)
from .targets import PRODUCT_FORMS, ProductForm, Target, eval_target
from .verifier import (
    AuditReport,
    AuditRow,
    CertifyResult,
    CertifyStatus,
    ChainReport,
    GapSample,
    Mode,
    PairReport,
    SharpnessReport,
    SweepConfig,
    VariantWitness,
    Witness,
    certify_region,
    default_alphas,
    discrepancy_audit,
    sharpness,
    sweep_chain,
)

__all__ = [
    "__version__",
    "bernoulli_triple", "triple_log_values",
    "Bound", "BoundKind", "BoundSpec", "BOUND_SPECS", "Role", "Variant",
    "endpoint_coefficients", "eval_bound", "log_bound_values", "member_log_values",
    "CHAIN_IDS", "ChainSpec", "chain_registry", "get_chain",
    "SERIES", "SeriesSpec", "ZetaTable", "family_sum", "zeta_constants",
    "Enclosure",
    "SharpBoundsError", "DomainError", "MissingParameterError", "VariantError",
    "PrecisionError", "SideMismatchError", "ConfigError", "DegenerateDomainError",
    "UnknownChainError",
    "TailBudget", "bernoulli_box_certified", "bernoulli_enclosure",
    "log_product_enclosure", "partial_sum_check", "plan_tail_budget",
    "product_enclosure",
    "PRODUCT_FORMS", "ProductForm", "Target", "eval_target",
    "Mode", "SweepConfig", "GapSample", "PairReport", "ChainReport",
    "default_alphas", "sweep_chain", "certify_region", "CertifyResult",
    "CertifyStatus", "Witness", "SharpnessReport", "sharpness",
    "AuditReport", "AuditRow", "VariantWitness", "discrepancy_audit",
]
