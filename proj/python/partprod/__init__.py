"""Exact partition-function inequalities and maximal multiplicative partitions."""

from ._partprod import (
    S,
    T,
    TiedMaximumError,
    canonical_max_partition,
    compare_products,
    format_partition,
    gap,
    injection_check,
    lambda_threshold,
    lehmer_bracket_sweep,
    lehmer_estimate,
    log_concavity_check,
    log_p,
    maxp,
    maxp_bruteforce,
    mu,
    normalize,
    normalize_trace,
    p,
    p_extended,
    parse_partition,
    partitions,
    rule_catalog,
    sandwich_log_bounds,
    sandwich_sweep,
    scan_exceptional,
    verify_large_a,
    verify_theorem1,
    verify_theorem2,
)

__all__ = [
    "S",
    "T",
    "TiedMaximumError",
    "canonical_max_partition",
    "compare_products",
    "format_partition",
    "gap",
    "injection_check",
    "lambda_threshold",
    "lehmer_bracket_sweep",
    "lehmer_estimate",
    "log_concavity_check",
    "log_p",
    "maxp",
    "maxp_bruteforce",
    "mu",
    "normalize",
    "normalize_trace",
    "p",
    "p_extended",
    "parse_partition",
    "partitions",
    "rule_catalog",
    "sandwich_log_bounds",
    "sandwich_sweep",
    "scan_exceptional",
    "verify_large_a",
    "verify_theorem1",
    "verify_theorem2",
]
