"""Siegel-Veech constants for strata of translation surfaces.

Thin wrapper around the C++ core; see `svlab._core` for the full surface.
"""

from ._core import (  # noqa: F401
    acceptance,
    asym_distinct_fixed,
    asym_loop,
    asym_principal_loops,
    asym_special_family,
    asym_total,
    cancelling_factorials,
    count_distinct_configs,
    count_loop_configs,
    double_factorial_sum,
    double_factorial_sum_limit,
    eval_series,
    partition_zeta_sum,
    pi_laurent,
    siegel,
    stratum,
    sv_hyperelliptic,
    table_csv,
    table_json,
    volume,
    zeta,
)

__all__ = [
    "acceptance",
    "asym_distinct_fixed",
    "asym_loop",
    "asym_principal_loops",
    "asym_special_family",
    "asym_total",
    "cancelling_factorials",
    "count_distinct_configs",
    "count_loop_configs",
    "double_factorial_sum",
    "double_factorial_sum_limit",
    "eval_series",
    "partition_zeta_sum",
    "pi_laurent",
    "siegel",
    "stratum",
    "sv_hyperelliptic",
    "table_csv",
    "table_json",
    "volume",
    "zeta",
]
