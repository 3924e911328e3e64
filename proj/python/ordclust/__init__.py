"""Clustering from ordinal preferences with a metered budget of distance queries."""

from ._core import (
    InvalidInstance,
    MetricInstance,
    OracleBudgetExceeded,
    PreferenceProfile,
    QueryLedger,
    algorithm_names,
    brute_force_opt,
    build_profile,
    cost,
    distortion_ratio,
    family_names,
    gen_facility_hard,
    gen_kcenter_tree,
    gen_kmedian_bundles,
    kcenter_2k_query,
    kcenter_quadratic,
    kcenter_zero_query,
    kmedian_low_query,
    kz_zero_query,
    load_instance,
    meyerson,
)

__all__ = [name for name in dir() if not name.startswith("_")]
