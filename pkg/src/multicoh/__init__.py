"""Exact cohomology and splitting criteria for line bundle sums on products of projective spaces."""

from .core import (
    CohomologyTable,
    Degree,
    InputError,
    LineBundleSum,
    Shape,
    binom_poly,
    bundle_from_json,
    bundle_to_json,
    cohomology_table,
    dualizing_degree,
    euler_characteristic,
    factor_cohomology_dim,
    kunneth_dim,
    line_bundle,
    nonvanishing_twist_intervals,
    restrict_factor,
    serre_dual,
    sum_cohomology_dim,
    twist,
)
from .criteria import (
    AuditGuardError,
    AuditReport,
    HypothesisDomainError,
    Lemma14Report,
    SplitForm,
    ViolationReport,
    admissible_tuples,
    desk_scale_audit,
    exceptional_tuples,
    is_admissible,
    lemma14_check,
    lemma14_conclusion_match,
    miyazaki_violations,
    thm12_conclusion_match,
    thm12_violations,
    thm13_conclusion_match,
    thm13_violations,
)
from .intervals import IntervalSet
from .koszul import Complex, euler_exactness_check, koszul_factor_complex, proposition_iso_dims
from .regularity import (
    RegularityVerdict,
    acm_closed_form,
    is_acm,
    is_globally_generated,
    is_m_regular,
    is_zero_regular,
    regularity_index,
)

__all__ = [name for name in dir() if not name.startswith("_")]
