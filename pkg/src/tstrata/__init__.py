"""Exact T-chain calculus, blown-up Hirzebruch lattices, and the
moduli-stratum dimension tables they verify."""

from .errors import DomainError, InvariantError
from .hj import (
    Chain,
    ChainClassification,
    ChainKind,
    CyclicQuotientSingularity,
    classify_chain,
    classify_singularity,
    enumerate_t_chains,
    grow_chain,
    hj_eval,
    hj_expand,
    k2_contribution,
)
from .lattice import (
    DivisorClass,
    PicardLattice,
    chain_gram,
    det_exact,
    discrepancies,
    hirzebruch,
    is_negative_definite,
)
from .moduli import (
    D_PRIME,
    D_SECOND,
    EMPTY,
    FIRST,
    SECOND,
    StratumRecord,
    branch_class,
    d_strata,
    dn_components,
    intersection_form,
    invariants,
    moduli_components,
    nu_count,
    stratum_dim_second,
)
from .poly import N, Poly
from .systems import BlowupConfig, SystemAnalysis, analyze_system, l_class
from .tangent import TangentReport, h1_tx, h2_tx, tangent_report

__all__ = [
    "Chain", "ChainClassification", "ChainKind", "CyclicQuotientSingularity",
    "classify_chain", "classify_singularity", "enumerate_t_chains",
    "grow_chain", "hj_eval", "hj_expand", "k2_contribution",
    "DivisorClass", "PicardLattice", "chain_gram", "det_exact",
    "discrepancies", "hirzebruch", "is_negative_definite",
    "D_PRIME", "D_SECOND", "EMPTY", "FIRST", "SECOND", "StratumRecord",
    "branch_class", "d_strata", "dn_components", "intersection_form",
    "invariants", "moduli_components", "nu_count", "stratum_dim_second",
    "N", "Poly", "BlowupConfig", "SystemAnalysis", "analyze_system", "l_class",
    "TangentReport", "h1_tx", "h2_tx", "tangent_report",
    "DomainError", "InvariantError",
]
