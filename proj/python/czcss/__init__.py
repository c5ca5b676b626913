"""Cross Z-complementary sequence sets: GBF-based construction and exact verification.

Thin python face over the C++ core. The main entry points are
czcp_pair / czcp_mate_pair / czcss_family for construction and
check_czcp / check_czcss / max_czcz for verification; correlation values
are exact elements of Z[w] with an integer zero test.
"""

from ._czcss import (
    aacf,
    accf,
    base_gbf_g,
    bit_vector,
    check_complementary_mate,
    check_czcp,
    check_czcs,
    check_czcss,
    check_mate_cross,
    check_szccs,
    check_tail_window,
    check_zcp,
    CodeFamily,
    ConstructionParams,
    cyclotomic_poly,
    CyclotomicValue,
    czcp_mate_pair,
    czcp_pair,
    czcss_family,
    DomainError,
    family_file_json,
    Gbf,
    GcpWithMate,
    max_czcz,
    pair_file_json,
    parse_gbf,
    PhaseSequence,
    PropertyResult,
    seed_gbf_G,
    SequencePair,
    ShiftViolation,
    standard_gcp,
    sum_aacf,
    sum_accf_adjacent,
    sum_accf_adjacent_cross,
    sum_accf_pointwise,
    tail_window_quadruple,
    TailWindowQuadruple,
    VerificationReport,
)

__all__ = [name for name in dir() if not name.startswith("_")]
