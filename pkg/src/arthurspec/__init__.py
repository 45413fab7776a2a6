"""Exact Laplacian spectra of congruence complex- and quaternionic-hyperbolic
manifolds, computed from archimedean Arthur parameters."""

from .core import (
    DimensionError,
    DomainError,
    Multiset,
    WeightVector,
    WeylType,
    canonicalize,
    format_rational,
    inner_product,
    multiset_equal,
)
from .groups import External, Family, GroupDatum, MType, m_type_restriction, make_group, tempered_bound
from .arthur import (
    ArchParameter,
    ArthurBlock,
    Character,
    CharClass,
    InfChar,
    LanglandsData,
    block_segment,
    casimir_eigenvalue,
    classify_character,
    infinitesimal_character,
    langlands_data,
    pedon_eigenvalue,
    validate_parameter,
)
from .spectra import (
    CaseLabel,
    DichotomyVerdict,
    HodgeType,
    SpectrumDescription,
    classify_case,
    dichotomy_check,
    faraut_list,
    spectral_gap,
    t1_discrete,
    t1_threshold,
    t38_spectrum,
    tu_spectrum,
)
from .oracle import (
    EnumerationConfig,
    VerificationReport,
    enumerate_parameters,
    verify_dichotomy,
    verify_t1_constraints,
    verify_t38,
)

__version__ = "0.1.0"

__all__ = [
    "DimensionError",
    "DomainError",
    "Multiset",
    "WeightVector",
    "WeylType",
    "canonicalize",
    "format_rational",
    "inner_product",
    "multiset_equal",
    "External",
    "Family",
    "GroupDatum",
    "MType",
    "m_type_restriction",
    "make_group",
    "tempered_bound",
    "ArchParameter",
    "ArthurBlock",
    "Character",
    "CharClass",
    "InfChar",
    "LanglandsData",
    "block_segment",
    "casimir_eigenvalue",
    "classify_character",
    "infinitesimal_character",
    "langlands_data",
    "pedon_eigenvalue",
    "validate_parameter",
    "CaseLabel",
    "DichotomyVerdict",
    "HodgeType",
    "SpectrumDescription",
    "classify_case",
    "dichotomy_check",
    "faraut_list",
    "spectral_gap",
    "t1_discrete",
    "t1_threshold",
    "t38_spectrum",
    "tu_spectrum",
    "EnumerationConfig",
    "VerificationReport",
    "enumerate_parameters",
    "verify_dichotomy",
    "verify_t1_constraints",
    "verify_t38",
]
