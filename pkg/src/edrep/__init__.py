"""edrep: essential dimension of group representations via Schur indices,
Brauer classes and rank varieties."""

from __future__ import annotations

__version__ = "0.1.0"

from .characters import (Character, CharacterTable, MatrixRep, character_field, character_table,
                         decompose, envelope_dimension, fs_indicator, galois_orbits, inner_product)
from .cyclotomic import BaseField, CycloNum
from .eddim import (CsaDescriptor, EdReport, KIrredFactor, cd_p_weil, cd_p_weil_gcd, conic_product_ed,
                    ed_p_irreducible, ed_report, ed_upper, k_irreducible_decomposition)
from .errors import CertificationError, EdrepError, InputError
from .families import brauer_family, schilling_family
from .groups import FiniteGroup, direct_product, quaternion_semidirect, schilling_two_group
from .modular import ModularRep, PointSet1, ed_lower_bound_modular, rank_variety, trdeg_of_points
from .schur import (IndependenceCertificate, SchurIndexResult, SchurStrategy, hilbert_symbol,
                    norm_independence_test, schur_index)

__all__ = [
    "Character", "CharacterTable", "MatrixRep", "character_field", "character_table", "decompose",
    "envelope_dimension", "fs_indicator", "galois_orbits", "inner_product", "BaseField", "CycloNum",
    "CsaDescriptor", "EdReport", "KIrredFactor", "cd_p_weil", "cd_p_weil_gcd", "conic_product_ed",
    "ed_p_irreducible", "ed_report", "ed_upper", "k_irreducible_decomposition",
    "CertificationError", "EdrepError", "InputError", "brauer_family", "schilling_family",
    "FiniteGroup", "direct_product", "quaternion_semidirect", "schilling_two_group", "ModularRep",
    "PointSet1", "ed_lower_bound_modular", "rank_variety", "trdeg_of_points",
    "IndependenceCertificate", "SchurIndexResult", "SchurStrategy", "hilbert_symbol",
    "norm_independence_test", "schur_index",
]
