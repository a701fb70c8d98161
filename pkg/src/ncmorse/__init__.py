"""Finite-poset topology, chain lattices of cell complexes, modified
Morse functions with their matchings and collapses, integer homology,
and symbolic pullback decomposition descriptors.
"""

__version__ = "0.1.0"

from .errors import (
    InvalidComplexError,
    InvalidInputError,
    InvalidMorseError,
    NCMorseError,
    UnsupportedComplexError,
)
from .topology import (
    FinitePoset,
    PosetSubset,
    closure,
    down_set,
    is_absorbing,
    poset_from_dict,
    poset_to_dict,
    up_set,
)
from .complexes import (
    Cell,
    CellComplex,
    ChainInfo,
    ChainLattice,
    ValidationReport,
    chain_id_for,
    chain_lattice,
    complex_from_dict,
    complex_to_dict,
    ideal_id_for,
    ideal_meet,
    require_valid,
    validate_complex,
)
from .morse import (
    CONVENTION_FORMAN,
    CONVENTION_PAPER,
    CriticalReport,
    MorseCheckReport,
    MorseFunction,
    MorseMatching,
    MorseViolation,
    critical_chains,
    generate_morse,
    is_acceptable,
    is_acyclic_matching,
    is_modified_morse,
    matching_from_function,
    matching_from_pairs,
    morse_from_dict,
    morse_to_dict,
    normalize_convention,
)
from .homology import (
    CollapseReport,
    HomologyProfile,
    IntegerMatrix,
    boundary_matrices,
    homology_profile,
    morse_complex,
    smith_normal_form,
    verify_collapse,
)
from .nccw import (
    DescriptorReport,
    DimensionVector,
    Level,
    NCCWDescriptor,
    commutative_nccw,
    descriptor_from_dict,
    descriptor_to_dict,
    nccw_from_morse,
    pullback_dimension,
    validate_descriptor,
)

__all__ = [
    "NCMorseError",
    "InvalidInputError",
    "InvalidComplexError",
    "InvalidMorseError",
    "UnsupportedComplexError",
    "FinitePoset",
    "PosetSubset",
    "closure",
    "is_absorbing",
    "up_set",
    "down_set",
    "poset_from_dict",
    "poset_to_dict",
    "Cell",
    "CellComplex",
    "ValidationReport",
    "validate_complex",
    "require_valid",
    "ChainInfo",
    "ChainLattice",
    "chain_lattice",
    "chain_id_for",
    "ideal_id_for",
    "ideal_meet",
    "complex_from_dict",
    "complex_to_dict",
    "CONVENTION_PAPER",
    "CONVENTION_FORMAN",
    "normalize_convention",
    "MorseFunction",
    "morse_from_dict",
    "morse_to_dict",
    "MorseViolation",
    "MorseCheckReport",
    "is_modified_morse",
    "CriticalReport",
    "critical_chains",
    "is_acceptable",
    "MorseMatching",
    "matching_from_pairs",
    "matching_from_function",
    "is_acyclic_matching",
    "generate_morse",
    "IntegerMatrix",
    "boundary_matrices",
    "smith_normal_form",
    "HomologyProfile",
    "homology_profile",
    "morse_complex",
    "CollapseReport",
    "verify_collapse",
    "DimensionVector",
    "Level",
    "NCCWDescriptor",
    "commutative_nccw",
    "nccw_from_morse",
    "pullback_dimension",
    "DescriptorReport",
    "validate_descriptor",
    "descriptor_from_dict",
    "descriptor_to_dict",
]
