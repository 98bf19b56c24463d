"""Finite double complexes: five cohomology theories, lattice invariants, the d'd''-lemma."""
from .cohomology import (
    THEORIES,
    CohomologyReport,
    LatticeInvariants,
    MapInfo,
    NaturalMaps,
    TheoremRecord,
    aeppli,
    bott_chern,
    check_theorem_equivalences,
    cohomology_tables,
    ddbar_lemma_at,
    ddbar_lemma_in_degree,
    de_rham,
    lattice_invariants,
    natural_maps,
    row_column_cohomology,
)
from .complex import ComplexParseError, ComplexValidationError, DoubleComplex, Violation
from .generate import (
    ORIENTATIONS,
    Shape,
    direct_sum,
    dot,
    generate_elementary,
    random_complex,
    scramble_basis,
    square,
    zigzag,
)

__all__ = [
    "DoubleComplex", "Violation", "ComplexParseError", "ComplexValidationError",
    "THEORIES", "CohomologyReport", "LatticeInvariants", "MapInfo", "NaturalMaps", "TheoremRecord",
    "bott_chern", "aeppli", "row_column_cohomology", "de_rham", "cohomology_tables",
    "lattice_invariants", "ddbar_lemma_at", "ddbar_lemma_in_degree", "natural_maps",
    "check_theorem_equivalences",
    "ORIENTATIONS", "Shape", "dot", "square", "zigzag", "direct_sum", "scramble_basis",
    "generate_elementary", "random_complex",
]
