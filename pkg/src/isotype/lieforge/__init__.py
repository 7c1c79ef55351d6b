"""Lie algebras: assembly of L(J, T), Jacobi, gradings and isotypic decompositions."""

from isotype.lieforge.algebra import (
    LieAlgebra,
    Sl2Triple,
    center,
    check_antisymmetry,
    check_jacobi,
    derived_subalgebra,
    killing_form,
    killing_rank,
    structure_report,
)
from isotype.lieforge.assemble import AssembledLie, assemble_L, check_sl2_trace_identity
from isotype.lieforge.grading import (
    Grading,
    check_grading,
    five_grading,
    jternary_from_5grading,
)
from isotype.lieforge.isotypic import (
    IsotypicDecomposition,
    short_sl2_decompose,
    short_sl2sl2_decompose,
)

__all__ = [
    # Lie algebras
    "LieAlgebra",
    "Sl2Triple",
    "center",
    "check_antisymmetry",
    "check_jacobi",
    "derived_subalgebra",
    "killing_form",
    "killing_rank",
    "structure_report",
    # Assembly
    "AssembledLie",
    "assemble_L",
    "check_sl2_trace_identity",
    # Gradings
    "Grading",
    "check_grading",
    "five_grading",
    "jternary_from_5grading",
    # Decompositions
    "IsotypicDecomposition",
    "short_sl2_decompose",
    "short_sl2sl2_decompose",
]
