"""Jordan algebras, idempotents and Peirce decompositions."""

from isotype.jordan.algebra import (
    JordanAlgebra,
    check_inner_derivations,
    check_jordan,
    inner_derivation_D,
)
from isotype.jordan.peirce import (
    IdempotentCheck,
    PeirceDecomposition,
    check_peirce_rules,
    is_idempotent,
    peirce_decompose,
)

__all__ = [
    "IdempotentCheck",
    "JordanAlgebra",
    "PeirceDecomposition",
    "check_inner_derivations",
    "check_jordan",
    "check_peirce_rules",
    "inner_derivation_D",
    "is_idempotent",
    "peirce_decompose",
]
