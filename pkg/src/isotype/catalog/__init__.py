"""Catalog constructions: classical and exceptional J-ternary algebras, K(A) and its inputs."""

from isotype.catalog.albert import AlbertData, albert_data, verify_quadratic_factor
from isotype.catalog.classical import (
    ClassicalExample,
    Family,
    FullAlgebra,
    check_full_algebra,
    classical_example,
    full_lie_algebra,
    gl_example,
    so_example,
    sp_example,
)
from isotype.catalog.composition import (
    CompositionAlgebra,
    cayley_dickson,
    check_composition,
    split_composition,
)
from isotype.catalog.exceptional import ExceptionalSeries, exceptional_series
from isotype.catalog.involutive import (
    InvolutiveAlgebra,
    adjoint_involution,
    check_involution,
    exchange_algebra,
    jordan_plus,
    matrix_algebra,
)
from isotype.catalog.kantor import KantorAlgebra, check_against_5grading, kantor, sl2_candidate
from isotype.catalog.prototypical import (
    HermitianModule,
    check_hermitian,
    check_phi_identities,
    extend_hermitian,
    prototypical,
)
from isotype.catalog.structurable import (
    InnerStructure,
    StructurableAlgebra,
    TensorStructurable,
    check_structurable,
    find_s_prime,
    instrl,
    jternary_from_structurable,
    tensor_structurable,
)

__all__ = [
    # Algebras with involution
    "InvolutiveAlgebra",
    "adjoint_involution",
    "check_involution",
    "exchange_algebra",
    "jordan_plus",
    "matrix_algebra",
    # Skew-hermitian modules
    "HermitianModule",
    "check_hermitian",
    "check_phi_identities",
    "extend_hermitian",
    "prototypical",
    # Classical families
    "ClassicalExample",
    "Family",
    "FullAlgebra",
    "check_full_algebra",
    "classical_example",
    "full_lie_algebra",
    "gl_example",
    "so_example",
    "sp_example",
    # Composition and structurable algebras
    "CompositionAlgebra",
    "cayley_dickson",
    "check_composition",
    "split_composition",
    "InnerStructure",
    "StructurableAlgebra",
    "TensorStructurable",
    "check_structurable",
    "find_s_prime",
    "instrl",
    "jternary_from_structurable",
    "tensor_structurable",
    # Kantor construction and the exceptional series
    "KantorAlgebra",
    "check_against_5grading",
    "kantor",
    "sl2_candidate",
    "AlbertData",
    "albert_data",
    "verify_quadratic_factor",
    "ExceptionalSeries",
    "exceptional_series",
]
