"""Exact scalars, labeled spaces, sparse maps and elimination."""

from isotype.exactlinalg.algebra import StructureAlgebra
from isotype.exactlinalg.echelon import (
    SolveResult,
    Subspace,
    eigenspace,
    inverse,
    kernel,
    null_space,
    rank,
    rref,
    solve_exact,
    span_basis,
)
from isotype.exactlinalg.maps import (
    BilinearMap,
    LinearMap,
    MultilinearMap,
    TrilinearMap,
    apply_bilinear,
)
from isotype.exactlinalg.scalars import QQ_FIELD, Elem, Field, Scalar, parse_scalar
from isotype.exactlinalg.spaces import Space, direct_sum, offsets, tensor_space
from isotype.exactlinalg.vectors import Sparse, Vector

__all__ = [
    "BilinearMap",
    "Elem",
    "Field",
    "LinearMap",
    "MultilinearMap",
    "QQ_FIELD",
    "Scalar",
    "SolveResult",
    "Sparse",
    "Space",
    "StructureAlgebra",
    "Subspace",
    "TrilinearMap",
    "Vector",
    "apply_bilinear",
    "direct_sum",
    "eigenspace",
    "inverse",
    "kernel",
    "null_space",
    "offsets",
    "parse_scalar",
    "rank",
    "rref",
    "solve_exact",
    "span_basis",
    "tensor_space",
]
