"""
The exceptional series: K(C₁⊗C₂) for a split octonion algebra C₁ and dim C₂ = 1, 2, 4, 8.

The Kantor algebra has dimension 52, 78, 133, 248. The J-ternary algebra (S, A) of the reference
element s = e3⊗f0 comes with the proper idempotent e = ½(c+u) of the quadratic factor on S.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass

from isotype.catalog.albert import AlbertData, albert_data
from isotype.catalog.composition import CompositionAlgebra, split_composition
from isotype.catalog.kantor import KantorAlgebra, kantor
from isotype.catalog.structurable import TensorStructurable, find_s_prime
from isotype.catalog.structurable import jternary_from_structurable, tensor_structurable
from isotype.errors import PreconditionError
from isotype.exactlinalg.scalars import QQ_FIELD, Elem, Field
from isotype.exactlinalg.vectors import Sparse, add, scale, to_sparse
from isotype.jternary.algebra import JTernaryAlgebra
from isotype.lieforge.assemble import AssembledLie, assemble_L
from isotype.models.report import CheckResult
from isotype.sweep import EXHAUSTIVE, SweepOptions, check_value

logger = logging.getLogger(__name__)

SERIES = {1: "F4", 2: "E6", 4: "E7", 8: "E8"}
KANTOR_DIMS = {1: 52, 2: 78, 4: 133, 8: 248}
REFERENCE_INDEX = 3  # e3 has norm 1 in the split octonions


@dataclass(frozen=True, eq=False)
class ExceptionalSeries:
    """
    One member of the exceptional series with everything derived from it.

    ``u`` and ``e`` are in J coordinates, that is in the basis of ``structurable.skew``.
    ``kantor`` and ``assembled`` are None when their construction was skipped.
    """

    c2_dim: int
    composition: tuple[CompositionAlgebra, CompositionAlgebra]
    structurable: TensorStructurable
    s: Sparse
    s_prime: Sparse
    jt: JTernaryAlgebra
    albert: AlbertData
    u: Sparse
    e: Sparse
    u_label: str
    kantor: KantorAlgebra | None = None
    assembled: AssembledLie | None = None

    @property
    def name(self) -> str:
        return SERIES[self.c2_dim]

    @property
    def dims(self) -> dict[str, int]:
        A = self.structurable
        out = {"A": A.dim, "S": A.skew.dim, "J": self.jt.jdim, "T": self.jt.tdim}
        if self.kantor is not None:
            out["K"] = self.kantor.algebra.dim
        if self.assembled is not None:
            out["L(J,T)"] = self.assembled.algebra.dim
        return out

    def dimension_checks(self) -> list[CheckResult]:
        """dim K(A) and dim L(J, T) against the dimension of the exceptional Lie algebra."""
        expected = KANTOR_DIMS[self.c2_dim]
        built = {k: v for k, v in self.dims.items() if k in ("K", "L(J,T)")}
        return [
            check_value(
                f"dim {part} = dim {self.name}",
                dim == expected,
                note=f"{part} has dim {dim}, {self.name} has dim {expected}",
            )
            for part, dim in built.items()
        ]


def default_reference(A: TensorStructurable) -> Sparse:
    """s = e3⊗1."""
    return {REFERENCE_INDEX * A.second.dim: A.field.one}


def choose_u(data: AlbertData) -> tuple[Sparse, str]:
    """
    First basis vector u of S₁ orthogonal to c with Q̃(u) = −1.

    Raises:
        PreconditionError: no basis vector of S₁ qualifies
    """
    A = data.A
    labels = A.skew_labels()
    minus_one = -data.field.one
    for k in range(A.s1_dim):
        u = {k: data.field.one}
        if data.Q_tilde_polar(u, data.c):
            continue
        if data.Q_tilde(u) == minus_one:
            return u, labels[k]
    raise PreconditionError("no basis vector u of S1 with u ⊥ c and Q~(u) = -1")


def exceptional_series(
    c2_dim: int,
    field: Field = QQ_FIELD,
    options: SweepOptions = EXHAUSTIVE,
    s: Mapping[int, Elem] | None = None,
    build_kantor: bool = True,
    assemble: bool = True,
) -> ExceptionalSeries:
    """
    Build the member of the exceptional series with dim C₂ = ``c2_dim``.

    Args:
        c2_dim: 1, 2, 4 or 8 (F4, E6, E7, E8)
        field: Ground field
        options: Settings for the sign-locking sweep inside the Kantor construction
        s: Reference element of S₁⊗1 as a vector of A; defaults to e3⊗1
        build_kantor: Construct K(A)
        assemble: Construct L(J, T) from the J-ternary algebra (S, A)

    Returns:
        The series member

    Raises:
        PreconditionError: c2_dim invalid, or s unusable as a reference element
    """
    if c2_dim not in SERIES:
        raise PreconditionError(f"exceptional series needs dim C2 in 1, 2, 4, 8, got {c2_dim}")
    C1 = split_composition(8, field)
    C2 = split_composition(c2_dim, field)
    A = tensor_structurable(C1, C2)
    s = to_sparse(s) if s is not None else default_reference(A)
    data = albert_data(A, s)
    s_prime = find_s_prime(A, s)
    jt = jternary_from_structurable(A, s)
    u, u_label = choose_u(data)
    e = scale(add(data.c, u), field(1, 2))
    logger.info("%s: s' = %s, u = %s", SERIES[c2_dim], s_prime, u_label)

    K = kantor(A, options) if build_kantor else None
    assembled = assemble_L(jt) if assemble else None
    series = ExceptionalSeries(
        c2_dim, (C1, C2), A, s, s_prime, jt, data, u, e, u_label, K, assembled
    )
    logger.info("%s series member: %s", series.name, series.dims)
    for check in series.dimension_checks():
        if not check.passed:
            logger.warning("%s: %s", series.name, check.note)
    return series
