"""Gradings of Lie algebras and the J-ternary algebra of a short 5-grading."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass

from isotype.errors import GradingError, PreconditionError
from isotype.exactlinalg.echelon import Subspace, eigenspace
from isotype.exactlinalg.maps import BilinearMap, TrilinearMap
from isotype.exactlinalg.scalars import Elem
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse, scale, to_sparse
from isotype.jordan.algebra import JordanAlgebra
from isotype.jternary.algebra import JTernaryAlgebra
from isotype.lieforge.algebra import LieAlgebra, Sl2Triple
from isotype.models.report import CheckResult
from isotype.sweep import EXHAUSTIVE, SweepOptions, run_sweep

logger = logging.getLogger(__name__)

Weight = int | tuple[int, ...]


def _add_weights(a: Weight, b: Weight) -> Weight:
    if isinstance(a, tuple) and isinstance(b, tuple):
        return tuple(x + y for x, y in zip(a, b, strict=True))
    if isinstance(a, int) and isinstance(b, int):
        return a + b
    raise TypeError("mixed weight types")


@dataclass(frozen=True)
class Grading:
    """Weight → subspace of L, independent and exhaustive."""

    pieces: dict[Weight, Subspace]

    @property
    def dims(self) -> dict[Weight, int]:
        return {w: s.dim for w, s in self.pieces.items()}

    def piece(self, w: Weight) -> Subspace | None:
        return self.pieces.get(w)

    def weighted_basis(self) -> list[tuple[Weight, Sparse]]:
        return [(w, b) for w, s in self.pieces.items() for b in s.basis]

    def dim_tuple(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.pieces.values())


def check_grading(
    L: LieAlgebra, grading: Grading, options: SweepOptions = EXHAUSTIVE
) -> CheckResult:
    """[L_i, L_j] ⊆ L_{i+j} on all pairs of basis vectors of the pieces."""
    basis = grading.weighted_basis()
    labels = [f"L{w}[{k}]" for w, s in grading.pieces.items() for k in range(s.dim)]

    def residual(key: tuple[int, ...]) -> bool:
        (wi, bi), (wj, bj) = basis[key[0]], basis[key[1]]
        value = L.bracket(bi, bj)
        if not value:
            return False
        target = grading.piece(_add_weights(wi, wj))
        return target is None or not target.contains(value)

    n = len(basis)
    return run_sweep(
        "grading",
        (n, n),
        residual,
        labels=(labels, labels),
        predicate=lambda key: key[0] <= key[1],
        options=options,
    )


def five_grading(L: LieAlgebra, E: Mapping[int, Elem], F: Mapping[int, Elem]) -> Grading:
    """
    Eigenspaces L_i of ad H, H = [E, F], for i = −2 … 2.

    Raises:
        PreconditionError: (E, [E,F], F) is not an sl₂ triple
        GradingError: ad H has eigenvalues outside −2 … 2
    """
    E, F = to_sparse(E), to_sparse(F)
    triple = Sl2Triple(E, L.bracket(E, F), F)
    if not triple.check(L).passed:
        raise PreconditionError("E, [E,F], F is not an sl2 triple")
    columns = L.ad(triple.H).columns
    images = [columns.get(i, {}) for i in range(L.dim)]
    pieces = {
        w: Subspace(L.field, L.dim, eigenspace(L.field, images, L.field(w), L.dim))
        for w in (-2, -1, 0, 1, 2)
    }
    total = sum(s.dim for s in pieces.values())
    if total != L.dim:
        raise GradingError(f"ad H eigenspaces for -2..2 have total dimension {total} != {L.dim}")
    grading = Grading(dict(pieces))
    logger.info("5-grading dims %s", grading.dim_tuple())
    return grading


def jternary_from_5grading(
    L: LieAlgebra, E: Mapping[int, Elem], F: Mapping[int, Elem]
) -> JTernaryAlgebra:
    """
    The pair (L₂, L₁) with the operations read off the bracket.

    A·B = ½[[A,F],B], A•X = [[A,F],X], ⟨X|Y⟩ = ½[X,Y] and ⟨X,Y,Z⟩ = ½[[X,[Y,F]],Z], expressed
    in the eigenspace bases. The unit of J is E.

    Args:
        L: Lie algebra
        E: Raising element
        F: Lowering element

    Returns:
        J-ternary algebra on L₂ and L₁

    Raises:
        GradingError: the grading is not short or a product leaves its piece
    """
    E, F = to_sparse(E), to_sparse(F)
    grading = five_grading(L, E, F)
    L2, L1 = grading.pieces[2], grading.pieces[1]
    half = L.field(1, 2)

    def coords(piece: Subspace, v: Sparse, what: str) -> Sparse:
        c = piece.coordinates(v)
        if c is None:
            raise GradingError(f"{what} leaves its graded piece")
        return c

    ad_F = [L.bracket(b, F) for b in L2.basis]
    Y_F = [L.bracket(b, F) for b in L1.basis]
    J_space = Space(L2.basis_labels(L.labels, "L2"), "L2")
    T_space = Space(L1.basis_labels(L.labels, "L1"), "L1")

    def product(i: int, j: int) -> Sparse:
        return coords(L2, scale(L.bracket(ad_F[i], L2.basis[j]), half), "A.B")

    def bullet(i: int, x: int) -> Sparse:
        return coords(L1, L.bracket(ad_F[i], L1.basis[x]), "A*X")

    def skew(x: int, y: int) -> Sparse:
        return coords(L2, scale(L.bracket(L1.basis[x], L1.basis[y]), half), "<X|Y>")

    def triple(x: int, y: int, z: int) -> Sparse:
        inner = L.bracket(L1.basis[x], Y_F[y])
        return coords(L1, scale(L.bracket(inner, L1.basis[z]), half), "<X,Y,Z>")

    fld = L.field
    J = JordanAlgebra(
        fld,
        J_space,
        BilinearMap.from_function(fld, (J_space, J_space), J_space, product),
        coords(L2, E, "E"),
        "L2",
    )
    name = f"{L.name}:5grading" if L.name else "5grading"
    logger.info("extracted J-ternary algebra: dim J=%d, dim T=%d", L2.dim, L1.dim)
    return JTernaryAlgebra(
        J,
        T_space,
        BilinearMap.from_function(fld, (J_space, T_space), T_space, bullet),
        BilinearMap.from_function(fld, (T_space, T_space), J_space, skew),
        TrilinearMap.from_function(fld, (T_space, T_space, T_space), T_space, triple),
        name,
    )
