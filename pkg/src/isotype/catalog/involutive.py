"""Algebras with involution: matrix algebras, the exchange algebra and adjoint involutions."""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from isotype.errors import InconsistentSystemError, PreconditionError, StructureError
from isotype.exactlinalg.algebra import StructureAlgebra
from isotype.exactlinalg.echelon import Subspace, eigenspace, inverse
from isotype.exactlinalg.maps import Entry, LinearMap
from isotype.exactlinalg.scalars import QQ_FIELD, Elem, Field
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse, add, scale, sub
from isotype.jordan.algebra import JordanAlgebra
from isotype.models.report import VerificationReport
from isotype.sweep import EXHAUSTIVE, SweepOptions, check_value, run_sweep

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class InvolutiveAlgebra:
    """
    An algebra with an involution x ↦ x*.

    ``symmetric_basis`` and ``skew_basis`` fix the bases of H and S; when omitted they are the
    free-variable bases of the ±1 eigenspaces of the involution.
    """

    algebra: StructureAlgebra
    involution: LinearMap
    symmetric_basis: tuple[Sparse, ...] | None = None
    skew_basis: tuple[Sparse, ...] | None = None

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def space(self) -> Space:
        return self.algebra.space

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self) -> tuple[str, ...]:
        return self.algebra.labels

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def unit(self) -> Sparse | None:
        return self.algebra.unit

    def basis(self, i: int) -> Sparse:
        return self.algebra.basis(i)

    def mul(self, a: Mapping[int, Elem], b: Mapping[int, Elem]) -> Sparse:
        return self.algebra.mul(a, b)

    def star(self, v: Mapping[int, Elem]) -> Sparse:
        return self.involution.apply_sparse(v)

    def _eigen(self, sign: int) -> list[Sparse]:
        columns = [self.involution.image(i) for i in range(self.dim)]
        return eigenspace(self.field, columns, self.field(sign), self.dim)

    @cached_property
    def symmetric(self) -> Subspace:
        """H = {x : x* = x}."""
        basis = self.symmetric_basis if self.symmetric_basis is not None else self._eigen(1)
        return Subspace(self.field, self.dim, basis)

    @cached_property
    def skew(self) -> Subspace:
        """S = {x : x* = −x}."""
        basis = self.skew_basis if self.skew_basis is not None else self._eigen(-1)
        return Subspace(self.field, self.dim, basis)

    def symmetric_labels(self) -> tuple[str, ...]:
        return self.symmetric.basis_labels(self.labels, "H")

    def skew_labels(self) -> tuple[str, ...]:
        return self.skew.basis_labels(self.labels, "S")


def _matrix_label(i: int, j: int, n: int) -> str:
    return f"E{i + 1}{j + 1}" if n < 10 else f"E{i + 1},{j + 1}"


def matrix_algebra(n: int, field: Field = QQ_FIELD, name: str = "") -> StructureAlgebra:
    """
    End(W) for dim W = n, basis E_ij at index i·n + j with E_ij·E_kl = δ_jk E_il.

    Raises:
        PreconditionError: n < 1
    """
    if n < 1:
        raise PreconditionError(f"matrix algebra needs n >= 1, got {n}")
    space = Space(tuple(_matrix_label(i, j, n) for i in range(n) for j in range(n)), f"End{n}")
    one = field.one
    entries = [
        ((i * n + j, j * n + l), i * n + l, one)
        for i in range(n)
        for j in range(n)
        for l in range(n)
    ]
    unit = {i * n + i: one for i in range(n)}
    return StructureAlgebra.from_entries(field, space, entries, unit, name or f"End({n})")


def exchange_algebra(n: int, field: Field = QQ_FIELD) -> InvolutiveAlgebra:
    """
    End(W) ⊕ End(W)^op with the exchange involution (a, b)* = (b, a).

    Basis E_ij (first summand) then E_ij' (second summand), both in row-major order.
    """
    B = matrix_algebra(n, field)
    m = B.dim
    labels = B.labels + tuple(f"{label}'" for label in B.labels)
    space = Space(labels, f"End{n}+End{n}op")
    entries: list[Entry] = []
    for (i, j), image in B.product.table.items():
        for k, c in image.items():
            entries.append(((i, j), k, c))
            entries.append(((m + j, m + i), m + k, c))
    assert B.unit is not None
    unit = dict(B.unit) | {m + k: c for k, c in B.unit.items()}
    algebra = StructureAlgebra.from_entries(field, space, entries, unit, f"End({n})+End({n})^op")
    swap = LinearMap(
        field, space, space, {k: {(k + m) % (2 * m): field.one} for k in range(2 * m)}
    )
    return InvolutiveAlgebra(algebra, swap)


def adjoint_involution(
    n: int, gram: Sequence[Sequence[int]], field: Field = QQ_FIELD
) -> InvolutiveAlgebra:
    """
    End(W) with the adjoint involution f* = G⁻¹fᵀG of a nondegenerate form with Gram matrix G.

    Args:
        n: dim W
        gram: Symmetric or skew-symmetric n×n Gram matrix
        field: Ground field

    Returns:
        The involutive algebra; E_ij* = Σ_{k,l} (G⁻¹)_{kj} G_{il} E_kl

    Raises:
        PreconditionError: G is not square, not (skew-)symmetric or singular
    """
    if len(gram) != n or any(len(row) != n for row in gram):
        raise PreconditionError(f"Gram matrix must be {n}x{n}")
    symmetric = all(gram[i][j] == gram[j][i] for i in range(n) for j in range(n))
    skew = all(gram[i][j] == -gram[j][i] for i in range(n) for j in range(n))
    if not (symmetric or skew):
        raise PreconditionError("Gram matrix must be symmetric or skew-symmetric")
    G = [{j: field(c) for j, c in enumerate(row) if c} for row in gram]
    try:
        Ginv = inverse(field, G, n)
    except InconsistentSystemError as exc:
        raise PreconditionError("Gram matrix is singular") from exc

    algebra = matrix_algebra(n, field)
    columns: dict[int, Sparse] = {}
    for i in range(n):
        for j in range(n):
            image: Sparse = {}
            for k in range(n):
                a = Ginv[k].get(j)
                if not a:
                    continue
                for l, g in G[i].items():
                    image[k * n + l] = image.get(k * n + l, field.zero) + a * g
            columns[i * n + j] = image
    star = LinearMap(field, algebra.space, algebra.space, columns)
    kind = "orthogonal" if symmetric else "symplectic"
    logger.debug("adjoint involution of a %s form on a space of dim %d", kind, n)
    return InvolutiveAlgebra(algebra, star)


def check_involution(
    A: InvolutiveAlgebra, options: SweepOptions = EXHAUSTIVE
) -> VerificationReport:
    """(xy)* = y*x* on basis pairs, x** = x, 1* = 1 and H ⊕ S = A."""
    n = A.dim
    labels = A.labels

    def anti(key: tuple[int, ...]) -> Sparse:
        i, j = key
        reversed_product = A.mul(A.star(A.basis(j)), A.star(A.basis(i)))
        return sub(A.star(A.algebra.basis_mul(i, j)), reversed_product)

    checks = [
        run_sweep(
            "anti-automorphism", (n, n), anti, labels=(labels, labels), options=options
        ),
        run_sweep(
            "period-2",
            (n,),
            lambda key: sub(A.star(A.star(A.basis(key[0]))), A.basis(key[0])),
            labels=(labels,),
        ),
        check_value(
            "symmetric-plus-skew",
            A.symmetric.dim + A.skew.dim == n,
            note=f"dim H = {A.symmetric.dim}, dim S = {A.skew.dim}",
        ),
    ]
    if A.unit is not None:
        checks.append(check_value("unit-fixed", A.star(A.unit) == A.unit))
    dims = {"A": n, "H": A.symmetric.dim, "S": A.skew.dim}
    return VerificationReport.from_checks("involution", checks, dims=dims)


def jordan_plus(A: InvolutiveAlgebra, name: str = "") -> JordanAlgebra:
    """
    H(A,*) with a·b = ½(ab + ba), in the basis of ``A.symmetric``.

    Raises:
        PreconditionError: A has no unit
        StructureError: a symmetrized product leaves H
    """
    if A.unit is None:
        raise PreconditionError(f"{A.name or 'algebra'} has no unit")
    H = A.symmetric
    half = A.field(1, 2)
    space = Space(A.symmetric_labels(), f"H({A.name})" if A.name else "H")

    def product(i: int, j: int) -> Sparse:
        a, b = H.basis[i], H.basis[j]
        value = scale(add(A.mul(a, b), A.mul(b, a)), half)
        coords = H.coordinates(value)
        if coords is None:
            raise StructureError(f"{space.labels[i]}·{space.labels[j]} is not symmetric")
        return coords

    unit = H.coordinates(A.unit)
    if unit is None:
        raise StructureError("unit is not symmetric")
    J = StructureAlgebra.from_function(A.field, space, product, unit, name or space.name)
    logger.info("H(A,*) of %s has dimension %d", A.name or "algebra", H.dim)
    return JordanAlgebra.from_algebra(J)
