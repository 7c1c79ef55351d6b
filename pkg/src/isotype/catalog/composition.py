"""Unital composition algebras by Cayley–Dickson doubling."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property

from isotype.errors import PreconditionError
from isotype.exactlinalg.algebra import StructureAlgebra
from isotype.exactlinalg.echelon import Subspace
from isotype.exactlinalg.maps import Entry, LinearMap
from isotype.exactlinalg.scalars import QQ_FIELD, Elem, Field, Scalar
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse, add, scale, sub
from isotype.models.report import VerificationReport
from isotype.sweep import EXHAUSTIVE, SweepOptions, check_value, run_sweep

logger = logging.getLogger(__name__)

DIMENSIONS = (1, 2, 4, 8)


@dataclass(frozen=True, eq=False)
class CompositionAlgebra:
    """
    A unital composition algebra in an orthogonal basis e0 = 1, e1, ….

    ``norm[i]`` is ν(e_i); the norm of x is Σ norm[i]·x_i².
    """

    algebra: StructureAlgebra
    conjugation: LinearMap
    norm: tuple[Elem, ...]

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self) -> tuple[str, ...]:
        return self.algebra.labels

    @property
    def name(self) -> str:
        return self.algebra.name

    def conj(self, v: Mapping[int, Elem]) -> Sparse:
        return self.conjugation.apply_sparse(v)

    def mul(self, a: Mapping[int, Elem], b: Mapping[int, Elem]) -> Sparse:
        return self.algebra.mul(a, b)

    def nu(self, v: Mapping[int, Elem]) -> Elem:
        total = self.field.zero
        for i, c in v.items():
            total = total + self.norm[i] * c * c
        return total

    def polar(self, u: Mapping[int, Elem], v: Mapping[int, Elem]) -> Elem:
        """ν(u + v) − ν(u) − ν(v)."""
        total = self.field.zero
        for i, c in u.items():
            d = v.get(i)
            if d:
                total = total + self.norm[i] * c * d
        return total + total

    @cached_property
    def trace_zero(self) -> Subspace:
        """S = {x : x̄ = −x}, spanned by e1, …."""
        return Subspace(self.field, self.dim, [{i: self.field.one} for i in range(1, self.dim)])


def unit_composition(field: Field = QQ_FIELD) -> CompositionAlgebra:
    """The ground field as a composition algebra."""
    space = Space(("e0",), "C1")
    one = field.one
    algebra = StructureAlgebra.from_entries(field, space, [((0, 0), 0, one)], {0: one}, "C1")
    return CompositionAlgebra(algebra, LinearMap.identity(field, space), (one,))


def _mu_value(field: Field, mu: int | Scalar) -> Elem:
    if isinstance(mu, Scalar):
        if mu.field != field:
            raise PreconditionError(f"mu lives in {mu.field}, algebra in {field}")
        return mu.value
    return field(mu)


def cayley_dickson(C: CompositionAlgebra, mu: int | Scalar = 1) -> CompositionAlgebra:
    """
    The doubling C ⊕ C with (a,b)(c,d) = (ac + μ·d̄b, da + bc̄).

    The new basis is e_i = (e_i, 0) followed by e_{n+j} = (0, e_j); conjugation is (ā, −b) and
    the norm is ν(a) − μ·ν(b).

    Args:
        C: Composition algebra of dimension 1, 2 or 4
        mu: Nonzero doubling parameter

    Returns:
        Composition algebra of twice the dimension

    Raises:
        PreconditionError: C is already 8-dimensional or mu = 0
    """
    field = C.field
    n = C.dim
    if n >= 8:
        raise PreconditionError("doubling an 8-dimensional algebra loses the composition property")
    m = _mu_value(field, mu)
    if not m:
        raise PreconditionError("doubling parameter mu must be nonzero")

    basis = [C.algebra.basis(i) for i in range(n)]
    bars = [C.conj(b) for b in basis]
    entries: list[Entry] = []

    def emit(i: int, j: int, image: Sparse, offset: int) -> None:
        entries.extend(((i, j), k + offset, c) for k, c in image.items())

    for i in range(n):
        for k in range(n):
            emit(i, k, C.mul(basis[i], basis[k]), 0)
            emit(i, n + k, C.mul(basis[k], basis[i]), n)
            emit(n + i, k, C.mul(basis[i], bars[k]), n)
            emit(n + i, n + k, scale(C.mul(bars[k], basis[i]), m), 0)

    dim = 2 * n
    space = Space(tuple(f"e{i}" for i in range(dim)), f"C{dim}")
    one = field.one
    algebra = StructureAlgebra.from_entries(field, space, entries, {0: one}, f"C{dim}")
    columns = {i: dict(C.conjugation.image(i)) for i in range(n)}
    columns.update({n + i: {n + i: -one} for i in range(n)})
    conjugation = LinearMap(field, space, space, columns)
    norm = C.norm + tuple(-m * v for v in C.norm)
    logger.debug("Cayley-Dickson doubling to dimension %d with mu = %s", dim, field.format(m))
    return CompositionAlgebra(algebra, conjugation, norm)


def split_composition(dim: int, field: Field = QQ_FIELD) -> CompositionAlgebra:
    """
    The split composition algebra of dimension 1, 2, 4 or 8: repeated doubling with μ = 1.

    Raises:
        PreconditionError: dim is not 1, 2, 4 or 8
    """
    if dim not in DIMENSIONS:
        raise PreconditionError(f"composition algebras have dimension 1, 2, 4 or 8, not {dim}")
    C = unit_composition(field)
    while C.dim < dim:
        C = cayley_dickson(C, 1)
    return C


def check_composition(
    C: CompositionAlgebra, options: SweepOptions = EXHAUSTIVE
) -> VerificationReport:
    """
    Composition identities on basis tuples.

    The polarized multiplicativity ⟨xy, zw⟩ + ⟨xw, zy⟩ = ⟨x,z⟩⟨y,w⟩ on quadruples, the polarized
    x·x̄ = ν(x)·1 on pairs, conjugation as an anti-automorphism of period 2 and e0 as unit.
    """
    n = C.dim
    labels = C.labels
    e = [C.algebra.basis(i) for i in range(n)]
    one = e[0]

    def multiplicative(key: tuple[int, ...]) -> bool:
        x, y, z, w = (e[i] for i in key)
        lhs = C.polar(C.mul(x, y), C.mul(z, w)) + C.polar(C.mul(x, w), C.mul(z, y))
        return lhs != C.polar(x, z) * C.polar(y, w)

    def conj_norm(key: tuple[int, ...]) -> Sparse:
        x, y = e[key[0]], e[key[1]]
        value = add(C.mul(x, C.conj(y)), C.mul(y, C.conj(x)))
        return sub(value, scale(one, C.polar(x, y)))

    def anti(key: tuple[int, ...]) -> Sparse:
        x, y = e[key[0]], e[key[1]]
        return sub(C.conj(C.mul(x, y)), C.mul(C.conj(y), C.conj(x)))

    checks = [
        run_sweep(
            "norm-multiplicative",
            (n, n, n, n),
            multiplicative,
            labels=(labels,) * 4,
            options=options,
        ),
        run_sweep("x-conj-x", (n, n), conj_norm, labels=(labels, labels), options=options),
        run_sweep("conjugation-anti-automorphism", (n, n), anti, labels=(labels, labels)),
        run_sweep(
            "conjugation-period-2",
            (n,),
            lambda key: sub(C.conj(C.conj(e[key[0]])), e[key[0]]),
            labels=(labels,),
        ),
        check_value("unit", C.algebra.acts_as_unit(one)),
    ]
    return VerificationReport.from_checks("composition", checks, dims={"C": n, "S": n - 1})
