"""
Structurable algebras.

A unital algebra with involution x ↦ x̄ is structurable when V_{x,y}(z) = (xȳ)z + (zȳ)x − (zx̄)y
satisfies [V_{x,y}, V_{z,w}] = V_{V_{x,y}(z),w} − V_{z,V_{y,x}(w)}. Instrl is the span of the
V_{x,y}; the pair (S, A) with a skew element s whose left multiplication is invertible is a
J-ternary algebra.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property

from isotype.catalog.composition import CompositionAlgebra
from isotype.catalog.involutive import InvolutiveAlgebra, check_involution
from isotype.errors import ClosureError, InconsistentSystemError, PreconditionError, StructureError
from isotype.exactlinalg.algebra import StructureAlgebra
from isotype.exactlinalg.echelon import Subspace, rank, solve_exact, span_basis
from isotype.exactlinalg.maps import Entry, LinearMap
from isotype.exactlinalg.scalars import Elem
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse, add, add_into, neg, scale, sub, to_dense, to_sparse
from isotype.jternary.algebra import JTernaryAlgebra
from isotype.jternary.axioms import check_jt_axioms
from isotype.jordan.algebra import JordanAlgebra
from isotype.models.report import VerificationReport
from isotype.sweep import EXHAUSTIVE, SweepOptions, run_sweep

logger = logging.getLogger(__name__)

Vec = Mapping[int, Elem]


@dataclass(frozen=True, eq=False)
class StructurableAlgebra(InvolutiveAlgebra):
    """An algebra with involution together with its V-operators."""

    def V_apply(self, x: Vec, y: Vec, z: Vec) -> Sparse:
        """{x,y,z} = (xȳ)z + (zȳ)x − (zx̄)y."""
        y_bar = self.star(y)
        out = self.mul(self.mul(x, y_bar), z)
        add_into(out, self.mul(self.mul(z, y_bar), x))
        add_into(out, self.mul(self.mul(z, self.star(x)), y), -self.field.one)
        return out

    def V(self, x: Vec, y: Vec) -> LinearMap:
        return LinearMap.from_function(
            self.field, self.space, self.space, lambda k: self.V_apply(x, y, self.basis(k))
        )

    @cached_property
    def V_table(self) -> dict[tuple[int, int], LinearMap]:
        """V_{e_i,e_j} for every basis pair."""
        n = self.dim
        logger.debug("tabulating %d V-operators", n * n)
        return {(i, j): self.V(self.basis(i), self.basis(j)) for i in range(n) for j in range(n)}

    def V_combination(self, x: Vec, y: Vec) -> LinearMap:
        """V_{x,y} assembled from the basis table."""
        columns: dict[int, Sparse] = {}
        table = self.V_table
        for i, a in x.items():
            for j, b in y.items():
                for k, image in table[(i, j)].columns.items():
                    add_into(columns.setdefault(k, {}), image, a * b)
        return LinearMap(self.field, self.space, self.space, columns)


def as_structurable(A: InvolutiveAlgebra) -> StructurableAlgebra:
    if isinstance(A, StructurableAlgebra):
        return A
    return StructurableAlgebra(A.algebra, A.involution, A.symmetric_basis, A.skew_basis)


@dataclass(frozen=True, eq=False)
class TensorStructurable(StructurableAlgebra):
    """
    C₁ ⊗ C₂ with basis e_i⊗f_j at i·dim C₂ + j.

    S is ordered S₁⊗1 (e_i⊗f0, i ≥ 1) then 1⊗S₂ (e0⊗f_j, j ≥ 1).
    """

    c1: CompositionAlgebra | None = None
    c2: CompositionAlgebra | None = None

    @property
    def first(self) -> CompositionAlgebra:
        assert self.c1 is not None
        return self.c1

    @property
    def second(self) -> CompositionAlgebra:
        assert self.c2 is not None
        return self.c2

    @property
    def s1_dim(self) -> int:
        return self.first.dim - 1

    def s1_element(self, v: Vec) -> Sparse:
        """a ⊗ 1 for a trace-zero a ∈ C₁, as an element of A."""
        m = self.second.dim
        return {i * m: c for i, c in v.items() if i}


def tensor_structurable(C1: CompositionAlgebra, C2: CompositionAlgebra) -> TensorStructurable:
    """
    A = C₁ ⊗ C₂ with (a⊗b)(c⊗d) = ac⊗bd and the tensor product of the conjugations.

    Raises:
        PreconditionError: dim C₁ ≠ 8
    """
    if C1.dim != 8:
        raise PreconditionError(f"the first factor must be an octonion algebra, got dim {C1.dim}")
    field = C1.field
    n, m = C1.dim, C2.dim
    labels = tuple(f"{a}⊗f{j}" for a in C1.labels for j in range(m))
    space = Space(labels, f"C{n}⊗C{m}")
    entries: list[Entry] = []
    for (i, k), left in C1.algebra.product.table.items():
        for (j, l), right in C2.algebra.product.table.items():
            for p, a in left.items():
                for q, b in right.items():
                    entries.append(((i * m + j, k * m + l), p * m + q, a * b))
    algebra = StructureAlgebra.from_entries(field, space, entries, {0: field.one}, space.name)
    columns: dict[int, Sparse] = {}
    for i in range(n):
        for j in range(m):
            image: Sparse = {}
            for p, a in C1.conjugation.image(i).items():
                for q, b in C2.conjugation.image(j).items():
                    image[p * m + q] = a * b
            columns[i * m + j] = image
    involution = LinearMap(field, space, space, columns)
    one = field.one
    symmetric = ({0: one},) + tuple({i * m + j: one} for i in range(1, n) for j in range(1, m))
    skew = tuple({i * m: one} for i in range(1, n)) + tuple({j: one} for j in range(1, m))
    logger.info("structurable algebra %s: dim %d, dim S %d", space.name, n * m, len(skew))
    return TensorStructurable(algebra, involution, symmetric, skew, C1, C2)


def _combine(A: StructurableAlgebra, terms: list[tuple[Elem, LinearMap]]) -> LinearMap:
    columns: dict[int, Sparse] = {}
    for coeff, op in terms:
        for k, image in op.columns.items():
            add_into(columns.setdefault(k, {}), image, coeff)
    return LinearMap(A.field, A.space, A.space, columns)


def check_structurable(
    A: InvolutiveAlgebra, options: SweepOptions = EXHAUSTIVE
) -> VerificationReport:
    """
    The involution checks and the operator identity
    [V_{x,y}, V_{z,w}] = V_{V_{x,y}(z),w} − V_{z,V_{y,x}(w)} on basis quadruples, both sides
    compared on every basis vector.
    """
    SA = as_structurable(A)
    n = SA.dim
    V = SA.V_table

    def identity(key: tuple[int, ...]) -> bool:
        x, y, z, w = key
        lhs = V[(x, y)].commutator(V[(z, w)])
        terms = [(c, V[(k, w)]) for k, c in V[(x, y)].image(z).items()]
        terms += [(-c, V[(z, k)]) for k, c in V[(y, x)].image(w).items()]
        return lhs != _combine(SA, terms)

    checks = list(check_involution(SA, options).checks)
    checks.append(
        run_sweep(
            "structurable-identity",
            (n, n, n, n),
            identity,
            labels=(SA.labels,) * 4,
            options=options,
        )
    )
    if SA.unit is not None:
        unit = SA.unit
        checks.append(
            run_sweep(
                "V11-identity",
                (n,),
                lambda key: sub(SA.V_apply(unit, unit, SA.basis(key[0])), SA.basis(key[0])),
                labels=(SA.labels,),
            )
        )
    dims = {"A": n, "H": SA.symmetric.dim, "S": SA.skew.dim}
    logger.info("structurable check on %s (dim %d)", SA.name or "algebra", n)
    return VerificationReport.from_checks("structurable", checks, dims=dims)


@dataclass(frozen=True, eq=False)
class InnerStructure:
    """
    Instrl(A): the span of the V_{x,y} inside End(A).

    The basis is the first independent subfamily of V_{e_i,e_j} in row-major (i, j) order, so
    T^ε = −V_{e_j,e_i} on the basis element V_{e_i,e_j}. ``brackets[(k, l)]`` holds the
    coordinates of [T_k, T_l] for k < l.
    """

    algebra: StructurableAlgebra
    generators: tuple[tuple[int, int], ...]
    span: Subspace
    brackets: dict[tuple[int, int], Sparse]

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def labels(self) -> tuple[str, ...]:
        names = self.algebra.labels
        return tuple(f"V[{names[i]},{names[j]}]" for i, j in self.generators)

    def operator(self, k: int) -> LinearMap:
        return self.algebra.V_table[self.generators[k]]

    def epsilon(self, k: int) -> LinearMap:
        i, j = self.generators[k]
        return self.algebra.V_table[(j, i)].scaled(-self.algebra.field.one)

    def coordinates(self, op: LinearMap) -> Sparse | None:
        return self.span.coordinates(op.flatten())

    def require(self, op: LinearMap, what: str) -> Sparse:
        coords = self.coordinates(op)
        if coords is None:
            raise ClosureError(f"{what} is not in Instrl")
        return coords


def instrl(A: InvolutiveAlgebra) -> InnerStructure:
    """
    Instrl(A) by elimination over all V_{e_i,e_j}, with its bracket table.

    Raises:
        ClosureError: the span is not closed under commutators
    """
    SA = as_structurable(A)
    n = SA.dim
    pairs = [(i, j) for i in range(n) for j in range(n)]
    flat = [SA.V_table[p].flatten() for p in pairs]
    chosen = span_basis(SA.field, flat, n * n)
    generators = tuple(pairs[k] for k in chosen)
    span = Subspace(SA.field, n * n, [flat[k] for k in chosen])
    ops = [SA.V_table[p] for p in generators]
    brackets: dict[tuple[int, int], Sparse] = {}
    for k in range(len(ops)):
        for l in range(k + 1, len(ops)):
            coords = span.coordinates(ops[k].commutator(ops[l]).flatten())
            if coords is None:
                raise ClosureError(f"[V{generators[k]}, V{generators[l]}] leaves Instrl")
            brackets[(k, l)] = coords
    logger.info("Instrl of %s has dimension %d", SA.name or "algebra", len(generators))
    return InnerStructure(SA, generators, span, brackets)


def find_s_prime(A: InvolutiveAlgebra, s: Vec) -> Sparse:
    """
    The skew element s′ with L_{s′} = L_s⁻¹.

    Raises:
        PreconditionError: s is not skew, L_s is singular, or no such s′ lies in S
    """
    SA = as_structurable(A)
    n = SA.dim
    s = to_sparse(s)
    S = SA.skew
    if S.coordinates(s) is None:
        raise PreconditionError("s is not a skew element")
    L_s = SA.algebra.left(s)
    if rank(SA.field, [L_s.image(i) for i in range(n)], n) != n:
        raise PreconditionError("left multiplication by s is singular")
    rows = [
        to_dense(SA.algebra.left(b).compose(L_s).flatten(), n * n, SA.field) for b in S.basis
    ]
    target = to_dense(LinearMap.identity(SA.field, SA.space).flatten(), n * n, SA.field)
    try:
        result = solve_exact(rows, target, SA.field)
    except InconsistentSystemError as exc:
        raise PreconditionError("no skew s' with L_s' equal to the inverse of L_s") from exc
    assert result.solution is not None
    return S.lift(to_sparse(result.solution))


def jternary_from_structurable(
    A: InvolutiveAlgebra, s: Vec, certify: bool = False, options: SweepOptions = EXHAUSTIVE
) -> JTernaryAlgebra:
    """
    The J-ternary algebra (S, A) of a skew element s with L_s invertible.

    a·b = ½(a(sb) + b(sa)), a•x = a(sx), ⟨x|y⟩ = xȳ − yx̄ and ⟨x,y,z⟩ = −V_{x,sy}(z). The unit of
    (S, ·) is s′.

    Args:
        A: Structurable algebra
        s: Skew element, as a vector of A
        certify: Also run the J-ternary axiom suite
        options: Sweep settings for the certification

    Returns:
        J-ternary algebra with J = S in the basis ``A.skew`` and T = A

    Raises:
        PreconditionError: L_s singular or s′ outside S
        StructureError: a product leaves S, or the axioms fail under ``certify``
    """
    SA = as_structurable(A)
    s = to_sparse(s)
    s_prime = find_s_prime(SA, s)
    S = SA.skew
    half = SA.field(1, 2)
    J_space = Space(SA.skew_labels(), "S")
    s_images = [SA.mul(s, SA.basis(x)) for x in range(SA.dim)]

    def in_S(v: Sparse, what: str) -> Sparse:
        coords = S.coordinates(v)
        if coords is None:
            raise StructureError(f"{what} is not skew")
        return coords

    def product(i: int, j: int) -> Sparse:
        a, b = S.basis[i], S.basis[j]
        value = add(SA.mul(a, SA.mul(s, b)), SA.mul(b, SA.mul(s, a)))
        return in_S(scale(value, half), f"{J_space.labels[i]}·{J_space.labels[j]}")

    def bullet(i: int, x: int) -> Sparse:
        return SA.mul(S.basis[i], s_images[x])

    def skew(x: int, y: int) -> Sparse:
        X, Y = SA.basis(x), SA.basis(y)
        value = sub(SA.mul(X, SA.star(Y)), SA.mul(Y, SA.star(X)))
        return in_S(value, f"<{SA.labels[x]}|{SA.labels[y]}>")

    def triple(x: int, y: int, z: int) -> Sparse:
        return neg(SA.V_apply(SA.basis(x), s_images[y], SA.basis(z)))

    unit = in_S(s_prime, "s'")
    J = JordanAlgebra.from_algebra(
        StructureAlgebra.from_function(SA.field, J_space, product, unit, "S")
    )
    name = f"{SA.name}:S,A" if SA.name else "S,A"
    JT = JTernaryAlgebra.from_functions(J, SA.space, bullet, skew, triple, name)
    logger.info("J-ternary algebra (S, A): dim J=%d, dim T=%d", J.dim, SA.dim)
    if certify:
        report = check_jt_axioms(JT, options)
        if not report.passed:
            raise StructureError(f"{name} fails the J-ternary axioms: {report.failed_checks()}")
    return JT
