"""
Classical J-ternary algebras from skew-hermitian modules.

gl: A = End(W) ⊕ End(W)^op with the exchange involution and T = (W⊗Z*) ⊕ (W*⊗Z). The inner Lie
algebra L(J,T) is sl((V⊗W) ⊕ Z) and the full algebra Skew(End_A(W′), τ) is gl((V⊗W) ⊕ Z).
sp and so: A = End(W) with the adjoint involution of b_W and T = W⊗Z; (V⊗W) ⊥ Z carries a
symplectic or a symmetric form and both algebras are sp or so of it.

W′ = (V⊗A) ⊕ T is the extended skew-hermitian module and τ the involution of End_A(W′) induced by
its form. The full algebra is (sl(V)⊗H) ⊕ φ_{V⊗1,T} ⊕ (id⊗Skew(A)) ⊕ Skew(End_A(T), τ) and contains
L(J,T) through f⊗a ↦ (u⊗b ↦ f(u)⊗ba) and u⊗x ↦ φ_{u⊗1,x}.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum

from isotype.catalog.involutive import InvolutiveAlgebra, adjoint_involution, exchange_algebra
from isotype.catalog.prototypical import HermitianModule, extend_hermitian, prototypical
from isotype.errors import ClosureError, PreconditionError
from isotype.exactlinalg.echelon import Subspace, null_space
from isotype.exactlinalg.maps import BilinearMap, LinearMap
from isotype.exactlinalg.scalars import QQ_FIELD, Elem, Field
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse, add_into, shift, sub
from isotype.jternary.algebra import JTernaryAlgebra
from isotype.lieforge.algebra import LieAlgebra, check_jacobi
from isotype.lieforge.assemble import (
    SL_ACTION,
    SL_NAMES,
    SL_TRACE,
    V_NAMES,
    AssembledLie,
    assemble_L,
)
from isotype.models.report import VerificationReport
from isotype.sweep import EXHAUSTIVE, SweepOptions, check_value, run_sweep

logger = logging.getLogger(__name__)


class Family(str, Enum):
    """Classical series."""

    GL = "gl"
    SP = "sp"
    SO = "so"


@dataclass(frozen=True, eq=False)
class ClassicalExample:
    """
    A classical J-ternary algebra with its reference Lie algebra.

    ``idempotent`` is the default proper idempotent in J coordinates, or None when J has none
    of the catalog shape.
    """

    family: Family
    w: int
    z: int
    module: HermitianModule
    jt: JTernaryAlgebra
    reference: str
    reference_dim: int
    idempotent: Sparse | None
    idempotent_label: str | None = None

    @property
    def N(self) -> int:
        """dim (V⊗W) ⊕ Z."""
        return 2 * self.w + self.z


def symplectic_gram(n: int) -> list[list[int]]:
    """Blocks [[0, 1], [−1, 0]] along the diagonal."""
    if n % 2:
        raise PreconditionError(f"a symplectic form needs even dimension, got {n}")
    gram = [[0] * n for _ in range(n)]
    for k in range(0, n, 2):
        gram[k][k + 1] = 1
        gram[k + 1][k] = -1
    return gram


def identity_gram(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _check_sizes(w: int, z: int) -> None:
    if w < 1 or z < 0:
        raise PreconditionError(f"need dim W >= 1 and dim Z >= 0, got w={w}, z={z}")


def _module_name(family: Family, w: int, z: int) -> str:
    return f"{family.value}({w},{z})"


def _idempotent(A: InvolutiveAlgebra, element: Sparse) -> Sparse:
    coords = A.symmetric.coordinates(element)
    if coords is None:
        raise PreconditionError("default idempotent is not a symmetric element")
    return coords


def gl_example(
    w: int, z: int, field: Field = QQ_FIELD, options: SweepOptions = EXHAUSTIVE
) -> ClassicalExample:
    """
    The gl series.

    T has basis w_i⊗α_k at i·z + k, then β_l⊗z_m at wz + l·z + m, where α and β are dual bases.
    (E_ij, 0) acts on w_l⊗α_k as δ_jl w_i⊗α_k and (0, E_ij) on β_l⊗z_m as δ_li β_j⊗z_m;
    h(w_i⊗α_k, β_l⊗z_m) = δ_km (E_il, 0), h(β_l⊗z_m, w_i⊗α_k) = −δ_km (0, E_il) and h vanishes
    on each summand.

    Args:
        w: dim W, at least 1
        z: dim Z
        field: Ground field
        options: Sweep settings for the input certification

    Returns:
        Example with reference gl(2w+z); its default idempotent is (E11, E11) when w >= 2
    """
    _check_sizes(w, z)
    A = exchange_algebra(w, field)
    m = w * w
    one = field.one
    half = w * z
    labels = tuple(f"w{i + 1}⊗α{k + 1}" for i in range(w) for k in range(z))
    labels += tuple(f"β{l + 1}⊗z{k + 1}" for l in range(w) for k in range(z))
    T = Space(labels, f"T{w},{z}")

    def action(a: int, x: int) -> Sparse:
        op, a = divmod(a, m)
        i, j = divmod(a, w)
        if x < half and not op:
            l, k = divmod(x, z)
            return {i * z + k: one} if j == l else {}
        if x >= half and op:
            l, k = divmod(x - half, z)
            return {half + j * z + k: one} if l == i else {}
        return {}

    def form(x: int, y: int) -> Sparse:
        if x < half <= y:
            i, k = divmod(x, z)
            l, n = divmod(y - half, z)
            return {i * w + l: one} if k == n else {}
        if y < half <= x:
            l, n = divmod(x - half, z)
            i, k = divmod(y, z)
            return {m + i * w + l: -one} if k == n else {}
        return {}

    name = _module_name(Family.GL, w, z)
    module = HermitianModule(
        A,
        T,
        BilinearMap.from_function(field, (A.space, T), T, action),
        BilinearMap.from_function(field, (T, T), A.space, form),
        name,
    )
    jt = prototypical(module, options=options)
    e = _idempotent(A, {0: one, m: one}) if w >= 2 else None
    N = 2 * w + z
    logger.info("%s: dim J=%d, dim T=%d, reference gl(%d)", name, jt.jdim, jt.tdim, N)
    label = "(E11,E11)" if e is not None else None
    return ClassicalExample(Family.GL, w, z, module, jt, f"gl({N})", N * N, e, label)


def _form_example(
    family: Family,
    w: int,
    z: int,
    gram_w: list[list[int]],
    gram_z: list[list[int]],
    field: Field,
    options: SweepOptions,
) -> tuple[HermitianModule, JTernaryAlgebra]:
    """
    T = W⊗Z with basis w_i⊗z_k at i·z + k, E_ij·(w_l⊗z_k) = δ_jl w_i⊗z_k and
    h(w_i⊗z_k, w_j⊗z_m) = G_Z[k][m] · Σ_l G_W[j][l] E_il.
    """
    A = adjoint_involution(w, gram_w, field)
    one = field.one
    T = Space(tuple(f"w{i + 1}⊗z{k + 1}" for i in range(w) for k in range(z)), f"W{w}⊗Z{z}")

    def action(a: int, x: int) -> Sparse:
        i, j = divmod(a, w)
        l, k = divmod(x, z)
        return {i * z + k: one} if j == l else {}

    def form(x: int, y: int) -> Sparse:
        i, k = divmod(x, z)
        j, n = divmod(y, z)
        g = gram_z[k][n]
        if not g:
            return {}
        return {i * w + l: field(g * c) for l, c in enumerate(gram_w[j]) if c}

    module = HermitianModule(
        A,
        T,
        BilinearMap.from_function(field, (A.space, T), T, action),
        BilinearMap.from_function(field, (T, T), A.space, form),
        _module_name(family, w, z),
    )
    return module, prototypical(module, options=options)


def sp_example(
    w: int, z: int, field: Field = QQ_FIELD, options: SweepOptions = EXHAUSTIVE
) -> ClassicalExample:
    """
    The sp series: b_W symmetric (identity Gram), b_Z symplectic.

    Returns:
        Example with reference sp(2w+z); default idempotent E11 when w >= 2

    Raises:
        PreconditionError: z is odd
    """
    _check_sizes(w, z)
    if z % 2:
        raise PreconditionError(f"sp needs even dim Z for a symplectic b_Z, got {z}")
    module, jt = _form_example(
        Family.SP, w, z, identity_gram(w), symplectic_gram(z), field, options
    )
    e = _idempotent(module.A, {0: field.one}) if w >= 2 else None
    N = 2 * w + z
    logger.info("sp(%d,%d): dim J=%d, dim T=%d, reference sp(%d)", w, z, jt.jdim, jt.tdim, N)
    label = "E11" if e is not None else None
    return ClassicalExample(Family.SP, w, z, module, jt, f"sp({N})", N * (N + 1) // 2, e, label)


def so_example(
    w: int, z: int, field: Field = QQ_FIELD, options: SweepOptions = EXHAUSTIVE
) -> ClassicalExample:
    """
    The so series: b_W symplectic, b_Z symmetric (identity Gram).

    Returns:
        Example with reference so(2w+z); default idempotent E11+E22 when w >= 4

    Raises:
        PreconditionError: w is odd
    """
    _check_sizes(w, z)
    if w % 2:
        raise PreconditionError(f"so needs even dim W for a symplectic b_W, got {w}")
    module, jt = _form_example(
        Family.SO, w, z, symplectic_gram(w), identity_gram(z), field, options
    )
    one = field.one
    e = _idempotent(module.A, {0: one, w + 1: one}) if w >= 4 else None
    N = 2 * w + z
    logger.info("so(%d,%d): dim J=%d, dim T=%d, reference so(%d)", w, z, jt.jdim, jt.tdim, N)
    label = "E11+E22" if e is not None else None
    return ClassicalExample(Family.SO, w, z, module, jt, f"so({N})", N * (N - 1) // 2, e, label)


BUILDERS = {Family.GL: gl_example, Family.SP: sp_example, Family.SO: so_example}


def classical_example(
    family: Family | str,
    w: int,
    z: int,
    field: Field = QQ_FIELD,
    options: SweepOptions = EXHAUSTIVE,
) -> ClassicalExample:
    return BUILDERS[Family(family)](w, z, field, options)


def skew_endomorphisms(W: HermitianModule) -> list[LinearMap]:
    """
    Basis of Skew(End_A(W), τ): maps f with f(ax) = a·f(x) and h(f(x), y) + h(x, f(y)) = 0.

    Both conditions are linear in the n² matrix entries of f; the unknown for the entry in
    row k of column i is i·n + k, so every solution unflattens directly into a map.
    """
    A = W.A
    field = A.field
    n, nA = W.tdim, A.dim
    acts = [[W.action.basis_image(a, x) for x in range(n)] for a in range(nA)]
    forms = [[W.h.basis_image(x, y) for y in range(n)] for x in range(n)]
    rows: list[Sparse] = []
    for a in range(nA):
        for x in range(n):
            eq: dict[int, Sparse] = {}
            for k, c in acts[a][x].items():
                for j in range(n):
                    add_into(eq.setdefault(j, {}), {k * n + j: c})
            for i in range(n):
                for j, c in acts[a][i].items():
                    add_into(eq.setdefault(j, {}), {x * n + i: -c})
            rows.extend(row for row in eq.values() if row)
    for x in range(n):
        for y in range(x, n):
            eq = {}
            for i in range(n):
                for c_out, c in forms[i][y].items():
                    add_into(eq.setdefault(c_out, {}), {x * n + i: c})
                for c_out, c in forms[x][i].items():
                    add_into(eq.setdefault(c_out, {}), {y * n + i: c})
            rows.extend(row for row in eq.values() if row)
    solutions = null_space(field, rows, n * n)
    logger.info("Skew(End_A(W)): %d equations, dimension %d", len(rows), len(solutions))
    return [LinearMap.unflatten(field, W.T, W.T, sol) for sol in solutions]


@dataclass(frozen=True, eq=False)
class FullAlgebra:
    """
    The full Lie algebra Skew(End_A(W), τ) of a classical example, W = (V⊗A) ⊕ T.

    ``maps`` is the basis of skew endomorphisms and ``algebra`` their commutator algebra in
    that basis.
    """

    example: ClassicalExample
    W: HermitianModule
    maps: list[LinearMap]
    span: Subspace
    algebra: LieAlgebra

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def coordinates(self, op: LinearMap) -> Sparse | None:
        return self.span.coordinates(op.flatten())

    def sl_image(self, f: int, a: Mapping[int, Elem]) -> LinearMap:
        """f⊗a for a ∈ J = H(A,*): u⊗b ↦ f(u)⊗ba, zero on T."""
        A = self.W.A
        nA = A.dim
        value = A.symmetric.lift(a)

        def column(x: int) -> Sparse:
            if x >= 2 * nA:
                return {}
            u, i = divmod(x, nA)
            ba = A.mul(A.basis(i), value)
            out: Sparse = {}
            for w, c in SL_ACTION.get((f, u), {}).items():
                add_into(out, shift(ba, w * nA), A.field(c))
            return out

        return LinearMap.from_function(A.field, self.W.T, self.W.T, column)

    def right_multiplication(self, c: Mapping[int, Elem]) -> LinearMap:
        """id⊗R_c: u⊗b ↦ u⊗bc, zero on T."""
        A = self.W.A
        nA = A.dim

        def column(x: int) -> Sparse:
            if x >= 2 * nA:
                return {}
            return shift(A.mul(A.basis(x % nA), c), x - x % nA)

        return LinearMap.from_function(A.field, self.W.T, self.W.T, column)

    def v_image(self, u: int, x: Mapping[int, Elem]) -> LinearMap:
        """u⊗x for x ∈ T: φ_{u⊗1,x}."""
        A = self.W.A
        if A.unit is None:
            raise PreconditionError("the full algebra needs a unital A")
        return self.W.phi(shift(A.unit, u * A.dim), shift(x, 2 * A.dim))

    def embed(self, assembled: AssembledLie, v: Mapping[int, Elem]) -> LinearMap:
        """Image of the sl(V)⊗J ⊕ V⊗T part of an element of L(J,T)."""
        out = LinearMap.zero(self.W.A.field, self.W.T, self.W.T)
        for f, name in enumerate(SL_NAMES):
            part = assembled.part(v, name)
            if part:
                out = out + self.sl_image(f, part)
        for u, name in enumerate(V_NAMES):
            part = assembled.part(v, name)
            if part:
                out = out + self.v_image(u, part)
        return out

    def generated(self) -> Subspace:
        """Subalgebra generated by the images of sl(V)⊗J and V⊗T, as flattened maps."""
        jt = self.example.jt
        field = self.W.A.field
        width = self.W.tdim**2
        gens = [self.sl_image(f, jt.J.basis(a)) for f in range(3) for a in range(jt.jdim)]
        gens += [self.v_image(u, jt.t(x)) for u in range(2) for x in range(jt.tdim)]
        span = Subspace(field, width, [])

        def absorb(op: LinearMap) -> bool:
            nonlocal span
            flat = op.flatten()
            if span.contains(flat):
                return False
            span = Subspace(field, width, [*span.basis, flat])
            return True

        kept = [g for g in gens if absorb(g)]
        frontier = list(kept)
        while frontier:
            grown = []
            for m in frontier:
                for g in kept:
                    c = g.commutator(m)
                    if absorb(c):
                        grown.append(c)
            frontier = grown
        return span


def full_lie_algebra(example: ClassicalExample) -> FullAlgebra:
    """
    Build Skew(End_A(W), τ) for the extended module W = (V⊗A) ⊕ T of a classical example.

    Raises:
        ClosureError: a commutator of skew endomorphisms leaves the solved span
    """
    W = extend_hermitian(example.module)
    field = W.A.field
    maps = skew_endomorphisms(W)
    span = Subspace(field, W.tdim**2, [m.flatten() for m in maps])

    def bracket(i: int, j: int) -> Sparse:
        coords = span.coordinates(maps[i].commutator(maps[j]).flatten())
        if coords is None:
            raise ClosureError(f"[f{i},f{j}] is not a skew endomorphism")
        return coords

    space = Space(tuple(f"f{k}" for k in range(len(maps))), f"Skew(End_A({W.name}))")
    product = BilinearMap.from_function(field, (space, space), space, bracket)
    algebra = LieAlgebra(field, space, product, None, f"full {example.module.name}")
    logger.info(
        "%s: full algebra of dim %d, reference %s of dim %d",
        example.module.name,
        len(maps),
        example.reference,
        example.reference_dim,
    )
    return FullAlgebra(example, W, maps, span, algebra)


def check_full_algebra(
    example: ClassicalExample,
    options: SweepOptions = EXHAUSTIVE,
    assembled: AssembledLie | None = None,
) -> VerificationReport:
    """
    Build the full algebra and certify that it contains L(J,T).

    The images of sl(V)⊗J and V⊗T must be skew endomorphisms and reproduce the brackets of
    L(J,T): [f⊗a, u⊗x] exactly, and [f⊗a, g⊗b] up to ½tr(fg)·id⊗R_{ba−ab}, which is the image of
    its D part. The subalgebra they generate must have the dimension of L(J,T), and the full
    algebra the dimension of the reference algebra.
    """
    full = full_lie_algebra(example)
    jt = example.jt
    inner = assembled if assembled is not None else assemble_L(jt)
    L = inner.algebra
    A = full.W.A
    nJ, nT = jt.jdim, jt.tdim
    jl, tl = jt.J.labels, jt.T.labels
    half = A.field(1, 2)

    def outside(op: LinearMap) -> bool:
        return full.coordinates(op) is None

    def sl_sl(key: tuple[int, ...]) -> bool:
        f, a, g, b = key
        ea, eb = jt.J.basis(a), jt.J.basis(b)
        lhs = full.sl_image(f, ea).commutator(full.sl_image(g, eb))
        rhs = full.embed(inner, L.bracket(inner.sl_elem(f, ea), inner.sl_elem(g, eb)))
        t = SL_TRACE.get((f, g))
        if t:
            va, vb = A.symmetric.lift(ea), A.symmetric.lift(eb)
            twist = sub(A.mul(vb, va), A.mul(va, vb))
            rhs = rhs + full.right_multiplication(twist).scaled(half * A.field(t))
        return lhs != rhs

    def sl_v(key: tuple[int, ...]) -> bool:
        f, a, u, x = key
        ea, tx = jt.J.basis(a), jt.t(x)
        value = L.bracket(inner.sl_elem(f, ea), inner.v_elem(u, tx))
        lhs = full.sl_image(f, ea).commutator(full.v_image(u, tx))
        return bool(inner.part(value, "D")) or lhs != full.embed(inner, value)

    checks = [
        run_sweep(
            "sl(V)xJ in full",
            (3, nJ),
            lambda key: outside(full.sl_image(key[0], jt.J.basis(key[1]))),
            labels=(SL_NAMES, jl),
        ),
        run_sweep(
            "VxT in full",
            (2, nT),
            lambda key: outside(full.v_image(key[0], jt.t(key[1]))),
            labels=(V_NAMES, tl),
        ),
        run_sweep(
            "embedding [f⊗a,g⊗b]",
            (3, nJ, 3, nJ),
            sl_sl,
            labels=(SL_NAMES, jl, SL_NAMES, jl),
            options=options,
        ),
        run_sweep(
            "embedding [f⊗a,u⊗x]",
            (3, nJ, 2, nT),
            sl_v,
            labels=(SL_NAMES, jl, V_NAMES, tl),
            options=options,
        ),
    ]
    generated = full.generated().dim
    checks.append(
        check_value(
            "L(J,T) in full",
            generated == L.dim,
            note=f"generated subalgebra has dim {generated}, L(J,T) has dim {L.dim}",
        )
    )
    checks.append(
        check_value(
            "full-vs-reference",
            full.dim == example.reference_dim,
            note=f"full algebra has dim {full.dim}, {example.reference} has dim "
            f"{example.reference_dim}",
        )
    )
    checks += check_jacobi(full.algebra, options).checks
    dims = {"W": full.W.tdim, "L(J,T)": L.dim, "full": full.dim}
    return VerificationReport.from_checks("full-algebra", checks, dims=dims)
