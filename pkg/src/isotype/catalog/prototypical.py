"""
Skew-hermitian modules over associative algebras with involution and their J-ternary algebras.

For (A,*) associative and T a left A-module with a skew-hermitian form h, the pair (H(A,*), T) is a
J-ternary algebra with a•x = ax, ⟨x|y⟩ = h(x,y) − h(y,x), ⟨x,y,z⟩ = h(x,y)z + h(z,x)y + h(z,y)x.
The skew-hermitian convention throughout is h(x,y) = −h(y,x)*.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass

from isotype.catalog.involutive import InvolutiveAlgebra, check_involution, jordan_plus
from isotype.errors import DimensionMismatchError, StructureError
from isotype.exactlinalg.maps import BilinearMap, LinearMap
from isotype.exactlinalg.scalars import Elem
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse, add, add_into, scale, shift, sub
from isotype.jternary.algebra import JTernaryAlgebra
from isotype.jternary.axioms import check_jt_axioms
from isotype.lieforge.assemble import SYMPLECTIC, V_NAMES
from isotype.models.report import CheckResult, VerificationReport
from isotype.sweep import EXHAUSTIVE, SweepOptions, run_sweep

logger = logging.getLogger(__name__)

Vec = Mapping[int, Elem]


@dataclass(frozen=True, eq=False)
class HermitianModule:
    """
    A left (A,*)-module T with a form h: T × T → A.

    Attributes:
        A: Associative algebra with involution
        T: Module space
        action: (a, x) ↦ ax, A × T → T
        h: T × T → A
    """

    A: InvolutiveAlgebra
    T: Space
    action: BilinearMap
    h: BilinearMap
    name: str = ""

    def __post_init__(self) -> None:
        if self.action.domains != (self.A.space, self.T) or self.action.codomain != self.T:
            raise DimensionMismatchError("action must map A × T to T")
        if self.h.domains != (self.T, self.T) or self.h.codomain != self.A.space:
            raise DimensionMismatchError("h must map T × T to A")

    @property
    def tdim(self) -> int:
        return self.T.dim

    def t(self, i: int) -> Sparse:
        return {i: self.A.field.one}

    def act(self, a: Vec, x: Vec) -> Sparse:
        return self.action.apply_sparse(a, x)

    def form(self, x: Vec, y: Vec) -> Sparse:
        return self.h.apply_sparse(x, y)

    def phi_apply(self, x: Vec, y: Vec, z: Vec) -> Sparse:
        """φ_{x,y}(z) = h(z,x)y + h(z,y)x."""
        return add(self.act(self.form(z, x), y), self.act(self.form(z, y), x))

    def phi(self, x: Vec, y: Vec) -> LinearMap:
        field = self.A.field
        return LinearMap.from_function(
            field, self.T, self.T, lambda k: self.phi_apply(x, y, self.t(k))
        )


def check_hermitian(M: HermitianModule, options: SweepOptions = EXHAUSTIVE) -> VerificationReport:
    """
    Certify the input of :func:`prototypical`.

    The involution checks, associativity of A, the module law (ab)x = a(bx), 1x = x,
    h(ax,y) = a·h(x,y) and h(x,y) = −h(y,x)*, all on basis tuples.
    """
    A = M.A
    nA, nT = A.dim, M.tdim
    la, lt = A.labels, M.T.labels
    e = A.basis
    t = M.t

    def module_law(key: tuple[int, ...]) -> Sparse:
        a, b, x = e(key[0]), e(key[1]), t(key[2])
        return sub(M.act(A.mul(a, b), x), M.act(a, M.act(b, x)))

    def linear(key: tuple[int, ...]) -> Sparse:
        a, x, y = e(key[0]), t(key[1]), t(key[2])
        return sub(M.form(M.act(a, x), y), A.mul(a, M.form(x, y)))

    def skew_hermitian(key: tuple[int, ...]) -> Sparse:
        x, y = t(key[0]), t(key[1])
        return add(M.form(x, y), A.star(M.form(y, x)))

    checks = list(check_involution(A, options).checks)
    checks.append(
        run_sweep(
            "associativity",
            (nA, nA, nA),
            lambda key: A.algebra.associator(e(key[0]), e(key[1]), e(key[2])),
            labels=(la, la, la),
            options=options,
        )
    )
    checks.append(
        run_sweep("module-law", (nA, nA, nT), module_law, labels=(la, la, lt), options=options)
    )
    if A.unit is not None:
        unit = A.unit
        checks.append(
            run_sweep(
                "module-unit",
                (nT,),
                lambda key: sub(M.act(unit, t(key[0])), t(key[0])),
                labels=(lt,),
            )
        )
    checks.append(
        run_sweep("h-linear", (nA, nT, nT), linear, labels=(la, lt, lt), options=options)
    )
    checks.append(
        run_sweep(
            "skew-hermitian",
            (nT, nT),
            skew_hermitian,
            labels=(lt, lt),
            predicate=lambda key: key[0] <= key[1],
            options=options,
        )
    )
    dims = {"A": nA, "T": nT, "H": A.symmetric.dim}
    return VerificationReport.from_checks("hermitian", checks, dims=dims)


def prototypical(
    M: HermitianModule, certify: bool = False, options: SweepOptions = EXHAUSTIVE
) -> JTernaryAlgebra:
    """
    The J-ternary algebra (H(A,*), T) of a skew-hermitian module.

    Args:
        M: Skew-hermitian module over an associative algebra with involution
        certify: Also run the J-ternary axiom suite on the result
        options: Sweep settings for the input and output checks

    Returns:
        J-ternary algebra with J = H(A,*) in the basis of ``M.A.symmetric``

    Raises:
        StructureError: the module fails :func:`check_hermitian`, or the result fails the axioms
    """
    report = check_hermitian(M, options)
    if not report.passed:
        raise StructureError(
            f"{M.name or 'module'} is not a skew-hermitian module: {report.failed_checks()}"
        )
    A = M.A
    H = A.symmetric
    J = jordan_plus(A)
    t = M.t

    def bullet(i: int, x: int) -> Sparse:
        return M.act(H.basis[i], t(x))

    def skew(x: int, y: int) -> Sparse:
        value = sub(M.form(t(x), t(y)), M.form(t(y), t(x)))
        coords = H.coordinates(value)
        if coords is None:
            raise StructureError(f"<{M.T.labels[x]}|{M.T.labels[y]}> is not symmetric")
        return coords

    def triple(x: int, y: int, z: int) -> Sparse:
        X, Y, Z = t(x), t(y), t(z)
        out = M.act(M.form(X, Y), Z)
        add_into(out, M.act(M.form(Z, X), Y))
        add_into(out, M.act(M.form(Z, Y), X))
        return out

    name = M.name or (f"{A.name}-module" if A.name else "")
    JT = JTernaryAlgebra.from_functions(J, M.T, bullet, skew, triple, name)
    logger.info("prototypical J-ternary algebra %s: dim J=%d, dim T=%d", name, J.dim, M.tdim)
    if certify:
        axioms = check_jt_axioms(JT, options)
        if not axioms.passed:
            raise StructureError(f"{name} fails the J-ternary axioms: {axioms.failed_checks()}")
    return JT


def check_phi_identities(
    M: HermitianModule, JT: JTernaryAlgebra | None = None, options: SweepOptions = EXHAUSTIVE
) -> list[CheckResult]:
    """
    Identities of φ_{x,y}(z) = h(z,x)y + h(z,y)x.

    φ_{u,v} is a skew derivation of φ: [φ_{u,v}, φ_{x,y}] = φ_{φ_{u,v}(x),y} + φ_{x,φ_{u,v}(y)};
    φ_{ax,y} = φ_{x,a*y}; and, when the J-ternary algebra is given,
    d_{x,y}(z) = −2φ_{x,y}(z) − (h(x,y) + h(y,x))z.
    """
    A = M.A
    nA, nT = A.dim, M.tdim
    la, lt = A.labels, M.T.labels
    t = M.t
    phis = {(i, j): M.phi(t(i), t(j)) for i in range(nT) for j in range(i, nT)}

    def skew_derivation(key: tuple[int, ...]) -> bool:
        u, v, x, y = key
        f = phis[(min(u, v), max(u, v))]
        lhs = f.commutator(phis[(min(x, y), max(x, y))])
        rhs = M.phi(f.image(x), t(y)) + M.phi(t(x), f.image(y))
        return lhs != rhs

    def adjoint(key: tuple[int, ...]) -> bool:
        a, x, y = A.basis(key[0]), t(key[1]), t(key[2])
        return M.phi(M.act(a, x), y) != M.phi(x, M.act(A.star(a), y))

    checks = [
        run_sweep(
            "phi-skew-derivation",
            (nT, nT, nT, nT),
            skew_derivation,
            labels=(lt,) * 4,
            predicate=lambda key: key[0] <= key[1] and key[2] <= key[3],
            options=options,
        ),
        run_sweep("phi-adjoint", (nA, nT, nT), adjoint, labels=(la, lt, lt), options=options),
    ]
    if JT is not None:
        two = A.field(2)

        def d_versus_phi(key: tuple[int, ...]) -> Sparse:
            x, y, z = (t(i) for i in key)
            _, dz = JT.split(JT.d_apply(x, y, JT.join({}, z)))
            sym = add(M.form(x, y), M.form(y, x))
            expected = scale(M.phi_apply(x, y, z), -two)
            add_into(expected, M.act(sym, z), -A.field.one)
            return sub(dz, expected)

        checks.append(
            run_sweep(
                "d-versus-phi",
                (nT, nT, nT),
                d_versus_phi,
                labels=(lt, lt, lt),
                options=options,
            )
        )
    return checks


def extend_hermitian(M: HermitianModule) -> HermitianModule:
    """
    The module (V ⊗ A) ⊕ T with h(u⊗a, v⊗b) = 2(u|v)ab* and h zero across the summands.

    V = 𝔽p ⊕ 𝔽q carries the symplectic form (p|q) = 1. Basis: u⊗e_i at u·dim A + i, then T.
    """
    A = M.A
    field = A.field
    nA, nT = A.dim, M.tdim
    n = 2 * nA
    labels = tuple(f"{u}⊗{a}" for u in V_NAMES for a in A.labels) + M.T.labels
    space = Space(labels, f"V⊗{A.name}+{M.T.name}" if A.name else "")
    two = field(2)

    def action(a: int, x: int) -> Sparse:
        if x < n:
            u, i = divmod(x, nA)
            return shift(A.mul(A.basis(a), A.basis(i)), u * nA)
        return shift(M.act(A.basis(a), M.t(x - n)), n)

    def form(x: int, y: int) -> Sparse:
        if x < n and y < n:
            u, i = divmod(x, nA)
            v, j = divmod(y, nA)
            sign = SYMPLECTIC.get((u, v), 0)
            if not sign:
                return {}
            return scale(A.mul(A.basis(i), A.star(A.basis(j))), two * field(sign))
        if x >= n and y >= n:
            return M.form(M.t(x - n), M.t(y - n))
        return {}

    result = HermitianModule(
        A,
        space,
        BilinearMap.from_function(field, (A.space, space), space, action),
        BilinearMap.from_function(field, (space, space), A.space, form),
        f"{M.name}+V⊗A" if M.name else "V⊗A",
    )
    logger.debug("extended hermitian module to dimension %d", space.dim)
    return result
