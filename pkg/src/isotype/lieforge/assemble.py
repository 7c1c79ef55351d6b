"""
The Lie algebra L(J, T) = (sl(V)⊗J) ⊕ (V⊗T) ⊕ D with its inner SL₂-structure.

V has the symplectic basis p, q with (p|q) = 1 and sl(V) the basis E, H, F. Basis order of L:
E⊗a, H⊗a, F⊗a for every basis vector a of J, then p⊗x, q⊗x for every basis vector x of T, then
the chosen basis of D.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Literal

from isotype.errors import ClosureError, PreconditionError
from isotype.exactlinalg.echelon import Subspace, span_basis
from isotype.exactlinalg.maps import BilinearMap, LinearMap
from isotype.exactlinalg.scalars import Elem
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse, add_into, neg, restrict, shift, to_sparse
from isotype.jternary.algebra import JTernaryAlgebra, derivation_D, derived_d, inner_generators
from isotype.jternary.axioms import check_jt_axioms
from isotype.jternary.derivations import derivation_algebra
from isotype.lieforge.algebra import LieAlgebra, Sl2Triple
from isotype.models.report import CheckResult
from isotype.sweep import EXHAUSTIVE, SweepOptions

logger = logging.getLogger(__name__)

DerivationMode = Literal["inner", "full"]

SL_NAMES = ("E", "H", "F")
V_NAMES = ("p", "q")
E, H, F = 0, 1, 2
P, Q = 0, 1

# [f, g] in the basis E, H, F
SL_BRACKET: dict[tuple[int, int], dict[int, int]] = {
    (E, H): {E: -2},
    (E, F): {H: 1},
    (H, E): {E: 2},
    (H, F): {F: -2},
    (F, E): {H: -1},
    (F, H): {F: 2},
}
# tr(fg) of the 2×2 matrices
SL_TRACE: dict[tuple[int, int], int] = {(E, F): 1, (F, E): 1, (H, H): 2}
# f(u) for the natural action on V
SL_ACTION: dict[tuple[int, int], dict[int, int]] = {
    (E, Q): {P: 1},
    (H, P): {P: 1},
    (H, Q): {Q: -1},
    (F, P): {Q: 1},
}
# γ_{u,v}(w) = (u|w)v + (v|w)u
GAMMA: dict[tuple[int, int], dict[int, int]] = {
    (P, P): {E: 2},
    (Q, Q): {F: -2},
    (P, Q): {H: -1},
    (Q, P): {H: -1},
}
SYMPLECTIC: dict[tuple[int, int], int] = {(P, Q): 1, (Q, P): -1}

SL_MATRICES: dict[int, tuple[tuple[int, int], tuple[int, int]]] = {
    E: ((0, 1), (0, 0)),
    H: ((1, 0), (0, -1)),
    F: ((0, 0), (1, 0)),
}


def _matmul(
    A: tuple[tuple[int, int], tuple[int, int]], B: tuple[tuple[int, int], tuple[int, int]]
) -> list[list[int]]:
    return [[sum(A[r][m] * B[m][c] for m in range(2)) for c in range(2)] for r in range(2)]


def check_sl2_trace_identity() -> CheckResult:
    """fg + gf = tr(fg)·id on all basis pairs of sl(V)."""
    violations = 0
    for f in (E, H, F):
        for g in (E, H, F):
            fg = _matmul(SL_MATRICES[f], SL_MATRICES[g])
            gf = _matmul(SL_MATRICES[g], SL_MATRICES[f])
            trace = fg[0][0] + fg[1][1]
            if trace != SL_TRACE.get((f, g), 0):
                violations += 1
                continue
            for r in range(2):
                for c in range(2):
                    if fg[r][c] + gf[r][c] != (trace if r == c else 0):
                        violations += 1
    return CheckResult(
        name="fg+gf = tr(fg)id", passed=not violations, checked=9, violations=violations
    )


@dataclass(frozen=True, eq=False)
class AssembledLie:
    """
    L(J, T) together with the data it was built from.

    Attributes:
        algebra: The Lie algebra with component tags "sl(V)xJ", "VxT", "D"
        triple: E⊗1, H⊗1, F⊗1
        jt: Coordinatizing J-ternary algebra
        derivations: Basis of D as maps on J ⊕ T
        derivation_labels: Labels of that basis
        der_space: Span of the flattened derivations, for coordinates
        mode: "inner" (span of D_{a,b}, d_{x,y}) or "full" (Der(J, T))
        checks: Facts established during assembly
    """

    algebra: LieAlgebra
    triple: Sl2Triple
    jt: JTernaryAlgebra
    derivations: list[LinearMap]
    derivation_labels: list[str]
    der_space: Subspace
    mode: DerivationMode = "inner"
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def nJ(self) -> int:
        return self.jt.jdim

    @property
    def nT(self) -> int:
        return self.jt.tdim

    @property
    def nD(self) -> int:
        return len(self.derivations)

    @property
    def dims(self) -> dict[str, int]:
        return {"L": self.algebra.dim, "sl(V)xJ": 3 * self.nJ, "VxT": 2 * self.nT, "D": self.nD}

    def sl_index(self, f: int, a: int) -> int:
        return f * self.nJ + a

    def v_index(self, u: int, x: int) -> int:
        return 3 * self.nJ + u * self.nT + x

    def der_index(self, k: int) -> int:
        return 3 * self.nJ + 2 * self.nT + k

    def sl_elem(self, f: int, a: Mapping[int, Elem]) -> Sparse:
        """f⊗a for a ∈ J."""
        return shift(to_sparse(a), f * self.nJ)

    def v_elem(self, u: int, x: Mapping[int, Elem]) -> Sparse:
        """u⊗x for x ∈ T."""
        return shift(to_sparse(x), 3 * self.nJ + u * self.nT)

    def der_coordinates(self, D: LinearMap) -> Sparse | None:
        """Coordinates of an even map in the basis of D, or None outside D."""
        return self.der_space.coordinates(D.flatten())

    def der_elem(self, D: LinearMap) -> Sparse:
        coords = self.der_coordinates(D)
        if coords is None:
            raise ClosureError("map does not lie in the derivation part of L")
        return shift(coords, 3 * self.nJ + 2 * self.nT)

    def D_elem(self, a: Mapping[int, Elem], b: Mapping[int, Elem]) -> Sparse:
        """D_{a,b} as an element of L."""
        return self.der_elem(derivation_D(self.jt, a, b))

    def d_elem(self, x: Mapping[int, Elem], y: Mapping[int, Elem]) -> Sparse:
        return self.der_elem(derived_d(self.jt, x, y))

    def part(self, v: Mapping[int, Elem], which: str) -> Sparse:
        """Component of an element of L: "E", "H", "F" (in J), "p", "q" (in T) or "D"."""
        nJ, nT = self.nJ, self.nT
        if which in SL_NAMES:
            f = SL_NAMES.index(which)
            return restrict(v, f * nJ, (f + 1) * nJ)
        if which in V_NAMES:
            u = V_NAMES.index(which)
            start = 3 * nJ + u * nT
            return restrict(v, start, start + nT)
        start = 3 * nJ + 2 * nT
        return restrict(v, start, start + self.nD)


def _derivation_basis(
    JT: JTernaryAlgebra, mode: DerivationMode
) -> tuple[list[LinearMap], list[str], Subspace]:
    generators = inner_generators(JT)
    width = JT.sum_space.dim ** 2
    flats = [g.flatten() for _, g in generators]
    chosen = span_basis(JT.field, flats, width)
    maps = [generators[i][1] for i in chosen]
    labels = [generators[i][0] for i in chosen]
    logger.info("inner derivations: %d generators, dimension %d", len(generators), len(maps))
    if mode == "full":
        full = derivation_algebra(JT)
        full_flats = [m.flatten() for m in full]
        full_span = Subspace.spanned_by(JT.field, width, full_flats) if full_flats else None
        for label, m in zip(labels, maps, strict=True):
            if full_span is None or not full_span.contains(m.flatten()):
                raise ClosureError(f"inner derivation {label} is not a derivation of (J, T)")
        inner_count = len(maps)
        extended = span_basis(JT.field, [flats[i] for i in chosen] + full_flats, width)
        for idx in extended:
            if idx >= inner_count:
                maps.append(full[idx - inner_count])
                labels.append(f"Der[{len(labels)}]")
        logger.info("full derivations: dimension %d", len(maps))
    space = Subspace(JT.field, width, [m.flatten() for m in maps])
    return maps, labels, space


def assemble_L(
    JT: JTernaryAlgebra,
    derivations: DerivationMode = "inner",
    certify: bool = False,
    options: SweepOptions = EXHAUSTIVE,
) -> AssembledLie:
    """
    Build L(J, T) with the inner SL₂-structure bracket.

    [f⊗a, g⊗b] = [f,g]⊗a·b + 2tr(fg)D_{a,b}, [f⊗a, u⊗x] = f(u)⊗a•x,
    [u⊗x, v⊗y] = γ_{u,v}⊗⟨x|y⟩ + (u|v)d_{x,y}, and D acts on J and T through its action on J ⊕ T.

    Args:
        JT: J-ternary algebra
        derivations: "inner" for span{D_{a,b}, d_{x,y}}, "full" to use all of Der(J, T)
        certify: Run check_jt_axioms first and refuse uncertified input
        options: Sweep settings for the certification

    Returns:
        The assembled algebra with its distinguished sl₂ triple

    Raises:
        PreconditionError: certify is set and the JT axioms fail
        ClosureError: a D_{a,b} or d_{x,y} lies outside the derivation span, or certify is set
            and the span is not closed under the commutator
    """
    if certify:
        report = check_jt_axioms(JT, options)
        if not report.passed:
            raise PreconditionError(f"J-ternary axioms fail: {', '.join(report.failed_checks())}")
    fld = JT.field
    J = JT.J
    nJ, nT = JT.jdim, JT.tdim
    maps, der_labels, der_space = _derivation_basis(JT, derivations)
    nD = len(maps)
    d_off = 3 * nJ + 2 * nT
    const = {c: fld(c) for c in range(-2, 5) if c}

    def coords(m: LinearMap, what: str) -> Sparse:
        c = der_space.coordinates(m.flatten())
        if c is None:
            raise ClosureError(f"{what} lies outside the derivation span")
        return c

    D_table: dict[tuple[int, int], Sparse] = {}
    for i in range(nJ):
        for j in range(i + 1, nJ):
            c = coords(derivation_D(JT, J.basis(i), J.basis(j)), f"D[{i},{j}]")
            if c:
                D_table[(i, j)] = c
                D_table[(j, i)] = neg(c)
    d_table: dict[tuple[int, int], Sparse] = {}
    for x in range(nT):
        for y in range(x, nT):
            c = coords(derived_d(JT, JT.t(x), JT.t(y)), f"d[{x},{y}]")
            if c:
                d_table[(x, y)] = d_table[(y, x)] = c
    DD_table: dict[tuple[int, int], Sparse] = {}
    outside: list[tuple[str, str]] = []
    for k in range(nD):
        for m in range(k + 1, nD):
            c = der_space.coordinates(maps[k].commutator(maps[m]).flatten())
            if c is None:
                pair = (der_labels[k], der_labels[m])
                if certify:
                    raise ClosureError(f"[{pair[0]},{pair[1]}] lies outside the derivation span")
                outside.append(pair)
            elif c:
                DD_table[(k, m)] = c
                DD_table[(m, k)] = neg(c)

    def decode(i: int) -> tuple[str, int, int]:
        if i < 3 * nJ:
            return "sl", *divmod(i, nJ)
        if i < d_off:
            return "v", *divmod(i - 3 * nJ, nT)
        return "d", i - d_off, 0

    def sl_sl(f: int, a: int, g: int, b: int) -> Sparse:
        out: Sparse = {}
        ab = J.basis_mul(a, b)
        for h, c in SL_BRACKET.get((f, g), {}).items():
            add_into(out, shift(ab, h * nJ), const[c])
        t = SL_TRACE.get((f, g))
        if t and (a, b) in D_table:
            add_into(out, shift(D_table[(a, b)], d_off), const[2 * t])
        return out

    def sl_v(f: int, a: int, u: int, x: int) -> Sparse:
        out: Sparse = {}
        ax = JT.bullet.basis_image(a, x)
        for w, c in SL_ACTION.get((f, u), {}).items():
            add_into(out, shift(ax, 3 * nJ + w * nT), const[c])
        return out

    def v_v(u: int, x: int, w: int, y: int) -> Sparse:
        out: Sparse = {}
        xy = JT.skew.basis_image(x, y)
        for g, c in GAMMA.get((u, w), {}).items():
            add_into(out, shift(xy, g * nJ), const[c])
        s = SYMPLECTIC.get((u, w))
        if s and (x, y) in d_table:
            add_into(out, shift(d_table[(x, y)], d_off), const[s])
        return out

    def d_sl(k: int, f: int, a: int) -> Sparse:
        return shift(restrict(maps[k].image(a), 0, nJ), f * nJ)

    def d_v(k: int, u: int, x: int) -> Sparse:
        return shift(restrict(maps[k].image(nJ + x), nJ, nJ + nT), 3 * nJ + u * nT)

    def bracket(i: int, j: int) -> Sparse:
        ki, a1, b1 = decode(i)
        kj, a2, b2 = decode(j)
        match ki, kj:
            case "sl", "sl":
                return sl_sl(a1, b1, a2, b2)
            case "sl", "v":
                return sl_v(a1, b1, a2, b2)
            case "v", "sl":
                return neg(sl_v(a2, b2, a1, b1))
            case "v", "v":
                return v_v(a1, b1, a2, b2)
            case "d", "sl":
                return d_sl(a1, a2, b2)
            case "sl", "d":
                return neg(d_sl(a2, a1, b1))
            case "d", "v":
                return d_v(a1, a2, b2)
            case "v", "d":
                return neg(d_v(a2, a1, b1))
            case _:
                return shift(DD_table.get((a1, a2), {}), d_off)

    labels = (
        [f"{SL_NAMES[f]}⊗{J.labels[a]}" for f in range(3) for a in range(nJ)]
        + [f"{V_NAMES[u]}⊗{JT.T.labels[x]}" for u in range(2) for x in range(nT)]
        + der_labels
    )
    space = Space(tuple(labels), f"L({JT.name})" if JT.name else "L")
    product = BilinearMap.from_function(fld, (space, space), space, bracket)
    components = ("sl(V)xJ",) * (3 * nJ) + ("VxT",) * (2 * nT) + ("D",) * nD
    L = LieAlgebra(fld, space, product, None, space.name, components)
    one = J.one
    triple = Sl2Triple(shift(one, E * nJ), shift(one, H * nJ), shift(one, F * nJ))
    checks = [
        CheckResult(
            name="derivation-span-closed",
            passed=not outside,
            checked=nD * (nD - 1) // 2,
            violations=len(outside),
            witness=list(outside[0]) if outside else None,
            note=f"{derivations} derivations, dimension {nD}",
        ),
        check_sl2_trace_identity(),
        triple.check(L),
    ]
    logger.info("assembled %s: dims sl(V)xJ=%d VxT=%d D=%d", space.name, 3 * nJ, 2 * nT, nD)
    return AssembledLie(L, triple, JT, maps, der_labels, der_space, derivations, checks)
