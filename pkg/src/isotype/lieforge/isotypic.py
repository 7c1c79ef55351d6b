"""
Isotypic decompositions under a short SL₂ and under the SL₂×SL₂ of an idempotent.

Components are found from highest-weight vectors: the kernel of ad E inside a weight space,
then the span of its images under the lowering operators.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from isotype.errors import DecompositionError, GradingError, PreconditionError
from isotype.exactlinalg.echelon import Subspace, kernel, rank
from isotype.exactlinalg.scalars import Elem, Field
from isotype.exactlinalg.vectors import Sparse, add, add_into, scale, shift, sub, to_sparse
from isotype.jternary.split import split_T
from isotype.lieforge.algebra import LieAlgebra, Sl2Triple, ad_difference
from isotype.lieforge.assemble import (
    SL_BRACKET,
    SL_MATRICES,
    SL_NAMES,
    SL_TRACE,
    AssembledLie,
    E,
    F,
    H,
)
from isotype.models.report import CheckResult, VerificationReport
from isotype.sweep import EXHAUSTIVE, SweepOptions, check_value, run_sweep

logger = logging.getLogger(__name__)

Weight = tuple[int, ...]

SL2SL2_PATTERNS: dict[str, list[Weight]] = {
    "sl(V)xJ1": [(2, 0), (0, 0), (-2, 0)],
    "sl(V)xJ0": [(0, 2), (0, 0), (0, -2)],
    "sl(V)xJhalf+D(e,Jhalf)": [(1, 1), (1, -1), (-1, 1), (-1, -1)],
    "VxT1": [(1, 0), (-1, 0)],
    "VxT0": [(0, 1), (0, -1)],
    "S": [(0, 0)],
}
ALLOWED_WEIGHTS: list[Weight] = sorted({w for ws in SL2SL2_PATTERNS.values() for w in ws})


@dataclass
class IsotypicDecomposition:
    """
    Components of L tagged by module type, with their multiplicity spaces.

    Attributes:
        kind: "sl2" or "sl2xsl2"
        components: Tag → isotypic component as a subspace of L
        multiplicities: Multiplicity-space name → dimension
        checks: Closure, exhaustiveness and identity checks
    """

    kind: str
    components: dict[str, Subspace]
    multiplicities: dict[str, int]
    checks: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def dims(self) -> dict[str, int]:
        return {tag: s.dim for tag, s in self.components.items()}

    def report(self) -> VerificationReport:
        dims = {**self.multiplicities, **{f"dim {t}": d for t, d in self.dims.items()}}
        return VerificationReport.from_checks(
            f"decompose-{self.kind}", self.checks, dims=dims, notes=self.notes
        )


def _weight_space(L: LieAlgebra, acting: Sequence[Sparse], weight: Weight) -> list[Sparse]:
    """Joint kernel of ad hᵢ − wᵢ for the commuting elements hᵢ."""
    n = L.dim
    columns: list[Sparse] = [{} for _ in range(n)]
    for block, (h, w) in enumerate(zip(acting, weight, strict=True)):
        for i, col in enumerate(ad_difference(L, h, L.field(w))):
            columns[i].update(shift(col, block * n))
    return kernel(L.field, columns, n * len(acting))


def _highest(L: LieAlgebra, raising: Sequence[Sparse], space: Sequence[Sparse]) -> list[Sparse]:
    """Vectors of ``space`` killed by every raising element."""
    if not space:
        return []
    n = L.dim
    columns = []
    for v in space:
        col: Sparse = {}
        for block, e in enumerate(raising):
            col.update(shift(L.bracket(e, v), block * n))
        columns.append(col)
    out = []
    for c in kernel(L.field, columns, n * len(raising)):
        vec: Sparse = {}
        for k, coeff in c.items():
            add_into(vec, space[k], coeff)
        out.append(vec)
    return out


def _generate(L: LieAlgebra, seeds: Sequence[Sparse], lowering: Sequence[Sparse]) -> Subspace:
    """Span of the seeds under repeated ad of the lowering elements."""
    chosen: list[Sparse] = []
    current = Subspace(L.field, L.dim, [])
    queue = list(seeds)
    while queue:
        v = queue.pop(0)
        if current.contains(v):
            continue
        chosen.append(v)
        current = Subspace(L.field, L.dim, chosen)
        queue.extend(L.bracket(f, v) for f in lowering)
    return current


def _closure(
    name: str, L: LieAlgebra, component: Subspace, acting: Sequence[Sparse], options: SweepOptions
) -> CheckResult:
    def residual(key: tuple[int, ...]) -> bool:
        value = L.bracket(acting[key[0]], component.basis[key[1]])
        return bool(value) and not component.contains(value)

    return run_sweep(
        f"closed {name}",
        (len(acting), component.dim),
        residual,
        options=options,
    )


def _exhaustive(L: LieAlgebra, components: Mapping[str, Subspace]) -> CheckResult:
    basis = [b for s in components.values() for b in s.basis]
    total = sum(s.dim for s in components.values())
    ok = total == L.dim and rank(L.field, basis, L.dim) == L.dim
    return check_value("direct-sum-exhaustive", ok, note=f"{total} of {L.dim}")


def short_sl2_decompose(
    L: LieAlgebra, triple: Sl2Triple, options: SweepOptions = EXHAUSTIVE
) -> IsotypicDecomposition:
    """
    L = (sl₂ ⊗ J) ⊕ (V ⊗ T) ⊕ D under a short sl₂ triple.

    J is the span of the weight-2 vectors, T of the weight-1 vectors and D the weight-0 vectors
    killed by ad E.

    Raises:
        PreconditionError: not an sl₂ triple
        GradingError: ad H has weights outside −2 … 2
    """
    if not triple.check(L).passed:
        raise PreconditionError("not an sl2 triple")
    weights = {w: _weight_space(L, [triple.H], (w,)) for w in (-2, -1, 0, 1, 2)}
    total = sum(len(v) for v in weights.values())
    if total != L.dim:
        raise GradingError(f"ad H weights -2..2 cover {total} of {L.dim} dimensions; not short")
    j_seeds = weights[2]
    t_seeds = weights[1]
    d_seeds = _highest(L, [triple.E], weights[0])
    components = {
        "adjoint": _generate(L, j_seeds, [triple.F]),
        "natural": _generate(L, t_seeds, [triple.F]),
        "trivial": Subspace.spanned_by(L.field, L.dim, d_seeds),
    }
    nJ, nT, nD = len(j_seeds), len(t_seeds), len(d_seeds)
    acting = [triple.E, triple.H, triple.F]
    checks = [
        _exhaustive(L, components),
        check_value(
            "3J+2T+D = dim L", 3 * nJ + 2 * nT + nD == L.dim, note=f"3*{nJ}+2*{nT}+{nD}={L.dim}"
        ),
        check_value(
            "weight symmetry",
            len(weights[-2]) == nJ and len(weights[-1]) == nT and len(weights[0]) == nJ + nD,
        ),
        *(_closure(tag, L, s, acting, options) for tag, s in components.items()),
    ]
    logger.info("short sl2 decomposition: J=%d T=%d D=%d", nJ, nT, nD)
    return IsotypicDecomposition("sl2", components, {"J": nJ, "T": nT, "D": nD}, checks)


def _matrix(fld: Field, rows: tuple[tuple[int, int], tuple[int, int]]) -> list[list[Elem]]:
    return [[fld(x) for x in row] for row in rows]


def _mat_mul(A: list[list[Elem]], B: list[list[Elem]], zero: Elem) -> list[list[Elem]]:
    out = [[zero, zero], [zero, zero]]
    for r in range(2):
        for c in range(2):
            total = zero
            for m in range(2):
                total = total + A[r][m] * B[m][c]
            out[r][c] = total
    return out


def _equal_subspaces(A: Subspace, B: Subspace) -> bool:
    return A.dim == B.dim and A.contains_subspace(B)


def short_sl2sl2_decompose(
    assembled: AssembledLie, e: Mapping[int, Elem], options: SweepOptions = EXHAUSTIVE
) -> IsotypicDecomposition:
    """
    Six-component decomposition of L(J, T) under sl(V)⊗e ⊕ sl(V)⊗(1−e).

    Besides closure and exhaustiveness this identifies every component with its expected
    span, checks D_{e,a}(e) = −¼a on J_½, the module isomorphism f⊗a ↦ f, D_{e,a} ↦ ¼id, the
    bracket of sl(V)⊗e ⊕ sl(V)⊗(1−e) on sl(V)⊗a, the splitting D = 𝒮 ⊕ D_{e,J_½} with
    𝒮 = {D : D(e) = 0}, and the diagonal comparison with the short SL₂ decomposition.

    Args:
        assembled: Output of assemble_L
        e: Proper idempotent of J
        options: Sweep settings

    Returns:
        Decomposition with tags sl(V)xJ1, sl(V)xJ0, sl(V)xJhalf+D(e,Jhalf), VxT1, VxT0, S

    Raises:
        NotIdempotentError: e is not a proper idempotent
        DecompositionError: joint weights outside the six patterns
    """
    JT = assembled.jt
    L = assembled.algebra
    fld = L.field
    e = to_sparse(e)
    split = split_T(JT, e)
    peirce = split.peirce
    e_c = sub(JT.J.one, e)
    one_copy = Sl2Triple(*(assembled.sl_elem(f, e) for f in (E, H, F)))
    two_copy = Sl2Triple(*(assembled.sl_elem(f, e_c) for f in (E, H, F)))
    copies = [one_copy.E, one_copy.H, one_copy.F, two_copy.E, two_copy.H, two_copy.F]
    commute = all(not L.bracket(x, y) for x in copies[:3] for y in copies[3:])
    checks: list[CheckResult] = [
        one_copy.check(L).model_copy(update={"name": "sl2-triple e"}),
        two_copy.check(L).model_copy(update={"name": "sl2-triple 1-e"}),
        check_value("copies-commute", commute),
    ]
    if not commute:
        raise DecompositionError("sl(V)⊗e and sl(V)⊗(1-e) do not commute")

    H12 = [one_copy.H, two_copy.H]
    spaces = {w: _weight_space(L, H12, w) for w in ALLOWED_WEIGHTS}
    total = sum(len(v) for v in spaces.values())
    if total != L.dim:
        raise DecompositionError(
            f"joint weights in the six allowed patterns cover {total} of {L.dim} dimensions"
        )

    raising = [one_copy.E, two_copy.E]
    lowering = [one_copy.F, two_copy.F]
    trivial = _highest(L, raising, spaces[(0, 0)])
    components = {
        "sl(V)xJ1": _generate(L, spaces[(2, 0)], lowering),
        "sl(V)xJ0": _generate(L, spaces[(0, 2)], lowering),
        "sl(V)xJhalf+D(e,Jhalf)": _generate(L, spaces[(1, 1)], lowering),
        "VxT1": _generate(L, spaces[(1, 0)], lowering),
        "VxT0": _generate(L, spaces[(0, 1)], lowering),
        "S": Subspace.spanned_by(fld, L.dim, trivial),
    }
    mult = {
        "J1": len(spaces[(2, 0)]),
        "J0": len(spaces[(0, 2)]),
        "Jhalf": len(spaces[(1, 1)]),
        "T1": len(spaces[(1, 0)]),
        "T0": len(spaces[(0, 1)]),
        "S": len(trivial),
    }
    j1, jh, j0 = peirce.dims
    t1, t0 = split.dims
    checks.append(_exhaustive(L, components))
    checks.append(
        check_value(
            "multiplicities match split",
            (mult["J1"], mult["Jhalf"], mult["J0"], mult["T1"], mult["T0"]) == (j1, jh, j0, t1, t0),
            note=f"J1={j1} Jhalf={jh} J0={j0} T1={t1} T0={t0}",
        )
    )
    expected_dims = {
        "sl(V)xJ1": 3 * j1,
        "sl(V)xJ0": 3 * j0,
        "sl(V)xJhalf+D(e,Jhalf)": 4 * jh,
        "VxT1": 2 * t1,
        "VxT0": 2 * t0,
    }
    checks.append(
        check_value(
            "component-dims",
            all(components[t].dim == d for t, d in expected_dims.items()),
        )
    )
    checks.extend(_closure(tag, L, s, copies, options) for tag, s in components.items())

    # expected spans
    def sl_span(part: Subspace) -> Subspace:
        return Subspace(
            fld, L.dim, [assembled.sl_elem(f, a) for f in (E, H, F) for a in part.basis]
        )

    def v_span(part: Subspace) -> Subspace:
        return Subspace(fld, L.dim, [assembled.v_elem(u, x) for u in (0, 1) for x in part.basis])

    D_half = [assembled.D_elem(e, a) for a in peirce.half.basis]
    mixed = Subspace.spanned_by(fld, L.dim, sl_span(peirce.half).basis + D_half)
    d_off = 3 * assembled.nJ + 2 * assembled.nT
    images_of_e = [D.apply_sparse(e) for D in assembled.derivations]
    nJ = assembled.nJ
    fixing = kernel(fld, [{k: c for k, c in v.items() if k < nJ} for v in images_of_e], nJ)
    S_expected = Subspace(fld, L.dim, [shift(c, d_off) for c in fixing])
    for tag, expected in (
        ("sl(V)xJ1", sl_span(peirce.one)),
        ("sl(V)xJ0", sl_span(peirce.zero)),
        ("sl(V)xJhalf+D(e,Jhalf)", mixed),
        ("VxT1", v_span(split.one)),
        ("VxT0", v_span(split.zero)),
        ("S", S_expected),
    ):
        same = _equal_subspaces(components[tag], expected)
        checks.append(check_value(f"{tag} = expected span", same))
    D_half_coords = [{k - d_off: c for k, c in v.items()} for v in D_half]
    nD = assembled.nD
    checks.append(
        check_value(
            "D = S + D(e,Jhalf)",
            len(fixing) + jh == nD and rank(fld, fixing + D_half_coords, nD) == nD,
            note=f"dim S = {len(fixing)}, dim D(e,Jhalf) = {jh}, dim D = {nD}",
        )
    )

    quarter = fld(-1, 4)
    checks.append(
        run_sweep(
            "D(e,a)(e) = -a/4",
            (jh,),
            lambda key: sub(
                JT.J.D_apply(e, peirce.half.basis[key[0]], e),
                scale(peirce.half.basis[key[0]], quarter),
            ),
            labels=([f"Jhalf[{i}]" for i in range(jh)],),
        )
    )
    checks.append(_module_isomorphism(assembled, e, peirce.half.basis, D_half))
    checks.append(_bracket_formula(assembled, e, peirce.half.basis, D_half))
    checks.extend(split.checks)
    checks.extend(_diagonal(assembled, components, mult, options))
    notes = [
        "bracket of sl(V)⊗e ⊕ sl(V)⊗(1-e) on g⊗a compared with "
        "½[f1+f2,g]⊗a + 2tr((f1-f2)g)D(e,a); the factor ⊗a on the first term is required"
    ]
    logger.info("SL2xSL2 decomposition: %s", mult)
    return IsotypicDecomposition("sl2xsl2", components, mult, checks, notes)


def _phi(
    module: Subspace, images: Sequence[list[list[Elem]]], v: Sparse, zero: Elem
) -> list[list[Elem]] | None:
    """Linear map from the module basis to 2×2 matrices; None outside the module."""
    coords = module.coordinates(v)
    if coords is None:
        return None
    out = [[zero, zero], [zero, zero]]
    for k, c in coords.items():
        for r in range(2):
            for s in range(2):
                out[r][s] = out[r][s] + c * images[k][r][s]
    return out


def _module_isomorphism(
    assembled: AssembledLie, e: Sparse, half: Sequence[Sparse], D_half: Sequence[Sparse]
) -> CheckResult:
    """φ(f⊗a) = f, φ(D_{e,a}) = ¼id intertwines X⊗e with left and X⊗(1−e) with right action."""
    L = assembled.algebra
    fld = L.field
    zero = fld.zero
    e_c = sub(assembled.jt.J.one, e)
    mats = {f: _matrix(fld, SL_MATRICES[f]) for f in (E, H, F)}
    quarter = fld(1, 4)
    scalar = [[quarter, zero], [zero, quarter]]
    violations = 0
    checked = 0
    witness = None
    for idx, (a, Dea) in enumerate(zip(half, D_half, strict=True)):
        ys = [assembled.sl_elem(f, a) for f in (E, H, F)] + [Dea]
        phis = [mats[E], mats[H], mats[F], scalar]
        module = Subspace(fld, L.dim, ys)
        for X in (E, H, F):
            for y, phi_y in zip(ys, phis, strict=True):
                checked += 2
                left = _phi(module, phis, L.bracket(assembled.sl_elem(X, e), y), zero)
                right = _phi(module, phis, L.bracket(assembled.sl_elem(X, e_c), y), zero)
                want_right = [[-x for x in row] for row in _mat_mul(phi_y, mats[X], zero)]
                bad = int(left != _mat_mul(mats[X], phi_y, zero)) + int(right != want_right)
                if bad:
                    violations += bad
                    witness = witness or [SL_NAMES[X], f"Jhalf[{idx}]"]
    return CheckResult(
        name="phi-equivariant",
        passed=not violations,
        checked=checked,
        violations=violations,
        witness=witness,
    )


def _half_bracket(fld: Field, f1: int, f2: int, g: int, a: Sparse, nJ: int) -> Sparse:
    """½[f₁+f₂, g]⊗a."""
    out: Sparse = {}
    for f in (f1, f2):
        for h, c in SL_BRACKET.get((f, g), {}).items():
            add_into(out, shift(a, h * nJ), fld(c, 2))
    return out


def _bracket_formula(
    assembled: AssembledLie, e: Sparse, half: Sequence[Sparse], D_half: Sequence[Sparse]
) -> CheckResult:
    """[f₁⊗e + f₂⊗(1−e), g⊗a] = ½[f₁+f₂,g]⊗a + 2tr((f₁−f₂)g)D_{e,a} for basis f₁, f₂, g."""
    L = assembled.algebra
    fld = L.field
    e_c = sub(assembled.jt.J.one, e)
    violations = 0
    checked = 0
    witness = None
    for idx, (a, Dea) in enumerate(zip(half, D_half, strict=True)):
        for f1 in (E, H, F):
            for f2 in (E, H, F):
                for g in (E, H, F):
                    checked += 1
                    ga = assembled.sl_elem(g, a)
                    lhs = L.bracket(add(assembled.sl_elem(f1, e), assembled.sl_elem(f2, e_c)), ga)
                    rhs = _half_bracket(fld, f1, f2, g, a, assembled.nJ)
                    trace = SL_TRACE.get((f1, g), 0) - SL_TRACE.get((f2, g), 0)
                    if trace:
                        add_into(rhs, Dea, fld(2 * trace))
                    if lhs != rhs:
                        violations += 1
                        if witness is None:
                            witness = [SL_NAMES[f1], SL_NAMES[f2], SL_NAMES[g], f"Jhalf[{idx}]"]
    return CheckResult(
        name="sl(V)xe+sl(V)x(1-e) bracket formula",
        passed=not violations,
        checked=checked,
        violations=violations,
        witness=witness,
    )


def _diagonal(
    assembled: AssembledLie,
    components: Mapping[str, Subspace],
    mult: Mapping[str, int],
    options: SweepOptions,
) -> list[CheckResult]:
    """Compare with the short SL₂ decomposition of the diagonal copy sl(V)⊗1."""
    L = assembled.algebra
    diagonal = short_sl2_decompose(L, assembled.triple, options)
    adjoint = diagonal.components["adjoint"]
    natural = diagonal.components["natural"]
    trivial = diagonal.components["trivial"]
    m = diagonal.multiplicities
    same = (
        m["J"] == mult["J1"] + mult["Jhalf"] + mult["J0"]
        and m["T"] == mult["T1"] + mult["T0"]
        and m["D"] == mult["S"] + mult["Jhalf"]
    )
    adjoint_trivial = Subspace.spanned_by(L.field, L.dim, adjoint.basis + trivial.basis)
    contained = (
        adjoint.contains_subspace(components["sl(V)xJ1"])
        and adjoint.contains_subspace(components["sl(V)xJ0"])
        and natural.contains_subspace(components["VxT1"])
        and natural.contains_subspace(components["VxT0"])
        and trivial.contains_subspace(components["S"])
        and adjoint_trivial.contains_subspace(components["sl(V)xJhalf+D(e,Jhalf)"])
    )
    return [
        check_value("diagonal multiplicities", same, note=f"J={m['J']} T={m['T']} D={m['D']}"),
        check_value("diagonal containments", contained),
    ]
