"""
The Kantor construction K(A) = S~ ⊕ A~ ⊕ Instrl(A) ⊕ A ⊕ S of a structurable algebra.

Brackets, for x, y ∈ A, s, t ∈ S and T ∈ Instrl, with T^ε = −V_{y,x} on T = V_{x,y}:

    [T,x] = T(x)                  [T,x~] = T^ε(x)~
    [T,s] = T(s) + s·conj(T(1))   [T,s~] = (T^ε(s) + s·conj(T^ε(1)))~
    [x,y] = 2(xȳ − yx̄)            [x~,y~] = 2(xȳ − yx̄)~
    [x,y~] = 2V_{x,y}             [s,t~] = L_sL_t
    [x,s~] = −(sx)~               [x~,s] = −sx

The signs of the last four kinds of bracket are confirmed against the Jacobi identity at build
time; the first vector of signs in the order (+,+,+,+), (+,+,+,−), … that passes is kept.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field as dc_field
from itertools import product

from isotype.catalog.involutive import InvolutiveAlgebra
from isotype.catalog.structurable import (
    InnerStructure,
    StructurableAlgebra,
    as_structurable,
    instrl,
)
from isotype.errors import ClosureError, StructureError
from isotype.exactlinalg.echelon import Subspace
from isotype.exactlinalg.maps import BilinearMap, LinearMap
from isotype.exactlinalg.scalars import Elem
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse, add, scale, shift, sub, to_sparse
from isotype.jternary.algebra import JTernaryAlgebra
from isotype.jternary.axioms import compare_jternary
from isotype.lieforge.algebra import LieAlgebra, check_jacobi
from isotype.lieforge.grading import Grading, jternary_from_5grading
from isotype.models.report import CheckResult
from isotype.sweep import EXHAUSTIVE, SweepOptions, check_value, run_sweep

logger = logging.getLogger(__name__)

PARTS = ("S~", "A~", "Instrl", "A", "S")
WEIGHTS = (-2, -1, 0, 1, 2)
SIGN_KINDS = ("[x~,y~]", "[s,t~]", "[x,s~]", "[x~,s]")

# A bracket entry: sign-kind index (None for fixed entries) and the image in L.
Term = tuple[int | None, Sparse]


@dataclass(frozen=True, eq=False)
class KantorAlgebra:
    """
    K(A) with its grading and the sign convention that was accepted.

    Basis order: S~, A~, Instrl, A, S; the S parts use the basis of ``A.skew``.
    """

    algebra: LieAlgebra
    structurable: StructurableAlgebra
    inner: InnerStructure
    grading: Grading
    signs: tuple[int, ...]
    checks: list[CheckResult] = dc_field(default_factory=list)

    @property
    def offsets(self) -> tuple[int, ...]:
        nS, nA, nI = self.structurable.skew.dim, self.structurable.dim, self.inner.dim
        return (0, nS, nS + nA, nS + nA + nI, nS + 2 * nA + nI)

    @property
    def dims(self) -> dict[str, int]:
        nS, nA, nI = self.structurable.skew.dim, self.structurable.dim, self.inner.dim
        return {"L": self.algebra.dim, "S~": nS, "A~": nA, "Instrl": nI, "A": nA, "S": nS}

    def _skew_coords(self, s: Mapping[int, Elem]) -> Sparse:
        coords = self.structurable.skew.coordinates(to_sparse(s))
        if coords is None:
            raise StructureError("element is not skew")
        return coords

    def s_tilde(self, s: Mapping[int, Elem]) -> Sparse:
        """s~ for a skew element s of A."""
        return shift(self._skew_coords(s), self.offsets[0])

    def a_tilde(self, x: Mapping[int, Elem]) -> Sparse:
        return shift(to_sparse(x), self.offsets[1])

    def inner_element(self, coords: Mapping[int, Elem]) -> Sparse:
        return shift(to_sparse(coords), self.offsets[2])

    def a(self, x: Mapping[int, Elem]) -> Sparse:
        return shift(to_sparse(x), self.offsets[3])

    def s(self, s: Mapping[int, Elem]) -> Sparse:
        return shift(self._skew_coords(s), self.offsets[4])


def _bracket_terms(
    A: StructurableAlgebra, inner: InnerStructure
) -> dict[tuple[int, int], list[Term]]:
    """Brackets of basis pairs (i, j) with i < j in the L basis, tagged with their sign kind."""
    S = A.skew
    nS, nA, nI = S.dim, A.dim, inner.dim
    o_st, o_at, o_i, o_a, o_s = 0, nS, nS + nA, nS + nA + nI, nS + 2 * nA + nI
    fld = A.field
    two = fld(2)
    unit = A.unit
    assert unit is not None

    def skew_coords(v: Sparse, what: str) -> Sparse:
        coords = S.coordinates(v)
        if coords is None:
            raise ClosureError(f"{what} is not skew")
        return coords

    def twisted(op: LinearMap, s: Sparse) -> Sparse:
        """T(s) + s·conj(T(1))."""
        return add(op.apply_sparse(s), A.mul(s, A.star(op.apply_sparse(unit))))

    terms: dict[tuple[int, int], list[Term]] = {}

    def put(i: int, j: int, kind: int | None, image: Sparse) -> None:
        if not image:
            return
        if i < j:
            terms.setdefault((i, j), []).append((kind, image))
        else:
            terms.setdefault((j, i), []).append((kind, scale(image, -fld.one)))

    ops = [inner.operator(k) for k in range(nI)]
    eps = [inner.epsilon(k) for k in range(nI)]
    for (k, l), coords in inner.brackets.items():
        put(o_i + k, o_i + l, None, shift(coords, o_i))
    for k in range(nI):
        for i in range(nA):
            put(o_i + k, o_a + i, None, shift(ops[k].image(i), o_a))
            put(o_i + k, o_at + i, None, shift(eps[k].image(i), o_at))
        for m, b in enumerate(S.basis):
            put(o_i + k, o_s + m, None, shift(skew_coords(twisted(ops[k], b), "[T,s]"), o_s))
            put(o_i + k, o_st + m, None, shift(skew_coords(twisted(eps[k], b), "[T,s~]"), o_st))

    for i in range(nA):
        x = A.basis(i)
        for j in range(i + 1, nA):
            y = A.basis(j)
            value = scale(sub(A.mul(x, A.star(y)), A.mul(y, A.star(x))), two)
            coords = skew_coords(value, "2(xy* - yx*)")
            put(o_a + i, o_a + j, None, shift(coords, o_s))
            put(o_at + i, o_at + j, 0, shift(coords, o_st))
        for j in range(nA):
            V = inner.require(A.V_table[(i, j)], f"V[{A.labels[i]},{A.labels[j]}]")
            put(o_a + i, o_at + j, None, shift(scale(V, two), o_i))

    lefts = [A.algebra.left(b) for b in S.basis]
    for m in range(nS):
        for p in range(nS):
            LsLt = inner.require(lefts[m].compose(lefts[p]), "L_sL_t")
            put(o_s + m, o_st + p, 1, shift(LsLt, o_i))
        for i in range(nA):
            sx = lefts[m].image(i)
            put(o_a + i, o_st + m, 2, shift(scale(sx, -fld.one), o_at))
            put(o_at + i, o_s + m, 3, shift(scale(sx, -fld.one), o_a))
    return terms


def _lie_algebra(
    A: StructurableAlgebra,
    space: Space,
    components: tuple[str, ...],
    terms: dict[tuple[int, int], list[Term]],
    signs: tuple[int, ...],
) -> LieAlgebra:
    fld = A.field
    table: dict[tuple[int, ...], Sparse] = {}
    for (i, j), entries in terms.items():
        acc: Sparse = {}
        for kind, image in entries:
            sign = fld.one if kind is None or signs[kind] > 0 else -fld.one
            acc = add(acc, scale(image, sign))
        if acc:
            table[(i, j)] = acc
            table[(j, i)] = scale(acc, -fld.one)
    product_map = BilinearMap(fld, (space, space), space, table)
    return LieAlgebra(fld, space, product_map, None, f"K({A.name})" if A.name else "K", components)


def kantor(
    A: InvolutiveAlgebra, options: SweepOptions = EXHAUSTIVE, sign_sample: int = 2000
) -> KantorAlgebra:
    """
    The 5-graded Lie algebra K(A).

    Args:
        A: Structurable algebra
        options: Settings for the sign-locking Jacobi sweep (threads, seed)
        sign_sample: Number of sampled Jacobi triples per sign candidate

    Returns:
        The Kantor algebra; callers certify it with :func:`check_jacobi`

    Raises:
        ClosureError: an Instrl bracket leaves Instrl
        StructureError: no sign convention passes the Jacobi check
    """
    SA = as_structurable(A)
    inner = instrl(SA)
    S = SA.skew
    nS, nA, nI = S.dim, SA.dim, inner.dim
    s_labels, a_labels = SA.skew_labels(), SA.labels
    labels = (
        tuple(f"S~:{x}" for x in s_labels)
        + tuple(f"A~:{x}" for x in a_labels)
        + inner.labels
        + tuple(f"A:{x}" for x in a_labels)
        + tuple(f"S:{x}" for x in s_labels)
    )
    space = Space(labels, f"K({SA.name})" if SA.name else "K")
    sizes = (nS, nA, nI, nA, nS)
    components = tuple(tag for tag, size in zip(PARTS, sizes, strict=True) for _ in range(size))
    terms = _bracket_terms(SA, inner)

    unit = SA.unit
    assert unit is not None
    identity = inner.require(LinearMap.identity(SA.field, SA.space), "id")
    o_at, o_i, o_a = nS, nS + nA, nS + nA + nI
    expected = shift(scale(identity, SA.field(2)), o_i)
    sampled = SweepOptions(sample=sign_sample, seed=options.seed, threads=options.threads)

    chosen: LieAlgebra | None = None
    signs: tuple[int, ...] = ()
    for candidate in product((1, -1), repeat=len(SIGN_KINDS)):
        L = _lie_algebra(SA, space, components, terms, candidate)
        if check_jacobi(L, sampled).passed:
            chosen, signs = L, candidate
            break
        logger.debug("sign convention %s fails sampled Jacobi", candidate)
    if chosen is None:
        raise StructureError(f"no sign convention makes K({SA.name}) a Lie algebra")
    logger.info(
        "K(%s): dim %d, signs %s",
        SA.name,
        chosen.dim,
        dict(zip(SIGN_KINDS, signs, strict=True)),
    )

    start = 0
    pieces: dict[int | tuple[int, ...], Subspace] = {}
    for weight, size in zip(WEIGHTS, sizes, strict=True):
        if size:
            basis = [{start + k: SA.field.one} for k in range(size)]
            pieces[weight] = Subspace(SA.field, chosen.dim, basis)
        start += size

    half = SA.field(1, 2)
    lefts = [SA.algebra.left(b) for b in S.basis]

    def ls_lt(key: tuple[int, ...]) -> bool:
        s, t = S.basis[key[0]], S.basis[key[1]]
        via_v = SA.V(SA.mul(s, t), unit) - SA.V(s, t)
        return lefts[key[0]].compose(lefts[key[1]]) != via_v.scaled(half)

    note = ", ".join(
        f"{kind} {'+' if sign > 0 else '-'}" for kind, sign in zip(SIGN_KINDS, signs, strict=True)
    )
    checks = [
        check_value(
            "[1,1~] = 2id",
            chosen.bracket(shift(unit, o_a), shift(unit, o_at)) == expected,
            note="1 in A, 1~ in A~",
        ),
        run_sweep("LsLt = (V[st,1] - V[s,t])/2", (nS, nS), ls_lt, labels=(s_labels, s_labels)),
        check_value("sign-convention", True, note=note, informational=True),
    ]
    return KantorAlgebra(chosen, SA, inner, Grading(pieces), signs, checks)


def sl2_candidate(
    K: KantorAlgebra, s: Mapping[int, Elem], s_prime: Mapping[int, Elem]
) -> tuple[Sparse, Sparse]:
    """E = s′ in L₂ and F = s~ in L₋₂."""
    return K.s(s_prime), K.s_tilde(s)


def check_against_5grading(
    K: KantorAlgebra, JT: JTernaryAlgebra, s: Mapping[int, Elem], s_prime: Mapping[int, Elem]
) -> list[CheckResult]:
    """
    Compare a J-ternary algebra on (S, A) with the one read off the grading of K by (s′, s~).
    """
    E, F = sl2_candidate(K, s, s_prime)
    extracted = jternary_from_5grading(K.algebra, E, F)
    return [
        result.model_copy(update={"name": f"5grading {result.name}"})
        for result in compare_jternary(JT, extracted)
    ]
