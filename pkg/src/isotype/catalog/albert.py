"""
Albert form data of A = C₁⊗C₂ and the quadratic-factor check for the Jordan algebra on S.

For a reference s ∈ S₁ with ν₁(s) ≠ 0: Q(s₁+s₂) = (ν₁(s₁) − ν₂(s₂))/ν₁(s), (s₁+s₂)♯ = ν₁(s)(s₁−s₂),
c = −s/ν₁(s) and Q̃ = ν₁(s)²Q. In the orthogonal catalog basis Q and ♯ are diagonal.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property

from isotype.catalog.structurable import TensorStructurable
from isotype.errors import PreconditionError
from isotype.exactlinalg.echelon import Subspace, null_space
from isotype.exactlinalg.scalars import Elem, Field
from isotype.exactlinalg.vectors import Sparse, add, add_into, scale, sub, to_sparse
from isotype.jternary.algebra import JTernaryAlgebra
from isotype.models.report import VerificationReport
from isotype.sweep import EXHAUSTIVE, SweepOptions, check_value, run_sweep

logger = logging.getLogger(__name__)

Vec = Mapping[int, Elem]

PRINTED_LAW_NOTE = "printed form a·a = Q(a,c)c - Q(a)c, recorded only"


@dataclass(frozen=True, eq=False)
class AlbertData:
    """
    Q, ♯ and c on S, all in the coordinates of ``A.skew`` (S₁⊗1 first, then 1⊗S₂).

    Attributes:
        A: The structurable algebra C₁⊗C₂
        s: Reference skew element, as a vector of A
        nu1_s: ν₁(s)
        q: Diagonal of Q: Q(a) = Σ q[k]·a_k²
        sharp: Diagonal of ♯
        c: Basepoint −s/ν₁(s)
    """

    A: TensorStructurable
    s: Sparse
    nu1_s: Elem
    q: tuple[Elem, ...]
    sharp: tuple[Elem, ...]
    c: Sparse

    @property
    def field(self) -> Field:
        return self.A.field

    @property
    def dim(self) -> int:
        return len(self.q)

    @property
    def normalization(self) -> Elem:
        """ν₁(s)², the factor between Q̃ and Q."""
        return self.nu1_s * self.nu1_s

    def Q(self, a: Vec) -> Elem:
        total = self.field.zero
        for k, x in a.items():
            total = total + self.q[k] * x * x
        return total

    def Q_polar(self, a: Vec, b: Vec) -> Elem:
        """Q(a+b) − Q(a) − Q(b)."""
        total = self.field.zero
        for k, x in a.items():
            y = b.get(k)
            if y:
                total = total + self.q[k] * x * y
        return total + total

    def Q_tilde(self, a: Vec) -> Elem:
        return self.normalization * self.Q(a)

    def Q_tilde_polar(self, a: Vec, b: Vec) -> Elem:
        return self.normalization * self.Q_polar(a, b)

    def sharp_apply(self, a: Vec) -> Sparse:
        return {k: self.sharp[k] * x for k, x in a.items() if x}

    @cached_property
    def c_perp(self) -> Subspace:
        """(𝔽c)^⊥ with respect to Q̃."""
        row = {k: self.q[k] * x for k, x in self.c.items() if x}
        return Subspace(self.field, self.dim, null_space(self.field, [row], self.dim))


def albert_data(A: TensorStructurable, s: Vec) -> AlbertData:
    """
    Albert form data for a reference element s = s₁⊗1 of S₁.

    Raises:
        PreconditionError: s is not in S₁⊗1, or ν₁(s) = 0
    """
    C1, C2 = A.first, A.second
    m = C2.dim
    s = to_sparse(s)
    if any(k % m or k == 0 for k in s):
        raise PreconditionError("reference element must lie in S1⊗1")
    s1 = {k // m: x for k, x in s.items()}
    nu1_s = C1.nu(s1)
    if not nu1_s:
        raise PreconditionError("reference element has nu1(s) = 0")
    field = A.field
    q = tuple(C1.norm[i] / nu1_s for i in range(1, C1.dim)) + tuple(
        -C2.norm[j] / nu1_s for j in range(1, m)
    )
    sharp = (nu1_s,) * A.s1_dim + (-nu1_s,) * (m - 1)
    c = A.skew.coordinates(scale(s, -field.one / nu1_s))
    assert c is not None
    logger.info("Albert form on S (dim %d) with nu1(s) = %s", len(q), nu1_s)
    return AlbertData(A, s, nu1_s, q, sharp, c)


def verify_quadratic_factor(
    data: AlbertData, JT: JTernaryAlgebra, options: SweepOptions = EXHAUSTIVE
) -> VerificationReport:
    """
    Check that the Jordan algebra of (S, A) is the quadratic factor of (Q̃, c).

    Normative: 2a·b = Q̃(a,c)b + Q̃(b,c)a − Q̃(a,b)c on basis pairs (the polarized law
    a·a = Q̃(a,c)a − Q̃(a)c), c is the unit, Q̃(c) = 1, Q(s) = 1, Q nondegenerate, a♯♯ = ν₁(s)²a
    and the Clifford action a•(b•x) + b•(a•x) = −Q̃(a,b)x for a, b ⊥ c. The printed law
    a·a = Q(a,c)c − Q(a)c is evaluated as an informational check.
    """
    J = JT.J
    field = data.field
    n = data.dim
    if J.dim != n:
        raise PreconditionError(f"Jordan algebra has dim {J.dim}, Albert form lives on dim {n}")
    labels = J.labels
    c = data.c
    two = field(2)

    def e(k: int) -> Sparse:
        return {k: field.one}

    def polarized(key: tuple[int, ...]) -> Sparse:
        a, b = e(key[0]), e(key[1])
        expected = scale(b, data.Q_tilde_polar(a, c))
        add_into(expected, a, data.Q_tilde_polar(b, c))
        add_into(expected, c, -data.Q_tilde_polar(a, b))
        return sub(scale(J.mul(a, b), two), expected)

    def printed(key: tuple[int, ...]) -> Sparse:
        a = e(key[0])
        expected = scale(c, data.Q_polar(a, c) - data.Q(a))
        return sub(J.mul(a, a), expected)

    def unit_law(key: tuple[int, ...]) -> Sparse:
        return sub(J.mul(c, e(key[0])), e(key[0]))

    def sharp_twice(key: tuple[int, ...]) -> Sparse:
        a = e(key[0])
        return sub(data.sharp_apply(data.sharp_apply(a)), scale(a, data.normalization))

    perp = data.c_perp
    perp_labels = perp.basis_labels(labels, "perp")
    t_labels = JT.T.labels

    def clifford(key: tuple[int, ...]) -> Sparse:
        a, b = perp.basis[key[0]], perp.basis[key[1]]
        x = JT.t(key[2])
        lhs = JT.act(a, JT.act(b, x))
        add_into(lhs, JT.act(b, JT.act(a, x)))
        return add(lhs, scale(x, data.Q_tilde_polar(a, b)))

    s_coords = data.A.skew.coordinates(data.s)
    assert s_coords is not None
    checks = [
        check_value("unit-is-c", J.unit == c),
        run_sweep("c·a = a", (n,), unit_law, labels=(labels,)),
        check_value("Q~(c) = 1", data.Q_tilde(c) == field.one),
        check_value("Q(s) = 1", data.Q(s_coords) == field.one),
        check_value("Q-nondegenerate", all(data.q)),
        run_sweep("sharp-twice", (n,), sharp_twice, labels=(labels,)),
        run_sweep(
            "quadratic-factor-law",
            (n, n),
            polarized,
            labels=(labels, labels),
            predicate=lambda key: key[0] <= key[1],
            options=options,
        ),
        run_sweep(
            "printed-law",
            (n,),
            printed,
            labels=(labels,),
            informational=True,
            note=PRINTED_LAW_NOTE,
        ),
        run_sweep(
            "clifford-action",
            (perp.dim, perp.dim, JT.tdim),
            clifford,
            labels=(perp_labels, perp_labels, t_labels),
            predicate=lambda key: key[0] <= key[1],
            options=options,
        ),
    ]
    notes = [f"Q~ = nu1(s)^2 Q with nu1(s) = {data.nu1_s}"]
    dims = {"S": n, "A": JT.tdim, "c-perp": perp.dim}
    return VerificationReport.from_checks("quadratic-factor", checks, dims=dims, notes=notes)
