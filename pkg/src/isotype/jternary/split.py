"""Splitting T by a proper idempotent of J."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field

from isotype.errors import DecompositionError, NotIdempotentError
from isotype.exactlinalg.echelon import Subspace, eigenspace
from isotype.exactlinalg.scalars import Elem
from isotype.exactlinalg.vectors import Sparse, scale, sub, to_sparse
from isotype.jordan.peirce import (
    PeirceDecomposition,
    check_peirce_rules,
    is_idempotent,
    peirce_decompose,
)
from isotype.jternary.algebra import JTernaryAlgebra
from isotype.models.report import CheckResult, VerificationReport
from isotype.sweep import run_sweep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitT:
    """T = T₁ ⊕ T₀ with e•x = x on T₁ and e•x = 0 on T₀."""

    e: Sparse
    one: Subspace
    zero: Subspace
    peirce: PeirceDecomposition
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def dims(self) -> tuple[int, int]:
        return self.one.dim, self.zero.dim

    def report(self) -> VerificationReport:
        j1, jh, j0 = self.peirce.dims
        t1, t0 = self.dims
        dims = {"J1": j1, "Jhalf": jh, "J0": j0, "T1": t1, "T0": t0}
        return VerificationReport.from_checks("split", self.checks, dims=dims)


def split_T(JT: JTernaryAlgebra, e: Mapping[int, Elem]) -> SplitT:
    """
    Eigenspaces of x ↦ e•x together with the containments they force.

    Checks ⟨Tᵢ|Tᵢ⟩ ⊆ Jᵢ, ⟨T₁|T₀⟩ ⊆ J_½, d_{x,y} = 4D_{e,⟨x|y⟩} for x ∈ T₀ and y ∈ T₁, and the
    Peirce rules of J (including D_{J₁,J₀} = 0 and D_{e,J₁} = 0).

    Args:
        JT: J-ternary algebra
        e: Proper idempotent of J

    Returns:
        The split, with its checks attached

    Raises:
        NotIdempotentError: e is not a proper idempotent
        DecompositionError: T₁ ⊕ T₀ ≠ T
    """
    e = to_sparse(e)
    status = is_idempotent(JT.J, e)
    if not status.proper:
        raise NotIdempotentError("split_T needs a proper idempotent (e·e = e, e ≠ 0, 1)")
    field_ = JT.field
    n = JT.tdim
    columns = JT.bullet_operator(e).columns
    images = [columns.get(i, {}) for i in range(n)]
    t1 = Subspace(field_, n, eigenspace(field_, images, field_.one, n))
    t0 = Subspace(field_, n, eigenspace(field_, images, field_.zero, n))
    if t1.dim + t0.dim != n:
        raise DecompositionError(f"e•(-) eigenspaces have dims {t1.dim}+{t0.dim} != {n}")
    peirce = peirce_decompose(JT.J, e)
    logger.info("split of T: dims T1=%d T0=%d", t1.dim, t0.dim)

    def outside(target: Subspace, v: Sparse) -> bool:
        return not target.contains(v)

    sum_dim = JT.jdim + JT.tdim
    four = field_(4)

    def d_vs_D(key: tuple[int, ...]) -> Sparse:
        x, y = t0.basis[key[0]], t1.basis[key[1]]
        v = {key[2]: field_.one}
        return sub(JT.d_apply(x, y, v), scale(JT.D_apply(e, JT.pair(x, y), v), four))

    checks = [
        run_sweep(
            "<T1|T1> in J1",
            (t1.dim, t1.dim),
            lambda key: outside(peirce.one, JT.pair(t1.basis[key[0]], t1.basis[key[1]])),
        ),
        run_sweep(
            "<T0|T0> in J0",
            (t0.dim, t0.dim),
            lambda key: outside(peirce.zero, JT.pair(t0.basis[key[0]], t0.basis[key[1]])),
        ),
        run_sweep(
            "<T1|T0> in Jhalf",
            (t1.dim, t0.dim),
            lambda key: outside(peirce.half, JT.pair(t1.basis[key[0]], t0.basis[key[1]])),
        ),
        run_sweep(
            "d(T0,T1) = 4D(e,<T0|T1>)",
            (t0.dim, t1.dim, sum_dim),
            d_vs_D,
            labels=(
                [f"T0[{i}]" for i in range(t0.dim)],
                [f"T1[{i}]" for i in range(t1.dim)],
                JT.sum_space.labels,
            ),
        ),
        *check_peirce_rules(JT.J, peirce),
    ]
    return SplitT(e, t1, t0, peirce, checks)
