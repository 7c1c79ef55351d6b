"""Idempotents and the Peirce decomposition J = J₁ ⊕ J_½ ⊕ J₀."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass

from isotype.errors import DecompositionError, NotIdempotentError
from isotype.exactlinalg.echelon import Subspace, eigenspace
from isotype.exactlinalg.scalars import Elem
from isotype.exactlinalg.vectors import Sparse, sub, to_sparse
from isotype.jordan.algebra import JordanAlgebra
from isotype.models.report import CheckResult
from isotype.sweep import run_sweep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdempotentCheck:
    """Result of :func:`is_idempotent`."""

    idempotent: bool
    proper: bool
    complement: Sparse  # 1 - e


def is_idempotent(J: JordanAlgebra, e: Mapping[int, Elem]) -> IdempotentCheck:
    """
    Test e·e = e exactly and whether e is proper (e ≠ 0, e ≠ 1).

    Args:
        J: Jordan algebra
        e: Candidate element (sparse or dense)

    Returns:
        Idempotency, properness and the complementary element 1 - e
    """
    e = to_sparse(e)
    complement = sub(J.one, e)
    idempotent = J.mul(e, e) == e
    proper = bool(e) and bool(complement)
    return IdempotentCheck(idempotent, idempotent and proper, complement)


@dataclass(frozen=True)
class PeirceDecomposition:
    """Eigenspaces of L_e for the eigenvalues 1, ½ and 0."""

    e: Sparse
    one: Subspace
    half: Subspace
    zero: Subspace

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.one.dim, self.half.dim, self.zero.dim

    def part(self, which: str) -> Subspace:
        return {"1": self.one, "1/2": self.half, "0": self.zero}[which]


def peirce_decompose(J: JordanAlgebra, e: Mapping[int, Elem]) -> PeirceDecomposition:
    """
    Peirce decomposition relative to an idempotent.

    Raises:
        NotIdempotentError: e·e ≠ e
        DecompositionError: the three eigenspaces do not exhaust J
    """
    e = to_sparse(e)
    if not is_idempotent(J, e).idempotent:
        raise NotIdempotentError("element is not an idempotent")
    columns = J.left(e).columns
    field = J.field
    n = J.dim
    spaces = [
        Subspace(field, n, eigenspace(field, [columns.get(i, {}) for i in range(n)], value, n))
        for value in (field.one, field(1, 2), field.zero)
    ]
    total = sum(s.dim for s in spaces)
    if total != n:
        raise DecompositionError(
            f"Peirce spaces have dimensions {[s.dim for s in spaces]}, summing to {total} != {n}"
        )
    logger.info("Peirce dimensions %s", [s.dim for s in spaces])
    return PeirceDecomposition(e, *spaces)


def check_peirce_rules(J: JordanAlgebra, peirce: PeirceDecomposition) -> list[CheckResult]:
    """
    Multiplication rules of the Peirce spaces and the vanishing of D_{J₁,J₀} and D_{e,J₁}.
    """
    one, half, zero = peirce.one, peirce.half, peirce.zero
    e = peirce.e
    products = [
        ("J1*J0=0", one, zero, None),
        ("J1*J1<=J1", one, one, one),
        ("J0*J0<=J0", zero, zero, zero),
        ("J1*Jhalf<=Jhalf", one, half, half),
        ("J0*Jhalf<=Jhalf", zero, half, half),
    ]
    checks = []
    for name, left, right, target in products:
        checks.append(
            run_sweep(
                name,
                (left.dim, right.dim),
                lambda key, left=left, right=right, target=target: _outside(
                    J.mul(left.basis[key[0]], right.basis[key[1]]), target
                ),
            )
        )
    checks.append(
        run_sweep(
            "D(J1,J0)=0",
            (one.dim, zero.dim, J.dim),
            lambda key: J.D_apply(one.basis[key[0]], zero.basis[key[1]], J.basis(key[2])),
            labels=(_names("J1", one.dim), _names("J0", zero.dim), J.labels),
        )
    )
    checks.append(
        run_sweep(
            "D(e,J1)=0",
            (one.dim, J.dim),
            lambda key: J.D_apply(e, one.basis[key[0]], J.basis(key[1])),
            labels=(_names("J1", one.dim), J.labels),
        )
    )
    return checks


def _outside(v: Sparse, target: Subspace | None) -> bool:
    if target is None:
        return bool(v)
    return not target.contains(v)


def _names(prefix: str, count: int) -> list[str]:
    return [f"{prefix}[{i}]" for i in range(count)]
