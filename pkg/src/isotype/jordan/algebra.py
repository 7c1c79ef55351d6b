"""Jordan algebras, the Jordan identity check and inner derivations D_{a,b}."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from itertools import permutations

from isotype.errors import PreconditionError
from isotype.exactlinalg.algebra import StructureAlgebra
from isotype.exactlinalg.maps import LinearMap
from isotype.exactlinalg.scalars import Elem
from isotype.exactlinalg.vectors import Sparse, add_into, sub, to_sparse
from isotype.models.report import CheckResult, VerificationReport
from isotype.sweep import EXHAUSTIVE, SweepOptions, nondecreasing, run_sweep

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class JordanAlgebra(StructureAlgebra):
    """A unital commutative algebra; the Jordan identity is certified by :func:`check_jordan`."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.unit is None:
            raise PreconditionError(f"Jordan algebra {self.name!r} needs a unit element")

    @property
    def one(self) -> Sparse:
        assert self.unit is not None
        return self.unit

    @classmethod
    def from_algebra(cls, algebra: StructureAlgebra) -> "JordanAlgebra":
        return cls(algebra.field, algebra.space, algebra.product, algebra.unit, algebra.name)

    def D_apply(
        self, a: Mapping[int, Elem], b: Mapping[int, Elem], c: Mapping[int, Elem]
    ) -> Sparse:
        """D_{a,b}(c) = a·(b·c) - b·(a·c)."""
        return sub(self.mul(a, self.mul(b, c)), self.mul(b, self.mul(a, c)))

    def D(self, a: Mapping[int, Elem], b: Mapping[int, Elem]) -> LinearMap:
        return LinearMap.from_function(
            self.field, self.space, self.space, lambda j: self.D_apply(a, b, self.basis(j))
        )


def inner_derivation_D(
    J: JordanAlgebra, a: Mapping[int, Elem], b: Mapping[int, Elem]
) -> LinearMap:
    """
    Inner derivation of a Jordan algebra.

    Args:
        J: Jordan algebra
        a: First argument (sparse or dense)
        b: Second argument (sparse or dense)

    Returns:
        The map c ↦ a·(b·c) - b·(a·c) on J
    """
    return J.D(to_sparse(a), to_sparse(b))


def _jordan_residual(J: StructureAlgebra, key: tuple[int, ...]) -> Sparse:
    i, j, k, l = key
    xs = (J.basis(i), J.basis(j), J.basis(k))
    y = J.basis(l)
    acc: Sparse = {}
    for p, q, r in permutations(range(3)):
        pair = J.mul(xs[p], xs[q])
        add_into(acc, J.mul(J.mul(pair, y), xs[r]))
        add_into(acc, J.mul(pair, J.mul(y, xs[r])), -J.field.one)
    return acc


def check_jordan(J: StructureAlgebra, options: SweepOptions = EXHAUSTIVE) -> VerificationReport:
    """
    Certify a commutative product as Jordan.

    Commutativity is checked on basis pairs; the Jordan identity (x²·y)·x = x²·(y·x) through its
    full linearization over the three x-slots, on basis quadruples with nondecreasing x-indices.
    """
    labels = J.labels
    n = J.dim
    commutative = run_sweep(
        "commutativity",
        (n, n),
        lambda key: J.commutator(J.basis(key[0]), J.basis(key[1])),
        labels=(labels, labels),
        predicate=lambda key: key[0] < key[1],
        options=options,
    )
    identity = run_sweep(
        "jordan-identity",
        (n, n, n, n),
        lambda key: _jordan_residual(J, key),
        labels=(labels,) * 4,
        predicate=lambda key: key[0] <= key[1] <= key[2],
        options=options,
    )
    checks = [commutative, identity]
    if J.unit is not None:
        unit = J.unit
        checks.append(
            run_sweep(
                "unit",
                (n,),
                lambda key: sub(J.mul(unit, J.basis(key[0])), J.basis(key[0])),
                labels=(labels,),
            )
        )
    logger.info("jordan check on %s (dim %d)", J.name or "algebra", n)
    return VerificationReport.from_checks("jordan", checks, dims={"J": n})


def check_inner_derivations(
    J: JordanAlgebra, options: SweepOptions = EXHAUSTIVE
) -> list[CheckResult]:
    """
    D_{a·b,c} + D_{b·c,a} + D_{c·a,b} = 0 and the derivation rule for D_{a,b}, on basis tuples.
    """
    n = J.dim
    labels = J.labels

    def cyclic(key: tuple[int, ...]) -> Sparse:
        a, b, c, d = (J.basis(i) for i in key)
        acc = J.D_apply(J.mul(a, b), c, d)
        add_into(acc, J.D_apply(J.mul(b, c), a, d))
        add_into(acc, J.D_apply(J.mul(c, a), b, d))
        return acc

    def derivation(key: tuple[int, ...]) -> Sparse:
        a, b, x, y = (J.basis(i) for i in key)
        lhs = J.D_apply(a, b, J.mul(x, y))
        rhs = J.mul(J.D_apply(a, b, x), y)
        add_into(rhs, J.mul(x, J.D_apply(a, b, y)))
        return sub(lhs, rhs)

    return [
        run_sweep(
            "D-cyclic",
            (n, n, n, n),
            cyclic,
            labels=(labels,) * 4,
            predicate=lambda key: nondecreasing(key[:3]),
            options=options,
        ),
        run_sweep(
            "D-derivation",
            (n, n, n, n),
            derivation,
            labels=(labels,) * 4,
            predicate=lambda key: key[0] < key[1] and key[2] <= key[3],
            options=options,
        ),
    ]

