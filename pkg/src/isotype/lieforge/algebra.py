"""Lie algebras by structure constants: Jacobi, Killing form, center and derived algebra."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass

from isotype.exactlinalg.algebra import StructureAlgebra
from isotype.exactlinalg.echelon import Subspace, kernel, rank
from isotype.exactlinalg.maps import BilinearMap, LinearMap
from isotype.exactlinalg.scalars import Elem
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse, add_into, shift, sub
from isotype.models.report import CheckResult, VerificationReport
from isotype.sweep import EXHAUSTIVE, SweepOptions, check_value, increasing, run_sweep

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LieAlgebra(StructureAlgebra):
    """
    A Lie algebra; ``product`` is the bracket.

    ``components`` optionally tags every basis vector with the summand it belongs to.
    """

    components: tuple[str, ...] = ()

    def bracket(self, a: Mapping[int, Elem], b: Mapping[int, Elem]) -> Sparse:
        return self.mul(a, b)

    def ad(self, a: Mapping[int, Elem]) -> LinearMap:
        return self.left(a)

    def component_dims(self) -> dict[str, int]:
        dims: dict[str, int] = {}
        for tag in self.components:
            dims[tag] = dims.get(tag, 0) + 1
        return dims


@dataclass(frozen=True)
class Sl2Triple:
    """Elements E, H, F of a Lie algebra."""

    E: Sparse
    H: Sparse
    F: Sparse

    def check(self, L: LieAlgebra) -> CheckResult:
        """[E,F] = H, [H,E] = 2E, [H,F] = −2F exactly."""
        two = L.field(2)
        ok = (
            L.bracket(self.E, self.F) == self.H
            and L.bracket(self.H, self.E) == {k: two * c for k, c in self.E.items()}
            and L.bracket(self.H, self.F) == {k: -two * c for k, c in self.F.items()}
            and bool(self.E)
        )
        return check_value("sl2-triple", ok)


def check_antisymmetry(L: LieAlgebra, options: SweepOptions = EXHAUSTIVE) -> CheckResult:
    def residual(key: tuple[int, ...]) -> Sparse:
        i, j = key
        if i == j:
            return L.basis_mul(i, i)
        out = dict(L.basis_mul(i, j))
        add_into(out, L.basis_mul(j, i))
        return out

    return run_sweep(
        "antisymmetry",
        (L.dim, L.dim),
        residual,
        labels=(L.labels, L.labels),
        predicate=lambda key: key[0] <= key[1],
        options=options,
    )


def _jacobi_residual(L: LieAlgebra, key: tuple[int, ...]) -> Sparse:
    i, j, k = key
    out = L.mul(L.basis_mul(i, j), L.basis(k))
    add_into(out, L.mul(L.basis_mul(j, k), L.basis(i)))
    add_into(out, L.mul(L.basis_mul(k, i), L.basis(j)))
    return out


def check_jacobi(L: LieAlgebra, options: SweepOptions = EXHAUSTIVE) -> VerificationReport:
    """
    Antisymmetry on basis pairs and the Jacobi identity on basis triples i < j < k.

    With antisymmetry in place, triples with a repeated index are automatic.

    Args:
        L: Lie algebra
        options: Sampling and parallelism settings

    Returns:
        Report with the triple count and the smallest failing triple, if any
    """
    n = L.dim
    logger.info("Jacobi sweep on %s (dim %d)", L.name or "algebra", n)
    checks = [
        check_antisymmetry(L, options),
        run_sweep(
            "jacobi",
            (n, n, n),
            lambda key: _jacobi_residual(L, key),
            labels=(L.labels,) * 3,
            predicate=increasing,
            options=options,
        ),
    ]
    return VerificationReport.from_checks("jacobi", checks, dims={"L": n, **L.component_dims()})


def killing_form(L: LieAlgebra) -> BilinearMap:
    """κ(x, y) = tr(ad x ∘ ad y) as a bilinear map into the one-dimensional space."""
    ads = [L.ad(L.basis(i)).columns for i in range(L.dim)]
    n = L.dim
    line = Space(("k",), "F")

    def value(i: int, j: int) -> Sparse:
        A, B = ads[i], ads[j]
        total = L.field.zero
        for k in range(n):
            for m, b in B.get(k, {}).items():
                a = A.get(m, {}).get(k)
                if a:
                    total = total + a * b
        return {0: total} if total else {}

    return BilinearMap.from_function(L.field, (L.space, L.space), line, value)


def killing_rank(L: LieAlgebra) -> int:
    kappa = killing_form(L)
    rows = [
        {j: kappa.basis_image(i, j).get(0) for j in range(L.dim) if kappa.basis_image(i, j)}
        for i in range(L.dim)
    ]
    return rank(L.field, rows, L.dim)


def center(L: LieAlgebra) -> Subspace:
    """{x ∈ L : [x, L] = 0}."""
    n = L.dim
    columns = []
    for i in range(n):
        col: Sparse = {}
        for j in range(n):
            col.update(shift(L.basis_mul(i, j), j * n))
        columns.append(col)
    return Subspace(L.field, n, kernel(L.field, columns, n * n))


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    """[L, L] as the span of all basis brackets."""
    n = L.dim
    generators = [L.basis_mul(i, j) for i in range(n) for j in range(i + 1, n)]
    return Subspace.spanned_by(L.field, n, [g for g in generators if g])


def structure_report(L: LieAlgebra) -> VerificationReport:
    """Killing form rank, center and derived algebra as a report."""
    n = L.dim
    r = killing_rank(L)
    z = center(L).dim
    d = derived_subalgebra(L).dim
    checks = [
        check_value("killing-nondegenerate", r == n, note=f"rank {r}"),
        check_value("center-zero", z == 0, note=f"dim {z}"),
        check_value("perfect", d == n, note=f"dim [L,L] = {d}"),
    ]
    dims = {"L": n, "killing_rank": r, "center": z, "derived": d}
    return VerificationReport.from_checks("structure", checks, dims=dims)


def ad_difference(L: LieAlgebra, x: Mapping[int, Elem], value: Elem) -> list[Sparse]:
    """Columns of ad x − value·id."""
    ad = L.ad(x).columns
    out = []
    for i in range(L.dim):
        col = dict(ad.get(i, {}))
        out.append(sub(col, {i: value}) if value else col)
    return out
