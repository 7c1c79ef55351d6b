"""Exact elimination on top of sympy's sparse DomainMatrix.

All pivots are leftmost; ties between equal rows are broken by input order because the first
occurrence claims the pivot. Results are therefore independent of anything but the input.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from isotype.errors import DimensionMismatchError, InconsistentSystemError
from isotype.exactlinalg.scalars import QQ_FIELD, Elem, Field
from isotype.exactlinalg.vectors import Sparse, Vector, add_into, to_dense, to_sparse

logger = logging.getLogger(__name__)


def _domain_matrix(field: Field, rows: Sequence[Mapping[int, Elem]], ncols: int) -> DomainMatrix:
    data = {i: {j: c for j, c in row.items() if c} for i, row in enumerate(rows)}
    data = {i: row for i, row in data.items() if row}
    return DomainMatrix(data, (len(rows), ncols), field.domain)


def _sparse_rows(M: DomainMatrix) -> dict[int, Sparse]:
    return {i: dict(row) for i, row in M.to_sparse().rep.items() if row}


def rref(
    field: Field, rows: Sequence[Mapping[int, Elem]], ncols: int
) -> tuple[list[Sparse], tuple[int, ...]]:
    """
    Reduced row echelon form.

    Args:
        field: Ground field
        rows: Sparse rows
        ncols: Row length

    Returns:
        Nonzero RREF rows (pivot order) and their pivot columns
    """
    if not rows or ncols == 0 or not any(rows):
        return [], ()
    R, pivots = _domain_matrix(field, rows, ncols).rref()
    by_row = _sparse_rows(R)
    return [by_row.get(r, {}) for r in range(len(pivots))], tuple(pivots)


def _transpose(columns: Sequence[Mapping[int, Elem]]) -> dict[int, Sparse]:
    rows: dict[int, Sparse] = {}
    for c, image in enumerate(columns):
        for r, v in image.items():
            if v:
                rows.setdefault(r, {})[c] = v
    return rows


def kernel(field: Field, columns: Sequence[Mapping[int, Elem]], nrows: int) -> list[Sparse]:
    """
    Null space of the matrix whose i-th column is ``columns[i]``.

    The basis is the free-variable one: vector f has a 1 at free column f and zeros at every
    other free column.
    """
    ncols = len(columns)
    if ncols == 0:
        return []
    by_row = _transpose(columns)
    return null_space(field, [by_row.get(r, {}) for r in range(nrows)], ncols)


def null_space(field: Field, rows: Sequence[Mapping[int, Elem]], ncols: int) -> list[Sparse]:
    """Solutions v of rows·v = 0 in free-variable form, one per non-pivot column."""
    R, pivots = rref(field, rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec: Sparse = {f: field.one}
        for row, p in zip(R, pivots, strict=True):
            c = row.get(f)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis


def span_basis(field: Field, vectors: Sequence[Mapping[int, Elem]], width: int) -> list[int]:
    """Indices of the first independent subset of ``vectors`` (the pivot generators)."""
    if not vectors:
        return []
    by_row = _transpose(vectors)
    if not by_row:
        return []
    rows = [by_row.get(r, {}) for r in range(width)]
    _, pivots = rref(field, rows, len(vectors))
    return list(pivots)


def rank(field: Field, vectors: Sequence[Mapping[int, Elem]], width: int) -> int:
    return len(rref(field, list(vectors), width)[1])


def inverse(field: Field, rows: Sequence[Mapping[int, Elem]], n: int) -> list[Sparse]:
    """
    Rows of the inverse of a square matrix, by reducing [M | I].

    Raises:
        InconsistentSystemError: the matrix is singular
    """
    augmented = [dict(to_sparse(row)) | {n + i: field.one} for i, row in enumerate(rows)]
    R, pivots = rref(field, augmented, 2 * n)
    if len(rows) != n or pivots[:n] != tuple(range(n)):
        raise InconsistentSystemError("matrix is singular")
    return [{j - n: c for j, c in row.items() if j >= n} for row in R[:n]]


class Subspace:
    """
    Span of an independent list of sparse vectors in an ambient coordinate space.

    ``coordinates`` expresses a vector in the given basis (not the echelon rows), which is what
    structure-constant extraction needs.
    """

    def __init__(self, field: Field, ambient: int, basis: Sequence[Mapping[int, Elem]]):
        self.field = field
        self.ambient = ambient
        self.basis: list[Sparse] = [to_sparse(b) for b in basis]
        k = len(self.basis)
        self._rows: list[tuple[int, Sparse, Sparse]] = []
        if k == 0:
            return
        augmented = [dict(b) | {ambient + i: field.one} for i, b in enumerate(self.basis)]
        R, pivots = rref(field, augmented, ambient + k)
        if len(pivots) != k or any(p >= ambient for p in pivots):
            raise ValueError("subspace basis vectors are linearly dependent")
        for row, p in zip(R, pivots, strict=True):
            left = {j: c for j, c in row.items() if j < ambient}
            right = {j - ambient: c for j, c in row.items() if j >= ambient}
            self._rows.append((p, left, right))

    @classmethod
    def spanned_by(
        cls, field: Field, ambient: int, vectors: Sequence[Mapping[int, Elem]]
    ) -> "Subspace":
        """Subspace spanned by arbitrary vectors, keeping the first independent ones as basis."""
        chosen = span_basis(field, vectors, ambient)
        return cls(field, ambient, [vectors[i] for i in chosen])

    @classmethod
    def whole(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, [{i: field.one} for i in range(ambient)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [p for p, _, _ in self._rows]

    def reduce(self, v: Mapping[int, Elem]) -> tuple[Sparse, Sparse]:
        """Remainder of v modulo the subspace and the coordinates of the removed part."""
        remainder = to_sparse(v)
        coords: Sparse = {}
        for p, left, right in self._rows:
            c = remainder.get(p)
            if not c:
                continue
            add_into(remainder, left, -c)
            add_into(coords, right, c)
        return remainder, coords

    def contains(self, v: Mapping[int, Elem]) -> bool:
        return not self.reduce(v)[0]

    def coordinates(self, v: Mapping[int, Elem]) -> Sparse | None:
        """Coordinates of v in ``basis``, or None when v lies outside the subspace."""
        remainder, coords = self.reduce(v)
        return None if remainder else coords

    def lift(self, coords: Mapping[int, Elem]) -> Sparse:
        """Ambient vector with the given coordinates in ``basis``."""
        acc: Sparse = {}
        for k, c in coords.items():
            add_into(acc, self.basis[k], c)
        return acc

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def basis_labels(self, ambient_labels: Sequence[str], prefix: str) -> tuple[str, ...]:
        """Ambient label for unit basis vectors, ``prefix[k]`` otherwise."""
        labels = []
        for k, b in enumerate(self.basis):
            if len(b) == 1:
                ((i, c),) = b.items()
                if c == self.field.one:
                    labels.append(ambient_labels[i])
                    continue
            labels.append(f"{prefix}[{k}]")
        return tuple(labels)

    def dense_basis(self) -> list[Vector]:
        return [to_dense(b, self.ambient, self.field) for b in self.basis]

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def eigenspace(
    field: Field, columns: Sequence[Mapping[int, Elem]], value: Elem, dim: int
) -> list[Sparse]:
    """Kernel of (M - value·I) for the square matrix with the given column images."""
    shifted = []
    for i in range(dim):
        col = dict(columns[i]) if i < len(columns) else {}
        add_into(col, {i: -value} if value else {})
        shifted.append(col)
    return kernel(field, shifted, dim)


@dataclass(frozen=True)
class SolveResult:
    """Outcome of :func:`solve_exact`."""

    rank: int
    basis: list[Vector]
    pivots: tuple[int, ...]
    solution: Vector | None
    kernel: list[Vector]


def solve_exact(
    rows: Sequence[Sequence[Elem]],
    target: Sequence[Elem] | None = None,
    field: Field = QQ_FIELD,
) -> SolveResult:
    """
    Row-reduce ``rows`` and optionally express ``target`` as a combination of them.

    Args:
        rows: Dense vectors of a common length
        target: Vector to write as sum(λᵢ·rowsᵢ), or None
        field: Ground field

    Returns:
        Rank, RREF basis of the row space, pivot columns, one solution λ (or None when no target
        was given) and a basis of the relations among the rows

    Raises:
        InconsistentSystemError: target is not in the row space
    """
    width = len(rows[0]) if rows else (len(target) if target is not None else 0)
    for row in rows:
        if len(row) != width:
            raise DimensionMismatchError("rows of unequal length")
    if target is not None and len(target) != width:
        raise DimensionMismatchError(f"target has length {len(target)}, expected {width}")

    sparse_rows = [to_sparse(r) for r in rows]
    R, pivots = rref(field, sparse_rows, width)
    basis = [to_dense(r, width, field) for r in R]
    relations = [to_dense(v, len(rows), field) for v in kernel(field, sparse_rows, width)]

    solution = None
    if target is not None:
        columns = sparse_rows + [to_sparse(target)]
        by_row = _transpose(columns)
        augmented = [by_row.get(r, {}) for r in range(width)]
        R_aug, piv_aug = rref(field, augmented, len(columns))
        if piv_aug and piv_aug[-1] == len(rows):
            raise InconsistentSystemError("target is not in the span of the rows")
        coeffs: Sparse = {}
        for row, p in zip(R_aug, piv_aug, strict=True):
            c = row.get(len(rows))
            if c:
                coeffs[p] = c
        solution = to_dense(coeffs, len(rows), field)
    logger.debug("solve_exact: %d rows, width %d, rank %d", len(rows), width, len(pivots))
    return SolveResult(len(pivots), basis, pivots, solution, relations)
