"""Linear and multilinear maps stored as sparse structure constants."""

from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import product
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from isotype.errors import DimensionMismatchError
from isotype.exactlinalg.scalars import Elem, Field
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse, Vector, add_into, check_dim, to_dense, to_sparse

Entry = tuple[tuple[int, ...], int, Elem]


def _clean_table(
    table: Mapping[tuple[int, ...], Mapping[int, Elem]],
) -> dict[tuple[int, ...], Sparse]:
    cleaned: dict[tuple[int, ...], Sparse] = {}
    for key, image in table.items():
        nonzero = {k: c for k, c in image.items() if c}
        if nonzero:
            cleaned[tuple(key)] = nonzero
    return cleaned


@dataclass(frozen=True, eq=False)
class MultilinearMap:
    """
    A multilinear map V₁ × … × V_r → W.

    ``table[(i₁, …, i_r)]`` is the sparse image of the basis tuple; absent keys map to zero and
    no explicit zero coefficient is ever stored.
    """

    field: Field
    domains: tuple[Space, ...]
    codomain: Space
    table: dict[tuple[int, ...], Sparse] = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", _clean_table(self.table))
        for key, image in self.table.items():
            if len(key) != len(self.domains):
                raise DimensionMismatchError(f"key {key} has wrong arity for {self.arity}-map")
            for slot, i in enumerate(key):
                self.domains[slot].check_index(i)
            for k in image:
                self.codomain.check_index(k)

    @classmethod
    def from_entries(
        cls,
        field: Field,
        domains: Sequence[Space],
        codomain: Space,
        entries: Iterable[Entry],
    ) -> Self:
        """Build from ``(input indices, output index, coefficient)`` records; repeats add up."""
        table: dict[tuple[int, ...], Sparse] = {}
        for key, out, coeff in entries:
            add_into(table.setdefault(tuple(key), {}), {out: coeff})
        return cls(field, tuple(domains), codomain, table)

    @classmethod
    def from_function(
        cls,
        field: Field,
        domains: Sequence[Space],
        codomain: Space,
        fn: Callable[..., Mapping[int, Elem]],
    ) -> Self:
        """Tabulate ``fn`` on every basis tuple."""
        table = {
            key: dict(fn(*key)) for key in product(*(range(space.dim) for space in domains))
        }
        return cls(field, tuple(domains), codomain, table)

    @property
    def arity(self) -> int:
        return len(self.domains)

    def entries(self) -> list[Entry]:
        """Nonzero structure constants in sorted order."""
        return [
            (key, k, c)
            for key in sorted(self.table)
            for k, c in sorted(self.table[key].items())
        ]

    def basis_image(self, *key: int) -> Sparse:
        return self.table.get(key, {})

    def apply_sparse(self, *vectors: Mapping[int, Elem]) -> Sparse:
        """Evaluate on sparse vectors."""
        if len(vectors) != self.arity:
            raise DimensionMismatchError(f"expected {self.arity} arguments, got {len(vectors)}")
        acc: Sparse = {}
        table = self.table
        items = [list(v.items()) for v in vectors]
        for combo in product(*items):
            image = table.get(tuple(i for i, _ in combo))
            if image is None:
                continue
            coeff = combo[0][1]
            for _, c in combo[1:]:
                coeff = coeff * c
            add_into(acc, image, coeff)
        return acc

    def apply(self, *vectors: Sequence[Elem]) -> Vector:
        """Evaluate on dense vectors."""
        for space, v in zip(self.domains, vectors, strict=True):
            check_dim(v, space.dim, f"argument in {space.name or 'domain'}")
        image = self.apply_sparse(*(to_sparse(v) for v in vectors))
        return to_dense(image, self.codomain.dim, self.field)

    def is_symmetric(self) -> bool:
        if self.arity != 2:
            return False
        return all(self.table.get((j, i), {}) == image for (i, j), image in self.table.items())


class BilinearMap(MultilinearMap):
    """A bilinear map U × V → W."""

    @cached_property
    def rows(self) -> dict[int, dict[int, Sparse]]:
        """``rows[i][j]`` is the image of (e_i, e_j); for fast left-slot lookups."""
        nested: dict[int, dict[int, Sparse]] = {}
        for (i, j), image in self.table.items():
            nested.setdefault(i, {})[j] = image
        return nested

    def apply_sparse(self, *vectors: Mapping[int, Elem]) -> Sparse:
        u, v = vectors
        acc: Sparse = {}
        rows = self.rows
        for i, a in u.items():
            row = rows.get(i)
            if not row:
                continue
            for j, b in v.items():
                image = row.get(j)
                if image is not None:
                    add_into(acc, image, a * b)
        return acc


class TrilinearMap(MultilinearMap):
    """A trilinear map U × V × W → X."""

    @cached_property
    def rows(self) -> dict[int, dict[int, dict[int, Sparse]]]:
        nested: dict[int, dict[int, dict[int, Sparse]]] = {}
        for (i, j, k), image in self.table.items():
            nested.setdefault(i, {}).setdefault(j, {})[k] = image
        return nested

    def apply_sparse(self, *vectors: Mapping[int, Elem]) -> Sparse:
        u, v, w = vectors
        acc: Sparse = {}
        rows = self.rows
        for i, a in u.items():
            plane = rows.get(i)
            if not plane:
                continue
            for j, b in v.items():
                row = plane.get(j)
                if not row:
                    continue
                ab = a * b
                for k, c in w.items():
                    image = row.get(k)
                    if image is not None:
                        add_into(acc, image, ab * c)
        return acc


@dataclass(frozen=True, eq=False)
class LinearMap:
    """A linear map given by the sparse images of the domain basis (its columns)."""

    field: Field
    domain: Space
    codomain: Space
    columns: dict[int, Sparse] = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for i, image in self.columns.items():
            self.domain.check_index(i)
            nonzero = {k: c for k, c in image.items() if c}
            for k in nonzero:
                self.codomain.check_index(k)
            if nonzero:
                cleaned[i] = nonzero
        object.__setattr__(self, "columns", cleaned)

    @classmethod
    def from_function(
        cls, field: Field, domain: Space, codomain: Space, fn: Callable[[int], Mapping[int, Elem]]
    ) -> "LinearMap":
        return cls(field, domain, codomain, {i: dict(fn(i)) for i in range(domain.dim)})

    @classmethod
    def identity(cls, field: Field, space: Space) -> "LinearMap":
        return cls(field, space, space, {i: {i: field.one} for i in range(space.dim)})

    @classmethod
    def zero(cls, field: Field, domain: Space, codomain: Space) -> "LinearMap":
        return cls(field, domain, codomain, {})

    def image(self, i: int) -> Sparse:
        return self.columns.get(i, {})

    def apply_sparse(self, v: Mapping[int, Elem]) -> Sparse:
        acc: Sparse = {}
        columns = self.columns
        for i, c in v.items():
            image = columns.get(i)
            if image is not None:
                add_into(acc, image, c)
        return acc

    def apply(self, v: Sequence[Elem]) -> Vector:
        check_dim(v, self.domain.dim, "argument")
        return to_dense(self.apply_sparse(to_sparse(v)), self.codomain.dim, self.field)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self ∘ other."""
        if other.codomain.dim != self.domain.dim:
            raise DimensionMismatchError("composition of maps with incompatible spaces")
        columns = {i: self.apply_sparse(image) for i, image in other.columns.items()}
        return LinearMap(self.field, other.domain, self.codomain, columns)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        columns = {i: dict(image) for i, image in self.columns.items()}
        for i, image in other.columns.items():
            add_into(columns.setdefault(i, {}), image)
        return LinearMap(self.field, self.domain, self.codomain, columns)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + other.scaled(-self.field.one)

    def scaled(self, c: Elem) -> "LinearMap":
        if not c:
            return LinearMap.zero(self.field, self.domain, self.codomain)
        columns = {i: {k: x * c for k, x in image.items()} for i, image in self.columns.items()}
        return LinearMap(self.field, self.domain, self.codomain, columns)

    def commutator(self, other: "LinearMap") -> "LinearMap":
        return self.compose(other) - other.compose(self)

    def is_zero(self) -> bool:
        return not self.columns

    def flatten(self) -> Sparse:
        """Sparse vector of length dim(domain) * dim(codomain), column-major."""
        n = self.codomain.dim
        return {i * n + k: c for i, image in self.columns.items() for k, c in image.items()}

    @classmethod
    def unflatten(
        cls, field: Field, domain: Space, codomain: Space, v: Mapping[int, Elem]
    ) -> "LinearMap":
        n = codomain.dim
        columns: dict[int, Sparse] = {}
        for idx, c in v.items():
            columns.setdefault(idx // n, {})[idx % n] = c
        return cls(field, domain, codomain, columns)

    def trace(self) -> Elem:
        total = self.field.zero
        for i, image in self.columns.items():
            c = image.get(i)
            if c is not None:
                total = total + c
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.columns == other.columns and self.domain.dim == other.domain.dim

    __hash__ = None  # type: ignore[assignment]


def apply_bilinear(B: MultilinearMap, u: Sequence[Elem], v: Sequence[Elem]) -> Vector:
    """
    Evaluate a bilinear map on dense vectors.

    Args:
        B: Bilinear map U × V → W
        u: Vector of U
        v: Vector of V

    Returns:
        Dense image in W
    """
    if B.arity != 2:
        raise DimensionMismatchError(f"apply_bilinear needs a 2-map, got arity {B.arity}")
    return B.apply(u, v)
