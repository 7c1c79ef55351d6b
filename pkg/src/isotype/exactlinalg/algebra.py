"""Finite-dimensional algebras given by structure constants."""

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from isotype.errors import DimensionMismatchError
from isotype.exactlinalg.maps import BilinearMap, Entry, LinearMap
from isotype.exactlinalg.scalars import Elem, Field
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse, sub, to_sparse


@dataclass(frozen=True, eq=False)
class StructureAlgebra:
    """
    A product on a labeled space, stored as sparse structure constants.

    ``unit`` is optional; Jordan, composition and structurable algebras set it, Lie algebras
    leave it empty.
    """

    field: Field
    space: Space
    product: BilinearMap
    unit: Sparse | None = None
    name: str = ""

    def __post_init__(self) -> None:
        if self.product.domains != (self.space, self.space) or self.product.codomain != self.space:
            raise DimensionMismatchError(f"product of {self.name or 'algebra'} has wrong spaces")

    @classmethod
    def from_function(
        cls,
        field: Field,
        space: Space,
        fn: Callable[[int, int], Mapping[int, Elem]],
        unit: Mapping[int, Elem] | None = None,
        name: str = "",
    ) -> "StructureAlgebra":
        product = BilinearMap.from_function(field, (space, space), space, fn)
        return cls(field, space, product, to_sparse(unit) if unit is not None else None, name)

    @classmethod
    def from_entries(
        cls,
        field: Field,
        space: Space,
        entries: Iterable[Entry],
        unit: Mapping[int, Elem] | None = None,
        name: str = "",
    ) -> "StructureAlgebra":
        product = BilinearMap.from_entries(field, (space, space), space, entries)
        return cls(field, space, product, to_sparse(unit) if unit is not None else None, name)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    def basis(self, i: int) -> Sparse:
        return {i: self.field.one}

    def element(self, label: str) -> Sparse:
        return self.basis(self.space.index(label))

    def basis_mul(self, i: int, j: int) -> Sparse:
        return self.product.rows.get(i, {}).get(j, {})

    def mul(self, a: Mapping[int, Elem], b: Mapping[int, Elem]) -> Sparse:
        return self.product.apply_sparse(a, b)

    def commutator(self, a: Mapping[int, Elem], b: Mapping[int, Elem]) -> Sparse:
        return sub(self.mul(a, b), self.mul(b, a))

    def associator(
        self, a: Mapping[int, Elem], b: Mapping[int, Elem], c: Mapping[int, Elem]
    ) -> Sparse:
        """(ab)c - a(bc)."""
        return sub(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)))

    def left(self, a: Mapping[int, Elem]) -> LinearMap:
        """Left multiplication L_a."""
        return LinearMap.from_function(
            self.field, self.space, self.space, lambda j: self.mul(a, self.basis(j))
        )

    def right(self, a: Mapping[int, Elem]) -> LinearMap:
        return LinearMap.from_function(
            self.field, self.space, self.space, lambda j: self.mul(self.basis(j), a)
        )

    @cached_property
    def left_basis(self) -> list[LinearMap]:
        """L_{e_i} for every basis vector."""
        return [self.left(self.basis(i)) for i in range(self.dim)]

    def is_commutative(self) -> bool:
        return self.product.is_symmetric()

    def is_associative(self) -> bool:
        """Associativity on all basis triples."""
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.basis_mul(i, j)
                for k in range(self.dim):
                    left = self.mul(ij, self.basis(k))
                    right = self.mul(self.basis(i), self.basis_mul(j, k))
                    if left != right:
                        return False
        return True

    def acts_as_unit(self, u: Mapping[int, Elem]) -> bool:
        """u·e_i = e_i·u = e_i on every basis vector."""
        for i in range(self.dim):
            e = self.basis(i)
            if self.mul(u, e) != e or self.mul(e, u) != e:
                return False
        return True

