"""
J-ternary algebras (J, T) and their derived maps.

Elements of J ⊕ T are sparse vectors over the direct sum, J coordinates first. The even maps
D_{a,b} and d_{x,y} act on that sum; the ℤ/2-graded product ⋄ lives there too.
"""

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from functools import cached_property

from isotype.errors import DimensionMismatchError
from isotype.exactlinalg.maps import BilinearMap, LinearMap, TrilinearMap
from isotype.exactlinalg.scalars import Elem, Field
from isotype.exactlinalg.spaces import Space, direct_sum
from isotype.exactlinalg.vectors import Sparse, add_into, restrict, scale, shift, sub, to_sparse
from isotype.jordan.algebra import JordanAlgebra

logger = logging.getLogger(__name__)

Vec = Mapping[int, Elem]


@dataclass(frozen=True, eq=False)
class JTernaryAlgebra:
    """
    The pair (J, T) with its four products.

    Attributes:
        J: Unital Jordan algebra with product a·b
        T: Module space
        bullet: a•x, J × T → T
        skew: ⟨x|y⟩, T × T → J
        triple: ⟨x,y,z⟩, T × T × T → T
    """

    J: JordanAlgebra
    T: Space
    bullet: BilinearMap
    skew: BilinearMap
    triple: TrilinearMap
    name: str = ""

    def __post_init__(self) -> None:
        J, T = self.J.space, self.T
        if self.bullet.domains != (J, T) or self.bullet.codomain != T:
            raise DimensionMismatchError("bullet must map J × T to T")
        if self.skew.domains != (T, T) or self.skew.codomain != J:
            raise DimensionMismatchError("skew form must map T × T to J")
        if self.triple.domains != (T, T, T) or self.triple.codomain != T:
            raise DimensionMismatchError("triple product must map T × T × T to T")

    @classmethod
    def from_functions(
        cls,
        J: JordanAlgebra,
        T: Space,
        bullet: Callable[[int, int], Vec],
        skew: Callable[[int, int], Vec],
        triple: Callable[[int, int, int], Vec],
        name: str = "",
    ) -> "JTernaryAlgebra":
        """Tabulate the three module products on basis tuples."""
        field = J.field
        return cls(
            J,
            T,
            BilinearMap.from_function(field, (J.space, T), T, bullet),
            BilinearMap.from_function(field, (T, T), J.space, skew),
            TrilinearMap.from_function(field, (T, T, T), T, triple),
            name,
        )

    @property
    def field(self) -> Field:
        return self.J.field

    @property
    def jdim(self) -> int:
        return self.J.dim

    @property
    def tdim(self) -> int:
        return self.T.dim

    @cached_property
    def sum_space(self) -> Space:
        """J ⊕ T, J coordinates first."""
        return direct_sum([self.J.space, self.T], name=f"{self.name}:J+T" if self.name else "J+T")

    def t(self, i: int) -> Sparse:
        return {i: self.field.one}

    def act(self, a: Vec, x: Vec) -> Sparse:
        """a•x."""
        return self.bullet.apply_sparse(a, x)

    def pair(self, x: Vec, y: Vec) -> Sparse:
        """⟨x|y⟩."""
        return self.skew.apply_sparse(x, y)

    def trip(self, x: Vec, y: Vec, z: Vec) -> Sparse:
        """⟨x,y,z⟩."""
        return self.triple.apply_sparse(x, y, z)

    def bullet_operator(self, a: Vec) -> LinearMap:
        """x ↦ a•x on T."""
        return LinearMap.from_function(self.field, self.T, self.T, lambda i: self.act(a, self.t(i)))

    def split(self, v: Vec) -> tuple[Sparse, Sparse]:
        """J and T components of an element of J ⊕ T."""
        n = self.jdim
        return restrict(v, 0, n), restrict(v, n, n + self.tdim)

    def join(self, a: Vec, x: Vec) -> Sparse:
        out = to_sparse(a)
        out.update(shift(to_sparse(x), self.jdim))
        return out

    def D_apply(self, a: Vec, b: Vec, v: Vec) -> Sparse:
        """D_{a,b} on J ⊕ T."""
        c, x = self.split(v)
        on_j = self.J.D_apply(a, b, c) if c else {}
        on_t: Sparse = {}
        if x:
            on_t = sub(self.act(a, self.act(b, x)), self.act(b, self.act(a, x)))
            on_t = scale(on_t, self.field(1, 4))
        return self.join(on_j, on_t)

    def d_apply(self, x: Vec, y: Vec, v: Vec) -> Sparse:
        """d_{x,y} on J ⊕ T."""
        a, z = self.split(v)
        on_j: Sparse = {}
        if a:
            on_j = sub(self.pair(self.act(a, x), y), self.pair(x, self.act(a, y)))
        on_t: Sparse = {}
        if z:
            on_t = self.act(self.pair(x, y), z)
            add_into(on_t, self.trip(x, y, z), self.field(-2))
        return self.join(on_j, on_t)

    def diamond(self, u: Vec, v: Vec) -> Sparse:
        """(a+x)⋄(b+y) = (a·b + ⟨x|y⟩) + (a•y + b•x)."""
        a, x = self.split(u)
        b, y = self.split(v)
        even = self.J.mul(a, b)
        add_into(even, self.pair(x, y))
        odd = self.act(a, y)
        add_into(odd, self.act(b, x))
        return self.join(even, odd)


def _operator(JT: JTernaryAlgebra, fn: Callable[[Sparse], Sparse]) -> LinearMap:
    space = JT.sum_space
    return LinearMap.from_function(JT.field, space, space, lambda i: fn({i: JT.field.one}))


def derivation_D(JT: JTernaryAlgebra, a: Vec, b: Vec) -> LinearMap:
    """
    D_{a,b} as an even map of J ⊕ T.

    Args:
        JT: J-ternary algebra
        a: Element of J
        b: Element of J

    Returns:
        c ↦ a·(b·c) − b·(a·c) on J and x ↦ ¼(a•(b•x) − b•(a•x)) on T
    """
    a, b = to_sparse(a), to_sparse(b)
    return _operator(JT, lambda v: JT.D_apply(a, b, v))


def derived_d(JT: JTernaryAlgebra, x: Vec, y: Vec) -> LinearMap:
    """
    d_{x,y} as an even map of J ⊕ T.

    Args:
        JT: J-ternary algebra
        x: Element of T
        y: Element of T

    Returns:
        a ↦ ⟨a•x|y⟩ − ⟨x|a•y⟩ on J and z ↦ ⟨x|y⟩•z − 2⟨x,y,z⟩ on T
    """
    x, y = to_sparse(x), to_sparse(y)
    return _operator(JT, lambda v: JT.d_apply(x, y, v))


def inner_generators(JT: JTernaryAlgebra) -> list[tuple[str, LinearMap]]:
    """
    The spanning family of the inner derivation algebra, in a fixed order.

    D_{a_i,a_j} for i < j, then d_{x_i,x_j} for i ≤ j (d is symmetric, D skew).
    """
    J, T = JT.J, JT.T
    generators = []
    for i in range(J.dim):
        for j in range(i + 1, J.dim):
            label = f"D[{J.labels[i]},{J.labels[j]}]"
            generators.append((label, derivation_D(JT, J.basis(i), J.basis(j))))
    for i in range(T.dim):
        for j in range(i, T.dim):
            label = f"d[{T.labels[i]},{T.labels[j]}]"
            generators.append((label, derived_d(JT, JT.t(i), JT.t(j))))
    logger.debug("%d inner derivation generators", len(generators))
    return generators
