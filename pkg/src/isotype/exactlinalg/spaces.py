"""Labeled coordinate spaces and their tensor products and direct sums."""

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from isotype.errors import DimensionMismatchError


@dataclass(frozen=True)
class Space:
    """A finite-dimensional space with an ordered basis of unique labels."""

    labels: tuple[str, ...]
    name: str = ""

    def __post_init__(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            dupes = sorted(label for label, count in Counter(self.labels).items() if count > 1)
            raise ValueError(f"duplicate basis labels in space {self.name!r}: {dupes}")

    @classmethod
    def of_dim(cls, dim: int, prefix: str = "b", name: str = "") -> "Space":
        """Space with labels ``prefix0 .. prefix{dim-1}``."""
        return cls(tuple(f"{prefix}{i}" for i in range(dim)), name)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError as exc:
            raise KeyError(f"no basis vector {label!r} in space {self.name!r}") from exc

    def check_index(self, i: int) -> None:
        if not 0 <= i < self.dim:
            raise DimensionMismatchError(
                f"index {i} out of range for space {self.name!r} of dimension {self.dim}"
            )


def tensor_space(U: Space, V: Space, name: str = "") -> Space:
    """
    Tensor product with left-factor-major basis order and labels ``u⊗v``.

    Args:
        U: Left factor
        V: Right factor
        name: Optional name of the result

    Returns:
        Space of dimension dim U * dim V
    """
    labels = tuple(f"{u}⊗{v}" for u in U.labels for v in V.labels)
    return Space(labels, name or (f"{U.name}⊗{V.name}" if U.name and V.name else ""))


def direct_sum(spaces: Sequence[Space], name: str = "") -> Space:
    """Direct sum in summand order; labels are qualified by summand name only on collision."""
    labels = [label for space in spaces for label in space.labels]
    if len(set(labels)) != len(labels):
        labels = [
            f"{space.name or i}.{label}" for i, space in enumerate(spaces) for label in space.labels
        ]
    return Space(tuple(labels), name)


def offsets(spaces: Sequence[Space]) -> list[int]:
    """Start index of each summand inside their direct sum."""
    starts = []
    total = 0
    for space in spaces:
        starts.append(total)
        total += space.dim
    return starts
