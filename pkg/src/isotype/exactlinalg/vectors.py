"""Sparse and dense exact vectors.

Internal kernels work on sparse vectors: ``dict[int, Elem]`` holding nonzero entries only.
Public element values are dense tuples in basis order.
"""

from collections.abc import Iterable, Mapping, Sequence

from isotype.errors import DimensionMismatchError
from isotype.exactlinalg.scalars import Elem, Field

Sparse = dict[int, Elem]
Vector = tuple[Elem, ...]


def unit(i: int, field: Field) -> Sparse:
    return {i: field.one}


def add_into(acc: Sparse, v: Mapping[int, Elem], coeff: Elem | None = None) -> Sparse:
    """acc += coeff * v, in place, dropping cancelled entries."""
    for k, c in v.items():
        term = c if coeff is None else c * coeff
        total = acc.get(k)
        if total is None:
            if term:
                acc[k] = term
            continue
        total = total + term
        if total:
            acc[k] = total
        else:
            del acc[k]
    return acc


def combine(terms: Iterable[tuple[Elem, Mapping[int, Elem]]]) -> Sparse:
    """Linear combination sum(c * v)."""
    acc: Sparse = {}
    for coeff, v in terms:
        if coeff:
            add_into(acc, v, coeff)
    return acc


def scale(v: Mapping[int, Elem], c: Elem) -> Sparse:
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


def add(u: Mapping[int, Elem], v: Mapping[int, Elem]) -> Sparse:
    return add_into(dict(u), v)


def sub(u: Mapping[int, Elem], v: Mapping[int, Elem]) -> Sparse:
    acc = dict(u)
    for k, c in v.items():
        total = acc.get(k)
        total = -c if total is None else total - c
        if total:
            acc[k] = total
        else:
            acc.pop(k, None)
    return acc


def neg(v: Mapping[int, Elem]) -> Sparse:
    return {k: -c for k, c in v.items()}


def to_sparse(v: Sequence[Elem] | Mapping[int, Elem]) -> Sparse:
    if isinstance(v, Mapping):
        return {k: c for k, c in v.items() if c}
    return {i: c for i, c in enumerate(v) if c}


def to_dense(v: Mapping[int, Elem], dim: int, field: Field) -> Vector:
    out = [field.zero] * dim
    for k, c in v.items():
        if not 0 <= k < dim:
            raise DimensionMismatchError(f"index {k} out of range for dimension {dim}")
        out[k] = c
    return tuple(out)


def shift(v: Mapping[int, Elem], offset: int) -> Sparse:
    """Re-index v into a larger space starting at ``offset``."""
    return {k + offset: c for k, c in v.items()}


def restrict(v: Mapping[int, Elem], start: int, stop: int) -> Sparse:
    """Entries with index in [start, stop), re-indexed from 0."""
    return {k - start: c for k, c in v.items() if start <= k < stop}


def check_dim(v: Sequence[Elem], dim: int, what: str = "vector") -> None:
    if len(v) != dim:
        raise DimensionMismatchError(f"{what} has length {len(v)}, expected {dim}")
