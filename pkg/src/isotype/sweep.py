"""
Identity sweeps over basis tuples.

A sweep evaluates a residual function on index tuples and counts the tuples where the residual is
nonzero. Tuples are enumerated exhaustively (optionally thinned by a symmetry filter) or sampled
with a PCG64 generator. Work is split by leading index over a fork-based process pool; merged
results are independent of the worker count.
"""

import logging
import multiprocessing
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from math import prod

import numpy as np

from isotype.exactlinalg.scalars import Elem, Field
from isotype.exactlinalg.vectors import Sparse
from isotype.models.report import CheckResult

logger = logging.getLogger(__name__)

Key = tuple[int, ...]
Residual = Callable[[Key], object]
Predicate = Callable[[Key], bool]

_ACTIVE: tuple[Residual, Predicate | None] | None = None


def nondecreasing(key: Key) -> bool:
    return all(a <= b for a, b in zip(key, key[1:]))


def increasing(key: Key) -> bool:
    return all(a < b for a, b in zip(key, key[1:]))


def leading_pair_ordered(key: Key) -> bool:
    """First two slots satisfy i <= j; the rest is free."""
    return key[0] <= key[1]


@dataclass(frozen=True)
class SweepOptions:
    """
    How a sweep enumerates tuples.

    ``sample`` switches to sampling when it is smaller than the number of raw tuples. Sampled
    tuples ignore symmetry filters, which only remove redundant tuples.
    """

    sample: int | None = None
    seed: int = 0
    threads: int = 1


EXHAUSTIVE = SweepOptions()


def _init_worker(residual: Residual, predicate: Predicate | None) -> None:
    global _ACTIVE
    _ACTIVE = (residual, predicate)


def _scan(keys: Iterable[Key]) -> tuple[int, int, Key | None]:
    assert _ACTIVE is not None
    residual, predicate = _ACTIVE
    checked = 0
    violations = 0
    first: Key | None = None
    for key in keys:
        if predicate is not None and not predicate(key):
            continue
        checked += 1
        if residual(key):
            violations += 1
            if first is None or key < first:
                first = key
    return checked, violations, first


def _exhaustive_chunk(task: tuple[int, tuple[int, ...], str]) -> tuple[int, int, Key | None]:
    lead, rest, mode = task
    tails: Iterable[tuple[int, ...]]
    if mode == "increasing":
        tails = combinations(range(lead + 1, rest[0]), len(rest))
    elif mode == "nondecreasing":
        tails = combinations_with_replacement(range(lead, rest[0]), len(rest))
    else:
        tails = product(*(range(d) for d in rest))
    return _scan((lead, *tail) for tail in tails)


def _sampled_chunk(keys: list[Key]) -> tuple[int, int, Key | None]:
    return _scan(keys)


def sample_tuples(dims: Sequence[int], count: int, seed: int) -> list[Key]:
    """
    Draw ``count`` index tuples uniformly with numpy's PCG64 generator.

    Slot s of every tuple comes from one ``integers(0, dims[s], size=count)`` call, slots in
    order, so the draw depends only on (dims, count, seed).
    """
    if count <= 0 or any(d == 0 for d in dims):
        return []
    rng = np.random.Generator(np.random.PCG64(seed))
    columns = [rng.integers(0, d, size=count).tolist() for d in dims]
    return [tuple(int(i) for i in key) for key in zip(*columns, strict=True)]


def _fork_available() -> bool:
    return "fork" in multiprocessing.get_all_start_methods()


def _run_tasks(
    worker: Callable[..., tuple[int, int, Key | None]],
    tasks: list,
    residual: Residual,
    predicate: Predicate | None,
    threads: int,
) -> Iterator[tuple[int, int, Key | None]]:
    if threads > 1 and len(tasks) > 1 and _fork_available():
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(threads, initializer=_init_worker, initargs=(residual, predicate)) as pool:
            yield from pool.imap(worker, tasks)
        return
    previous = _ACTIVE
    _init_worker(residual, predicate)
    try:
        for task in tasks:
            yield worker(task)
    finally:
        if previous is not None:
            _init_worker(*previous)


def run_sweep(
    name: str,
    dims: Sequence[int],
    residual: Residual,
    *,
    labels: Sequence[Sequence[str]] | None = None,
    predicate: Predicate | None = None,
    options: SweepOptions = EXHAUSTIVE,
    informational: bool = False,
    note: str | None = None,
) -> CheckResult:
    """
    Evaluate ``residual`` over index tuples and summarize the violations.

    Args:
        name: Check name used in the report
        dims: Range of each tuple slot
        residual: Returns something falsy when the identity holds at the tuple
        labels: Basis labels per slot, used to render the witness
        predicate: Symmetry filter applied in exhaustive mode
        options: Sampling and parallelism settings
        informational: Mark the result as not affecting the task status
        note: Free-form remark stored with the result

    Returns:
        Check result whose witness is the lexicographically smallest failing tuple
    """
    dims = tuple(dims)
    total = prod(dims) if dims else 0
    sampled = options.sample is not None and options.sample < total
    if total == 0:
        tasks: list = []
        worker = _exhaustive_chunk
    elif sampled:
        assert options.sample is not None
        keys = sample_tuples(dims, options.sample, options.seed)
        parts = max(1, options.threads * 4)
        size = -(-len(keys) // parts)
        tasks = [keys[i : i + size] for i in range(0, len(keys), size)]
        worker = _sampled_chunk
    else:
        enumeration = "product"
        if len(set(dims)) == 1 and len(dims) > 1 and predicate in (increasing, nondecreasing):
            enumeration = "increasing" if predicate is increasing else "nondecreasing"
            predicate = None
        tasks = [(lead, dims[1:], enumeration) for lead in range(dims[0])]
        worker = _exhaustive_chunk
    predicate_used = None if sampled else predicate

    mode = "sampled" if sampled else "exhaustive"
    logger.debug("sweep %s: dims %s, %s, %d chunks", name, dims, mode, len(tasks))
    checked = 0
    violations = 0
    first: Key | None = None
    for done, (c, v, f) in enumerate(
        _run_tasks(worker, tasks, residual, predicate_used, options.threads), start=1
    ):
        checked += c
        violations += v
        if f is not None and (first is None or f < first):
            first = f
        logger.debug("sweep %s: chunk %d/%d", name, done, len(tasks))

    witness = None
    if first is not None:
        witness = [labels[s][i] for s, i in enumerate(first)] if labels else [str(i) for i in first]
    if sampled:
        mode = f"sampled {options.sample} tuples, seed {options.seed}"
        note = f"{note}; {mode}" if note else mode
    return CheckResult(
        name=name,
        passed=violations == 0,
        checked=checked,
        violations=violations,
        witness=witness,
        informational=informational,
        note=note,
    )


def check_value(
    name: str, ok: bool, note: str | None = None, informational: bool = False
) -> CheckResult:
    """Single yes/no fact as a check result."""
    return CheckResult(
        name=name,
        passed=ok,
        checked=1,
        violations=0 if ok else 1,
        informational=informational,
        note=note,
    )


def random_element(
    rng: np.random.Generator, field: Field, dim: int, density: float = 0.5
) -> Sparse:
    """Sparse element with small random rational coefficients."""
    out: Sparse = {}
    for i in range(dim):
        if rng.random() >= density:
            continue
        num = int(rng.integers(-3, 4))
        den = int(rng.integers(1, 4))
        value: Elem = field(num, den)
        if value:
            out[i] = value
    return out


def random_elements(field: Field, dim: int, count: int, seed: int) -> list[Sparse]:
    """``count`` random sparse elements from a PCG64 stream seeded with ``seed``."""
    rng = np.random.Generator(np.random.PCG64(seed))
    return [random_element(rng, field, dim) for _ in range(count)]
