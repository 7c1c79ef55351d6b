"""Shared fixtures: small Lie algebras and cached catalog examples."""

from pathlib import Path

import pytest

from isotype.catalog import ClassicalExample, gl_example, sp_example
from isotype.exactlinalg.scalars import QQ_FIELD, Field
from isotype.exactlinalg.spaces import Space
from isotype.lieforge.algebra import LieAlgebra, Sl2Triple
from isotype.lieforge.assemble import AssembledLie, assemble_L

SPECS_DIR = Path(__file__).resolve().parent.parent / "specs"

SL2_ENTRIES = [
    ((0, 2), 1, 1),
    ((2, 0), 1, -1),
    ((1, 0), 0, 2),
    ((0, 1), 0, -2),
    ((1, 2), 2, -2),
    ((2, 1), 2, 2),
]


def lie_from_entries(
    entries: list[tuple[tuple[int, int], int, int]], labels: tuple[str, ...], field: Field
) -> LieAlgebra:
    space = Space(labels, "L")
    scaled = [(key, k, field(c)) for key, k, c in entries]
    algebra = LieAlgebra.from_entries(field, space, scaled, name="L")
    assert isinstance(algebra, LieAlgebra)
    return algebra


@pytest.fixture(scope="session")
def field() -> Field:
    return QQ_FIELD


@pytest.fixture(scope="session")
def sl2(field: Field) -> LieAlgebra:
    """sl2 with basis e, h, f."""
    return lie_from_entries(SL2_ENTRIES, ("e", "h", "f"), field)


@pytest.fixture(scope="session")
def sl2_triple(field: Field) -> Sl2Triple:
    return Sl2Triple({0: field.one}, {1: field.one}, {2: field.one})


@pytest.fixture(scope="session")
def gl11() -> ClassicalExample:
    return gl_example(1, 1)


@pytest.fixture(scope="session")
def gl21() -> ClassicalExample:
    return gl_example(2, 1)


@pytest.fixture(scope="session")
def sp22() -> ClassicalExample:
    return sp_example(2, 2)


@pytest.fixture(scope="session")
def assembled_gl11(gl11: ClassicalExample) -> AssembledLie:
    return assemble_L(gl11.jt)


@pytest.fixture(scope="session")
def assembled_gl21(gl21: ClassicalExample) -> AssembledLie:
    return assemble_L(gl21.jt)


@pytest.fixture
def specs_dir() -> Path:
    return SPECS_DIR
