"""The exceptional series from F4 to E8."""

import pytest

from isotype.catalog import (
    check_against_5grading,
    exceptional_series,
    kantor,
    verify_quadratic_factor,
)
from isotype.errors import PreconditionError
from isotype.jternary import check_jt_axioms, split_T
from isotype.lieforge import check_jacobi, short_sl2sl2_decompose, structure_report


@pytest.fixture(scope="module")
def f4_light():
    return exceptional_series(1, build_kantor=False, assemble=False)


@pytest.fixture(scope="module")
def f4():
    return exceptional_series(1)


def test_dimensions(f4_light):
    assert f4_light.name == "F4"
    assert f4_light.dims == {"A": 8, "S": 7, "J": 7, "T": 8}
    assert f4_light.kantor is None
    assert f4_light.assembled is None


def test_reference_element(f4_light, field):
    assert f4_light.s == {3: field.one}
    assert f4_light.s_prime == {3: -field.one}


def test_quadratic_factor(f4_light):
    report = verify_quadratic_factor(f4_light.albert, f4_light.jt)
    assert report.passed, report.failed_checks()
    assert report.check("printed-law").informational


def test_idempotent_split(f4_light):
    split = split_T(f4_light.jt, f4_light.e)
    assert split.dims == (4, 4)
    assert split.peirce.dims == (1, 5, 1)
    assert split.report().passed


def test_invalid_member():
    with pytest.raises(PreconditionError):
        exceptional_series(3)


def test_reference_must_lie_in_the_first_factor(field):
    with pytest.raises(PreconditionError):
        exceptional_series(2, s={1: field.one}, build_kantor=False, assemble=False)


@pytest.mark.slow
def test_axioms(f4_light):
    assert check_jt_axioms(f4_light.jt).passed


@pytest.mark.slow
def test_assembled_lie_algebra():
    series = exceptional_series(1, build_kantor=False)
    assert series.assembled is not None
    assert series.assembled.dims == {"L": 52, "sl(V)xJ": 21, "VxT": 16, "D": 15}


@pytest.mark.slow
def test_kantor_algebra(f4_light):
    K = kantor(f4_light.structurable)
    assert K.algebra.dim == 52
    assert K.dims["Instrl"] == 22
    assert check_jacobi(K.algebra).passed
    results = check_against_5grading(K, f4_light.jt, f4_light.s, f4_light.s_prime)
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]


def test_dimension_cross_check(f4, f4_light):
    checks = f4.dimension_checks()
    assert [c.name for c in checks] == ["dim K = dim F4", "dim L(J,T) = dim F4"]
    assert all(c.passed and not c.informational for c in checks)
    assert f4_light.dimension_checks() == []


def test_kantor_checks(f4):
    assert f4.kantor is not None
    failed = [c.name for c in f4.kantor.checks if not c.passed]
    assert failed == []


def test_structure_of_kantor_f4(f4):
    assert f4.kantor is not None
    report = structure_report(f4.kantor.algebra)
    assert report.passed, report.failed_checks()
    assert report.dims == {"L": 52, "killing_rank": 52, "center": 0, "derived": 52}


def test_sl2xsl2_decomposition(f4):
    assert f4.assembled is not None
    decomposition = short_sl2sl2_decompose(f4.assembled, f4.e)
    assert decomposition.multiplicities == {
        "J1": 1,
        "J0": 1,
        "Jhalf": 5,
        "T1": 4,
        "T0": 4,
        "S": 10,
    }
    report = decomposition.report()
    assert report.passed, report.failed_checks()


def test_e6():
    series = exceptional_series(2, assemble=False)
    assert series.name == "E6"
    assert series.kantor is not None
    L = series.kantor.algebra
    assert L.dim == 78
    assert check_jacobi(L).passed
    report = structure_report(L)
    assert report.passed, report.failed_checks()
    assert report.dims["center"] == 0
    assert [c.passed for c in series.dimension_checks()] == [True]


@pytest.mark.slow
@pytest.mark.parametrize(("c2_dim", "name", "dim"), [(4, "E7", 133), (8, "E8", 248)])
def test_larger_members(c2_dim, name, dim):
    series = exceptional_series(c2_dim, assemble=False)
    assert series.name == name
    assert series.kantor is not None
    assert series.kantor.algebra.dim == dim
    assert all(c.passed for c in series.dimension_checks())
