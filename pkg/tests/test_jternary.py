"""J-ternary axioms, derived identities, derivations and splittings."""

import pytest

from isotype.errors import DimensionMismatchError, NotIdempotentError
from isotype.exactlinalg.maps import TrilinearMap
from isotype.jternary import (
    JTernaryAlgebra,
    check_jt_axioms,
    check_special_module,
    check_theorem23,
    compare_jternary,
    derivation_algebra,
    derivation_D,
    derived_d,
    inner_generators,
    random_spot_check,
    split_T,
)


def _without_triple(JT: JTernaryAlgebra) -> JTernaryAlgebra:
    zero = TrilinearMap(JT.field, (JT.T, JT.T, JT.T), JT.T, {})
    return JTernaryAlgebra(JT.J, JT.T, JT.bullet, JT.skew, zero, "no-triple")


class TestAxioms:
    def test_gl11_satisfies_the_axioms(self, gl11):
        report = check_jt_axioms(gl11.jt)
        assert report.passed, report.failed_checks()
        assert report.dims == {"J": 1, "T": 2}
        names = [c.name for c in report.checks]
        assert names[:6] == ["JT1", "JT2", "JT3", "JT4", "JT5", "JT6"]
        assert report.check("JT6-printed").informational

    def test_gl21_satisfies_the_axioms(self, gl21):
        assert check_jt_axioms(gl21.jt).passed

    def test_special_module(self, gl21):
        report = check_special_module(gl21.jt)
        assert report.passed
        assert [c.name for c in report.checks] == [
            "special-module",
            "unit-action",
            "skew-alternating",
        ]

    def test_missing_triple_product_breaks_jt3(self, gl11):
        report = check_jt_axioms(_without_triple(gl11.jt))
        assert not report.passed
        failed = report.failed_checks()
        assert "JT3" in failed
        assert "JT3-JT4-corollary" in failed
        assert "JT1" not in failed
        assert report.witness is not None

    def test_shapes_are_checked(self, gl11, gl21):
        JT = gl11.jt
        with pytest.raises(DimensionMismatchError):
            JTernaryAlgebra(JT.J, JT.T, JT.bullet, JT.skew, gl21.jt.triple)


class TestDerivedIdentities:
    def test_gl11(self, gl11):
        report = check_theorem23(gl11.jt)
        assert report.passed, report.failed_checks()
        for name in ("D-unit", "D-cyclic", "d-on-J", "d-symmetric", "triple-recovery"):
            assert report.check(name).passed
        assert report.check("d-exchange").passed
        assert report.check("d-exchange-printed").informational

    def test_sp22(self, sp22):
        assert check_theorem23(sp22.jt).passed

    def test_random_elements(self, gl21):
        result = random_spot_check(gl21.jt, count=4, seed=5)
        assert result.passed
        assert result.checked == 4
        assert result.note == "4 random elements, seed 5"

    def test_d_is_symmetric_and_D_skew(self, gl21):
        JT = gl21.jt
        x, y = JT.t(0), JT.t(2)
        assert derived_d(JT, x, y) == derived_d(JT, y, x)
        a, b = JT.J.basis(0), JT.J.basis(1)
        assert (derivation_D(JT, a, b) + derivation_D(JT, b, a)).is_zero()
        assert derivation_D(JT, JT.J.one, a).is_zero()

    def test_generator_order(self, gl11):
        labels = [label for label, _ in inner_generators(gl11.jt)]
        assert labels == [
            "d[w1⊗α1,w1⊗α1]",
            "d[w1⊗α1,β1⊗z1]",
            "d[β1⊗z1,β1⊗z1]",
        ]


class TestComparison:
    def test_identical(self, gl11):
        assert all(c.passed for c in compare_jternary(gl11.jt, gl11.jt))

    def test_differing_triple(self, gl11):
        results = {c.name: c for c in compare_jternary(gl11.jt, _without_triple(gl11.jt))}
        assert results["product"].passed
        assert results["skew"].passed
        assert not results["triple"].passed
        assert results["triple"].witness is not None

    def test_shape_mismatch(self, gl11, gl21):
        results = compare_jternary(gl11.jt, gl21.jt)
        assert not any(c.passed for c in results)


def test_derivation_algebra_of_gl11(gl11):
    derivations = derivation_algebra(gl11.jt)
    assert len(derivations) == 1
    space = gl11.jt.sum_space
    assert all(d.domain == space for d in derivations)


class TestSplit:
    def test_gl21(self, gl21):
        split = split_T(gl21.jt, gl21.idempotent)
        assert split.dims == (2, 2)
        assert split.peirce.dims == (1, 2, 1)
        report = split.report()
        assert report.passed, report.failed_checks()
        assert report.dims == {"J1": 1, "Jhalf": 2, "J0": 1, "T1": 2, "T0": 2}
        assert report.check("<T1|T0> in Jhalf").passed

    def test_sp22(self, sp22):
        split = split_T(sp22.jt, sp22.idempotent)
        assert split.dims == (2, 2)
        assert split.peirce.dims == (1, 1, 1)
        assert split.report().passed

    def test_unit_is_rejected(self, gl21):
        with pytest.raises(NotIdempotentError):
            split_T(gl21.jt, gl21.jt.J.one)
