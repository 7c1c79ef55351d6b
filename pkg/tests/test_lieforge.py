"""Lie algebra checks, assembly of L(J, T), gradings and isotypic decompositions."""

import pytest
from conftest import SL2_ENTRIES, lie_from_entries

from isotype.catalog import so_example
from isotype.errors import PreconditionError
from isotype.exactlinalg.maps import TrilinearMap
from isotype.jternary import JTernaryAlgebra, compare_jternary
from isotype.lieforge import (
    Sl2Triple,
    assemble_L,
    check_grading,
    check_jacobi,
    check_sl2_trace_identity,
    five_grading,
    jternary_from_5grading,
    killing_form,
    short_sl2_decompose,
    short_sl2sl2_decompose,
    structure_report,
)


class TestSl2:
    def test_jacobi(self, sl2):
        report = check_jacobi(sl2)
        assert report.passed
        assert report.check("jacobi").checked == 1

    def test_broken_bracket_reports_witness(self, field):
        entries = [entry for entry in SL2_ENTRIES if entry[0] not in ((1, 2), (2, 1))]
        entries += [((1, 2), 2, -3), ((2, 1), 2, 3)]
        broken = lie_from_entries(entries, ("e", "h", "f"), field)
        report = check_jacobi(broken)
        assert not report.passed
        assert report.check("antisymmetry").passed
        assert report.witness == ["e", "h", "f"]

    def test_antisymmetry_failure(self, field):
        entries = [entry for entry in SL2_ENTRIES if entry[0] != (2, 0)]
        report = check_jacobi(lie_from_entries(entries, ("e", "h", "f"), field))
        assert "antisymmetry" in report.failed_checks()

    def test_killing_form(self, sl2, field):
        kappa = killing_form(sl2)
        assert kappa.basis_image(0, 2) == {0: field(4)}
        assert kappa.basis_image(1, 1) == {0: field(8)}
        assert kappa.basis_image(0, 0) == {}

    def test_structure(self, sl2):
        report = structure_report(sl2)
        assert report.passed
        assert report.dims == {"L": 3, "killing_rank": 3, "center": 0, "derived": 3}

    def test_five_grading(self, sl2, sl2_triple):
        grading = five_grading(sl2, sl2_triple.E, sl2_triple.F)
        assert grading.dim_tuple() == (1, 0, 1, 0, 1)
        assert check_grading(sl2, grading).passed

    def test_triple(self, sl2, sl2_triple):
        assert sl2_triple.check(sl2).passed
        assert not Sl2Triple(sl2_triple.F, sl2_triple.H, sl2_triple.E).check(sl2).passed

    def test_five_grading_needs_a_triple(self, sl2, sl2_triple):
        with pytest.raises(PreconditionError):
            five_grading(sl2, sl2_triple.E, sl2_triple.E)


def test_sl2_trace_identity():
    assert check_sl2_trace_identity().passed


class TestAssembly:
    def test_gl11_dims(self, assembled_gl11):
        assert assembled_gl11.dims == {"L": 8, "sl(V)xJ": 3, "VxT": 4, "D": 1}
        assert all(c.passed for c in assembled_gl11.checks)
        assert assembled_gl11.algebra.component_dims() == {"sl(V)xJ": 3, "VxT": 4, "D": 1}

    def test_gl11_is_a_lie_algebra(self, assembled_gl11):
        report = check_jacobi(assembled_gl11.algebra)
        assert report.passed, report.failed_checks()
        assert report.dims == {"L": 8, "sl(V)xJ": 3, "VxT": 4, "D": 1}

    def test_gl11_is_simple(self, assembled_gl11):
        assert structure_report(assembled_gl11.algebra).passed

    def test_gl21(self, assembled_gl21):
        assert assembled_gl21.dims == {"L": 24, "sl(V)xJ": 12, "VxT": 8, "D": 4}
        assert check_jacobi(assembled_gl21.algebra).passed

    def test_sp22(self, sp22):
        assert assemble_L(sp22.jt).algebra.dim == sp22.reference_dim

    def test_so23(self):
        so23 = so_example(2, 3)
        assembled = assemble_L(so23.jt)
        assert assembled.algebra.dim == so23.reference_dim == 21
        report = check_jacobi(assembled.algebra)
        assert report.passed, report.failed_checks()

    def test_full_derivations(self, gl11, assembled_gl11):
        full = assemble_L(gl11.jt, derivations="full")
        assert full.nD == 1
        assert full.algebra.dim == 8
        assert full.derivation_labels == assembled_gl11.derivation_labels
        assert check_jacobi(full.algebra).passed

    def test_derivation_span_closed(self, assembled_gl21):
        check = next(c for c in assembled_gl21.checks if c.name == "derivation-span-closed")
        assert check.passed
        assert check.checked == 6
        assert check.violations == 0

    def test_certify_refuses_bad_input(self, gl11):
        JT = gl11.jt
        broken = JTernaryAlgebra(
            JT.J, JT.T, JT.bullet, JT.skew, TrilinearMap(JT.field, (JT.T,) * 3, JT.T, {})
        )
        with pytest.raises(PreconditionError):
            assemble_L(broken, certify=True)

    def test_five_grading(self, assembled_gl11):
        L, triple = assembled_gl11.algebra, assembled_gl11.triple
        grading = five_grading(L, triple.E, triple.F)
        assert grading.dim_tuple() == (1, 2, 2, 2, 1)
        assert check_grading(L, grading).passed

    def test_round_trip_through_the_grading(self, gl11, assembled_gl11):
        triple = assembled_gl11.triple
        recovered = jternary_from_5grading(assembled_gl11.algebra, triple.E, triple.F)
        results = compare_jternary(recovered, gl11.jt)
        assert all(c.passed for c in results), [c.name for c in results if not c.passed]


class TestDecompositions:
    def test_short_sl2(self, assembled_gl11):
        decomposition = short_sl2_decompose(assembled_gl11.algebra, assembled_gl11.triple)
        assert decomposition.multiplicities == {"J": 1, "T": 2, "D": 1}
        assert decomposition.dims == {"adjoint": 3, "natural": 4, "trivial": 1}
        report = decomposition.report()
        assert report.task == "decompose-sl2"
        assert report.passed, report.failed_checks()

    def test_short_sl2_rejects_non_triples(self, sl2, sl2_triple):
        wrong = Sl2Triple(sl2_triple.E, sl2_triple.E, sl2_triple.F)
        with pytest.raises(PreconditionError):
            short_sl2_decompose(sl2, wrong)

    def test_sl2xsl2(self, gl21, assembled_gl21):
        decomposition = short_sl2sl2_decompose(assembled_gl21, gl21.idempotent)
        assert decomposition.multiplicities == {
            "J1": 1,
            "J0": 1,
            "Jhalf": 2,
            "T1": 2,
            "T0": 2,
            "S": 2,
        }
        assert decomposition.dims["sl(V)xJhalf+D(e,Jhalf)"] == 8
        report = decomposition.report()
        assert report.passed, report.failed_checks()
        assert report.task == "decompose-sl2xsl2"

    @pytest.mark.slow
    def test_so_family(self):
        so41 = so_example(4, 1)
        assembled = assemble_L(so41.jt)
        assert assembled.algebra.dim == so41.reference_dim == 36
        report = short_sl2sl2_decompose(assembled, so41.idempotent).report()
        assert report.passed, report.failed_checks()
