"""Classical families, composition algebras and structurable algebras."""

import pytest

from isotype.catalog import (
    InvolutiveAlgebra,
    adjoint_involution,
    cayley_dickson,
    check_composition,
    check_full_algebra,
    check_hermitian,
    check_involution,
    check_phi_identities,
    check_structurable,
    classical_example,
    exchange_algebra,
    extend_hermitian,
    find_s_prime,
    full_lie_algebra,
    instrl,
    kantor,
    prototypical,
    so_example,
    sp_example,
    split_composition,
    tensor_structurable,
)
from isotype.catalog.classical import skew_endomorphisms
from isotype.errors import PreconditionError
from isotype.exactlinalg.maps import LinearMap
from isotype.exactlinalg.vectors import add
from isotype.jternary import check_jt_axioms
from isotype.lieforge import check_jacobi, structure_report

SPLIT_OCTONION_NORMS = (1, -1, -1, 1, -1, 1, 1, -1)


class TestInvolutions:
    def test_exchange_algebra(self):
        report = check_involution(exchange_algebra(2))
        assert report.passed
        assert report.dims == {"A": 8, "H": 4, "S": 4}

    def test_adjoint_of_a_symplectic_form(self):
        report = check_involution(adjoint_involution(2, [[0, 1], [-1, 0]]))
        assert report.passed
        assert report.dims == {"A": 4, "H": 1, "S": 3}

    def test_singular_gram(self):
        with pytest.raises(PreconditionError):
            adjoint_involution(2, [[1, 1], [1, 1]])

    def test_gram_must_be_symmetric_or_skew(self):
        with pytest.raises(PreconditionError):
            adjoint_involution(2, [[1, 2], [3, 1]])


class TestClassical:
    def test_reference_dimensions(self, gl21):
        assert gl21.N == 5
        assert gl21.reference == "gl(5)"
        assert gl21.reference_dim == 25
        assert sp_example(1, 2).reference_dim == 10
        assert so_example(2, 3).reference_dim == 21

    def test_family_lookup(self):
        example = classical_example("sp", 2, 2)
        assert (example.jt.jdim, example.jt.tdim) == (3, 4)
        assert example.idempotent_label == "E11"

    def test_small_w_has_no_idempotent(self, gl11):
        assert gl11.idempotent is None
        assert gl11.idempotent_label is None

    def test_parity_preconditions(self):
        with pytest.raises(PreconditionError):
            sp_example(1, 3)
        with pytest.raises(PreconditionError):
            so_example(3, 1)

    def test_hermitian_module(self, gl21):
        report = check_hermitian(gl21.module)
        assert report.passed, report.failed_checks()
        assert report.check("skew-hermitian").passed

    def test_phi_identities(self, gl11):
        checks = check_phi_identities(gl11.module, gl11.jt)
        assert [c.name for c in checks] == ["phi-skew-derivation", "phi-adjoint", "d-versus-phi"]
        assert all(c.passed for c in checks)

    def test_extended_module(self, gl11):
        extended = extend_hermitian(gl11.module)
        assert extended.tdim == 2 * gl11.module.A.dim + gl11.module.tdim
        assert check_hermitian(extended).passed
        assert check_jt_axioms(prototypical(extended)).passed


class TestFullAlgebra:
    def test_gl11_is_gl3(self, gl11):
        full = full_lie_algebra(gl11)
        assert full.dim == gl11.reference_dim == 9
        assert check_jacobi(full.algebra).passed
        report = structure_report(full.algebra)
        assert report.dims == {"L": 9, "killing_rank": 8, "center": 1, "derived": 8}

    def test_gl11_contains_sl3(self, gl11):
        report = check_full_algebra(gl11)
        assert report.passed, report.failed_checks()
        assert report.dims == {"W": 6, "L(J,T)": 8, "full": 9}
        assert report.check("L(J,T) in full").note == (
            "generated subalgebra has dim 8, L(J,T) has dim 8"
        )

    def test_maps_are_skew(self, gl11):
        W = extend_hermitian(gl11.module)
        n = W.tdim
        for f in skew_endomorphisms(W):
            assert all(
                not add(W.form(f.image(x), W.t(y)), W.form(W.t(x), f.image(y)))
                for x in range(n)
                for y in range(n)
            )

    def test_sp22_equals_inner(self, sp22):
        report = check_full_algebra(sp22)
        assert report.passed, report.failed_checks()
        assert report.dims["full"] == report.dims["L(J,T)"] == 21


class TestComposition:
    @pytest.mark.parametrize("dim", [1, 2, 4, 8])
    def test_split_algebras(self, dim, field):
        C = split_composition(dim)
        assert C.norm == tuple(field(x) for x in SPLIT_OCTONION_NORMS[:dim])
        report = check_composition(C)
        assert report.passed, report.failed_checks()

    def test_invalid_dimension(self):
        with pytest.raises(PreconditionError):
            split_composition(3)

    def test_doubling_preconditions(self):
        with pytest.raises(PreconditionError):
            cayley_dickson(split_composition(2), 0)
        with pytest.raises(PreconditionError):
            cayley_dickson(split_composition(8))

    def test_nonsplit_quaternions(self, field):
        C = cayley_dickson(cayley_dickson(split_composition(1), -1), -1)
        assert C.norm == (field(1), field(1), field(1), field(1))
        assert check_composition(C).passed


@pytest.fixture(scope="module")
def octonions_over_field():
    return tensor_structurable(split_composition(8), split_composition(1))


class TestStructurable:
    def test_tensor_dims(self, octonions_over_field):
        A = octonions_over_field
        assert A.dim == 8
        assert A.skew.dim == 7
        assert A.s1_dim == 7

    def test_identity(self, octonions_over_field):
        report = check_structurable(octonions_over_field)
        assert report.passed, report.failed_checks()

    def test_s_prime(self, octonions_over_field, field):
        assert find_s_prime(octonions_over_field, {3: field.one}) == {3: -field.one}

    def test_s_prime_needs_a_skew_element(self, octonions_over_field, field):
        with pytest.raises(PreconditionError):
            find_s_prime(octonions_over_field, {0: field.one})

    def test_instrl(self, octonions_over_field):
        assert instrl(octonions_over_field).dim == 22

    def test_first_factor_must_be_octonions(self):
        with pytest.raises(PreconditionError):
            tensor_structurable(split_composition(4), split_composition(1))

    def test_ground_field(self):
        C = split_composition(1)
        A = InvolutiveAlgebra(C.algebra, C.conjugation)
        assert instrl(A).dim == 1
        K = kantor(A)
        assert K.algebra.dim == 3
        assert check_jacobi(K.algebra).passed
        checks = {c.name: c for c in K.checks}
        assert checks["[1,1~] = 2id"].passed
        assert checks["[1,1~] = 2id"].checked == 1

    def test_octonions_with_trivial_involution(self):
        C = split_composition(8)
        A = InvolutiveAlgebra(C.algebra, LinearMap.identity(C.field, C.algebra.space))
        report = check_structurable(A)
        assert not report.passed
        assert "anti-automorphism" in report.failed_checks()
