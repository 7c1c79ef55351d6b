"""Jordan identity, idempotents and Peirce decompositions."""

import pytest

from isotype.catalog import exchange_algebra, jordan_plus, matrix_algebra
from isotype.errors import NotIdempotentError, PreconditionError
from isotype.exactlinalg.scalars import Field
from isotype.jordan import (
    JordanAlgebra,
    check_inner_derivations,
    check_jordan,
    check_peirce_rules,
    inner_derivation_D,
    is_idempotent,
    peirce_decompose,
)


@pytest.fixture(scope="module")
def m2_plus() -> JordanAlgebra:
    """M2(F)+ as the symmetric part of the exchange algebra; H[k] ↔ E11, E12, E21, E22."""
    return jordan_plus(exchange_algebra(2))


def test_matrix_jordan_algebra_passes(m2_plus):
    report = check_jordan(m2_plus)
    assert report.passed, report.failed_checks()
    assert report.dims == {"J": 4}
    assert m2_plus.one == {0: m2_plus.field.one, 3: m2_plus.field.one}


def test_matrix_jordan_algebra_over_prime_field():
    J = jordan_plus(exchange_algebra(2, Field(7)))
    assert check_jordan(J).passed


def test_associative_product_is_not_commutative():
    report = check_jordan(matrix_algebra(2))
    assert not report.passed
    commutativity = report.check("commutativity")
    assert commutativity.witness == ["E11", "E12"]
    assert report.witness == ["E11", "E12"]


def test_jordan_algebra_needs_a_unit():
    A = matrix_algebra(2)
    with pytest.raises(PreconditionError):
        JordanAlgebra(A.field, A.space, A.product, None, "no unit")


def test_inner_derivations(m2_plus):
    checks = check_inner_derivations(m2_plus)
    assert [c.name for c in checks] == ["D-cyclic", "D-derivation"]
    assert all(c.passed for c in checks)


def test_D_of_a_with_itself_vanishes(m2_plus):
    a = (1, 2, 0, 5)
    one = m2_plus.field.one
    dense = tuple(m2_plus.field(c) for c in a)
    assert inner_derivation_D(m2_plus, dense, dense).is_zero()
    assert not inner_derivation_D(m2_plus, {0: one}, {1: one}).is_zero()


class TestPeirce:
    def test_matrix_unit_idempotent(self, m2_plus):
        e = {0: m2_plus.field.one}
        peirce = peirce_decompose(m2_plus, e)
        assert peirce.dims == (1, 2, 1)
        one = m2_plus.field.one
        assert peirce.one.basis == [{0: one}]
        assert peirce.half.basis == [{1: one}, {2: one}]
        assert peirce.zero.basis == [{3: one}]
        assert peirce.part("1/2") is peirce.half

    def test_multiplication_rules(self, m2_plus):
        peirce = peirce_decompose(m2_plus, {0: m2_plus.field.one})
        checks = check_peirce_rules(m2_plus, peirce)
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]
        assert "J1*J0=0" in [c.name for c in checks]

    def test_unit_is_an_improper_idempotent(self, m2_plus):
        check = is_idempotent(m2_plus, m2_plus.one)
        assert check.idempotent
        assert not check.proper
        assert check.complement == {}
        assert peirce_decompose(m2_plus, m2_plus.one).dims == (4, 0, 0)

    def test_nilpotent_is_rejected(self, m2_plus):
        e12 = {1: m2_plus.field.one}
        assert not is_idempotent(m2_plus, e12).idempotent
        with pytest.raises(NotIdempotentError):
            peirce_decompose(m2_plus, e12)
