"""Exact scalars, spaces, maps and elimination."""

import pytest

from isotype.errors import (
    DimensionMismatchError,
    FieldError,
    FieldMismatchError,
    InconsistentSystemError,
)
from isotype.exactlinalg.echelon import (
    Subspace,
    eigenspace,
    inverse,
    kernel,
    null_space,
    rank,
    solve_exact,
    span_basis,
)
from isotype.exactlinalg.maps import BilinearMap, LinearMap, TrilinearMap, apply_bilinear
from isotype.exactlinalg.scalars import QQ_FIELD, Field, parse_scalar
from isotype.exactlinalg.spaces import Space, direct_sum, tensor_space
from isotype.exactlinalg.vectors import add, combine, scale, sub, to_dense, to_sparse

Q = QQ_FIELD


class TestFields:
    def test_parse_descriptors(self):
        assert Field.parse("Q") == Q
        assert Field.parse("QQ").name == "Q"
        assert Field.parse("GF(7)").characteristic == 7
        assert Field.parse("F11").characteristic == 11
        assert Field.parse("Z/13").name == "GF(13)"

    @pytest.mark.parametrize("text", ["GF(2)", "GF(3)", "GF(9)", "R", "GF(-5)"])
    def test_rejected_fields(self, text):
        with pytest.raises(FieldError):
            Field.parse(text)

    def test_scalars_are_reduced(self):
        assert str(parse_scalar("6/4")) == "3/2"
        assert str(parse_scalar("-0/5")) == "0"
        assert str(parse_scalar("-1/2", "GF(7)")) == "3"

    @pytest.mark.parametrize("text", ["1.5", "1/", "/2", "x", ""])
    def test_malformed_scalars(self, text):
        with pytest.raises(FieldError):
            parse_scalar(text)

    def test_vanishing_denominator(self):
        with pytest.raises(FieldError):
            Q(1, 0)
        with pytest.raises(FieldError):
            Field(7)(1, 14)

    def test_mixed_fields_are_rejected(self):
        with pytest.raises(FieldMismatchError):
            parse_scalar("1", "GF(5)") + parse_scalar("1", "GF(7)")

    def test_scalar_arithmetic(self):
        a, b = parse_scalar("1/2"), parse_scalar("1/3")
        assert str(a + b) == "5/6"
        assert str(a * b) == "1/6"
        assert str((a - b).inverse()) == "6"
        with pytest.raises(ZeroDivisionError):
            a / parse_scalar("0")


class TestSpaces:
    def test_tensor_order(self):
        U = Space(("u1", "u2"))
        V = Space(("v1", "v2", "v3"))
        W = tensor_space(U, V)
        assert W.dim == 6
        assert W.labels[:4] == ("u1⊗v1", "u1⊗v2", "u1⊗v3", "u2⊗v1")

    def test_zero_dimensional_factor(self):
        assert tensor_space(Space(()), Space(("v",))).dim == 0

    def test_direct_sum_qualifies_colliding_labels(self):
        S = direct_sum([Space(("a", "b"), "X"), Space(("a",), "Y")])
        assert S.labels == ("X.a", "X.b", "Y.a")

    def test_duplicate_labels(self):
        with pytest.raises(ValueError):
            Space(("a", "a"))

    def test_index(self):
        assert Space.of_dim(3).index("b2") == 2
        with pytest.raises(KeyError):
            Space.of_dim(3).index("c")


class TestVectors:
    def test_cancellation_drops_entries(self):
        assert add({0: Q(1)}, {0: Q(-1), 1: Q(2)}) == {1: Q(2)}
        assert sub({0: Q(1)}, {0: Q(1)}) == {}
        assert scale({0: Q(3)}, Q(0)) == {}
        assert combine([(Q(2), {0: Q(1)}), (Q(-1), {0: Q(2)})]) == {}

    def test_dense_round_trip(self):
        v = to_dense({2: Q(1, 2)}, 3, Q)
        assert v == (Q(0), Q(0), Q(1, 2))
        assert to_sparse(v) == {2: Q(1, 2)}
        with pytest.raises(DimensionMismatchError):
            to_dense({3: Q(1)}, 3, Q)


class TestElimination:
    def test_null_space_free_variable_form(self):
        assert null_space(Q, [{0: Q(1), 1: Q(1)}], 2) == [{1: Q(1), 0: Q(-1)}]

    def test_kernel_of_columns(self):
        # columns (1,0), (0,1), (1,1)
        columns = [{0: Q(1)}, {1: Q(1)}, {0: Q(1), 1: Q(1)}]
        (v,) = kernel(Q, columns, 2)
        assert v == {2: Q(1), 0: Q(-1), 1: Q(-1)}

    def test_rank_and_span_basis(self):
        vectors = [{0: Q(1)}, {0: Q(2)}, {1: Q(1)}]
        assert rank(Q, vectors, 2) == 2
        assert span_basis(Q, vectors, 2) == [0, 2]

    def test_inverse(self):
        rows = [{0: Q(2)}, {0: Q(1), 1: Q(1)}]
        assert inverse(Q, rows, 2) == [{0: Q(1, 2)}, {0: Q(-1, 2), 1: Q(1)}]
        with pytest.raises(InconsistentSystemError):
            inverse(Q, [{0: Q(1)}, {0: Q(2)}], 2)

    def test_solve_exact(self):
        rows = [(Q(1), Q(0)), (Q(0), Q(1)), (Q(1), Q(1))]
        result = solve_exact(rows, (Q(2), Q(3)))
        assert result.rank == 2
        assert len(result.kernel) == 1
        assert result.solution is not None
        lam = result.solution
        total = [sum((c * row[k] for c, row in zip(lam, rows)), Q(0)) for k in range(2)]
        assert total == [Q(2), Q(3)]

    def test_solve_inconsistent(self):
        with pytest.raises(InconsistentSystemError):
            solve_exact([(Q(1), Q(0))], (Q(0), Q(1)))

    def test_solve_over_prime_field(self):
        F7 = Field(7)
        result = solve_exact([(F7(2),)], (F7(1),), F7)
        assert result.solution == (F7(4),)

    def test_eigenspace(self):
        # diag(1, 2)
        columns = [{0: Q(1)}, {1: Q(2)}]
        assert eigenspace(Q, columns, Q(2), 2) == [{1: Q(1)}]
        assert eigenspace(Q, columns, Q(3), 2) == []


class TestSubspace:
    def test_coordinates_in_given_basis(self):
        S = Subspace(Q, 3, [{0: Q(1), 1: Q(1)}, {1: Q(1)}])
        assert S.coordinates({0: Q(2), 1: Q(3)}) == {0: Q(2), 1: Q(1)}
        assert S.coordinates({2: Q(1)}) is None
        assert S.lift({0: Q(2), 1: Q(1)}) == {0: Q(2), 1: Q(3)}

    def test_dependent_basis(self):
        with pytest.raises(ValueError):
            Subspace(Q, 2, [{0: Q(1)}, {0: Q(2)}])

    def test_spanned_by_keeps_first_independent(self):
        S = Subspace.spanned_by(Q, 2, [{0: Q(1)}, {0: Q(3)}, {1: Q(1)}])
        assert S.basis == [{0: Q(1)}, {1: Q(1)}]

    def test_labels(self):
        S = Subspace(Q, 2, [{1: Q(1)}, {0: Q(1), 1: Q(1)}])
        assert S.basis_labels(("x", "y"), "S") == ("y", "S[1]")


class TestMaps:
    def test_entries_add_up_and_zeros_vanish(self):
        V = Space(("a", "b"))
        B = BilinearMap.from_entries(
            Q, (V, V), V, [((0, 1), 0, Q(1)), ((0, 1), 0, Q(-1)), ((1, 1), 1, Q(2))]
        )
        assert B.table == {(1, 1): {1: Q(2)}}
        assert B.apply_sparse({1: Q(1)}, {1: Q(3)}) == {1: Q(6)}

    def test_apply_bilinear(self):
        V = Space(("p", "q"))
        # (x, z) -> (x|z)p on a symplectic pair, (p|q) = 1
        B = BilinearMap.from_entries(Q, (V, V), V, [((0, 1), 0, Q(1)), ((1, 0), 0, Q(-1))])
        assert apply_bilinear(B, (Q(2), Q(0)), (Q(0), Q(1))) == (Q(2), Q(0))
        assert apply_bilinear(B, (Q(0), Q(0)), (Q(1), Q(1))) == (Q(0), Q(0))
        with pytest.raises(DimensionMismatchError):
            apply_bilinear(TrilinearMap(Q, (V, V, V), V, {}), (Q(1), Q(0)), (Q(0), Q(1)))

    def test_index_checks(self):
        V = Space(("a",))
        with pytest.raises(DimensionMismatchError):
            BilinearMap.from_entries(Q, (V, V), V, [((0, 1), 0, Q(1))])

    def test_linear_map_algebra(self):
        V = Space(("a", "b"))
        X = LinearMap(Q, V, V, {0: {1: Q(1)}})  # a -> b
        Y = LinearMap(Q, V, V, {1: {0: Q(1)}})  # b -> a
        assert X.compose(Y) == LinearMap(Q, V, V, {1: {1: Q(1)}})
        assert X.commutator(Y).trace() == Q(0)
        assert (X + Y).apply((Q(1), Q(2))) == (Q(2), Q(1))
        assert LinearMap.unflatten(Q, V, V, X.flatten()) == X
        assert (X - X).is_zero()
