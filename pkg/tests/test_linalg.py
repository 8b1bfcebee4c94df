from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlie.core.linalg import (
    Subspace,
    determinant,
    fraction_free_reduce,
    invert,
    nullspace,
    rank,
    rational_eigenspaces,
    row_reduce,
    to_fraction,
)
from nlie.errors import DimensionMismatchError, ParameterError


class TestToFraction:
    def test_strings(self):
        assert to_fraction("-1/2") == Fraction(-1, 2)
        assert to_fraction(" 3 ") == Fraction(3)
        assert to_fraction("0.25") == Fraction(1, 4)

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            to_fraction(0.5)

    def test_reduced(self):
        value = to_fraction("4/6")
        assert (value.numerator, value.denominator) == (2, 3)


class TestRowReduce:
    def test_pivots_and_rows(self):
        rows, pivots = row_reduce([{0: 2, 1: 4}, {0: 1, 1: 2}, {2: 3}], 3)
        assert pivots == (0, 2)
        assert rows == [{0: 1, 1: 2}, {2: 1}]

    def test_empty(self):
        assert row_reduce([], 4) == ([], ())
        assert row_reduce([{}, {}], 2) == ([], ())

    def test_rank(self):
        assert rank([{0: 1, 1: 1}, {0: 2, 1: 2}], 2) == 1

    def test_fraction_free(self):
        rows, denominator, pivots = fraction_free_reduce([{0: 2, 1: 1}, {0: 1, 1: 1}], 2)
        assert pivots == (0, 1)
        assert all(row[p] == denominator for row, p in zip(rows, pivots))


class TestNullspace:
    def test_kernel_vectors_annihilate(self):
        rows = [{0: 1, 1: 1, 2: 1}]
        kernel = nullspace(rows, 3)
        assert len(kernel) == 2
        for vector in kernel:
            assert sum(vector.get(j, 0) for j in range(3)) == 0

    def test_no_rows_gives_everything(self):
        assert len(nullspace([], 3)) == 3


class TestSquareMatrices:
    def test_determinant_and_inverse(self):
        matrix = [[2, 1], [1, 1]]
        assert determinant(matrix) == 1
        assert invert(matrix) == [[1, -1], [-1, 2]]

    def test_singular(self):
        with pytest.raises(ParameterError):
            invert([[1, 2], [2, 4]])

    def test_not_square(self):
        with pytest.raises(DimensionMismatchError):
            determinant([[1, 2]])

    def test_eigenspaces(self):
        spaces = rational_eigenspaces([[2, 0], [0, 3]])
        assert [value for value, _ in spaces] == [2, 3]
        assert spaces[0][1] == Subspace.span([[1, 0]], 2)

    def test_eigenspaces_need_rational_roots(self):
        with pytest.raises(ParameterError):
            rational_eigenspaces([[0, 1], [2, 0]])


class TestSubspace:
    def test_canonical(self):
        first = Subspace.span([[1, 1, 0], [0, 1, 0]], 3)
        second = Subspace.span([[1, 0, 0], [0, 2, 0]], 3)
        assert first == second
        assert first.dim == 2
        assert first.pivots == (0, 1)

    def test_contains_and_reduce(self):
        space = Subspace.span([[1, 1, 0]], 3)
        assert space.contains([2, 2, 0])
        assert not space.contains([1, 0, 0])
        assert space.reduce([1, 0, 0]) == {1: -1}

    def test_intersection(self):
        plane = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
        other = Subspace.span([[0, 1, 0], [0, 0, 1]], 3)
        assert plane.intersection(other) == Subspace.span([[0, 1, 0]], 3)

    def test_annihilator(self):
        line = Subspace.span([[1, 1]], 2)
        assert line.annihilator() == Subspace.span([[1, -1]], 2)

    def test_full_and_zero(self):
        assert Subspace.full(3).dim == 3
        assert Subspace.zero(3).is_zero()
        assert Subspace.zero(3).is_subspace_of(Subspace.full(3))

    @settings(max_examples=30, deadline=None)
    @given(
        st.lists(
            st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=0, max_size=5
        )
    )
    def test_span_is_idempotent(self, vectors):
        space = Subspace.span(vectors, 4)
        assert Subspace.span(space.basis, 4) == space
        assert all(space.contains(v) for v in vectors)
        assert space.dim == rank([dict(enumerate(v)) for v in vectors], 4)
