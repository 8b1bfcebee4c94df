from fractions import Fraction

import pytest

from nlie.core.algebra import (
    NLieAlgebra,
    abelian,
    bracket,
    change_basis,
    direct_sum,
    heisenberg,
    random_basis_change,
    sort_with_sign,
    validate,
)
from nlie.core.linalg import invert
from nlie.errors import AlgebraFormatError, ArityMismatchError, DimensionMismatchError, ParameterError


def test_sort_with_sign():
    assert sort_with_sign((2, 0, 1)) == (1, (0, 1, 2))
    assert sort_with_sign((1, 0)) == (-1, (0, 1))
    assert sort_with_sign((1, 1))[0] == 0


class TestBracket:
    def test_abelian_is_zero(self):
        algebra = abelian(3)
        assert bracket(algebra, [[1, 2, 3], [0, 1, 5]]) == (0, 0, 0)

    def test_heisenberg(self, h21):
        assert h21.bracket([[0, 1, 0], [0, 0, 1]]) == (1, 0, 0)
        assert h21.bracket([[0, 0, 1], [0, 1, 0]]) == (-1, 0, 0)

    def test_equal_arguments_vanish(self, h21):
        v = [Fraction(1, 2), 3, -1]
        assert h21.bracket([v, v]) == (0, 0, 0)

    def test_multilinear(self, h21):
        u, v = [0, 2, 1], [0, 1, 3]
        # [u, v] = (2*3 - 1*1) x
        assert h21.bracket([u, v]) == (5, 0, 0)

    def test_ternary(self):
        algebra = heisenberg(3, 1)
        assert algebra.bracket([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]) == (1, 0, 0, 0)
        assert algebra.basis_bracket([3, 1, 2]) == {0: 1}
        assert algebra.basis_bracket([2, 1, 3]) == {0: -1}

    def test_wrong_arity(self, h21):
        with pytest.raises(ArityMismatchError):
            h21.bracket([[0, 1, 0]])

    def test_wrong_length(self, h21):
        with pytest.raises(DimensionMismatchError):
            h21.bracket([[0, 1], [1, 0]])

    def test_minor_expansion_matches_determinant(self):
        algebra = direct_sum(heisenberg(3, 2), heisenberg(3, 1))
        vectors = [
            [1, 2, 0, -1, 3, 1, 0, 2, 1, 1, 0],
            [0, 1, 1, 2, -2, 0, 1, 1, 0, 3, 1],
            [2, 0, 1, 1, 1, 1, -1, 0, 2, 0, 1],
        ]
        sparse = [{i: Fraction(v) for i, v in enumerate(vec) if v} for vec in vectors]
        expected = {}
        for key, image in algebra.table.items():
            minor = Fraction(0)
            a, b, c = key
            for (p, q, r), sign in (((a, b, c), 1), ((b, c, a), 1), ((c, a, b), 1),
                                    ((b, a, c), -1), ((a, c, b), -1), ((c, b, a), -1)):
                minor += sign * sparse[0].get(p, 0) * sparse[1].get(q, 0) * sparse[2].get(r, 0)
            for k, v in image.items():
                expected[k] = expected.get(k, 0) + minor * v
        expected = {k: v for k, v in expected.items() if v}
        assert algebra.bracket_sparse(sparse) == expected


class TestConstruction:
    def test_heisenberg_shape(self):
        algebra = heisenberg(3, 2)
        assert algebra.dim == 7
        assert algebra.labels[0] == "x"
        assert algebra.table == {(1, 2, 3): {0: 1}, (4, 5, 6): {0: 1}}

    def test_zero_algebra(self):
        algebra = abelian(0)
        assert algebra.dim == 0
        assert algebra.validate().is_valid

    def test_default_labels(self):
        assert NLieAlgebra(2, 2).labels == ("e1", "e2")

    def test_constants_normalized(self):
        first = NLieAlgebra(2, 3, {(0, 1): {2: "1/2"}, (1, 2): {0: 0}})
        second = NLieAlgebra(2, 3, [((0, 1), [(2, Fraction(1, 2))])])
        assert first == second
        assert first.constants == (((0, 1), ((2, Fraction(1, 2)),)),)

    def test_rejects_unsorted_key(self):
        with pytest.raises(AlgebraFormatError):
            NLieAlgebra(2, 3, {(1, 0): {2: 1}})

    def test_rejects_wrong_arity(self):
        with pytest.raises(ArityMismatchError):
            NLieAlgebra(3, 4, {(0, 1): {2: 1}})

    def test_rejects_index_out_of_range(self):
        with pytest.raises(DimensionMismatchError):
            NLieAlgebra(2, 3, {(0, 3): {1: 1}})
        with pytest.raises(DimensionMismatchError):
            NLieAlgebra(2, 3, {(0, 1): {5: 1}})

    def test_rejects_bad_parameters(self):
        with pytest.raises(ParameterError):
            heisenberg(1, 1)
        with pytest.raises(ParameterError):
            heisenberg(2, 0)
        with pytest.raises(ParameterError):
            NLieAlgebra(1, 2)


class TestValidate:
    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_heisenberg_is_valid(self, n, m):
        assert validate(heisenberg(n, m)).is_valid

    @pytest.mark.parametrize("d,n", [(0, 2), (3, 2), (5, 3), (4, 4)])
    def test_abelian_is_valid(self, d, n):
        assert abelian(d, n).validate().is_valid

    def test_fixtures_are_valid(self, fixture_algebras):
        for name, algebra in fixture_algebras.items():
            assert algebra.validate().is_valid, name

    def test_direct_sums_of_fixtures(self, fixture_algebras):
        binary = [a for a in fixture_algebras.values() if a.arity == 2]
        for first in binary:
            for second in binary:
                assert direct_sum(first, second).validate().is_valid

    def test_perturbed_heisenberg(self, perturbed_h21):
        report = perturbed_h21.validate()
        assert report.skew_ok
        assert not report.jacobi_ok
        assert not report.is_valid
        assert report.violations[0] == ((0, 1), (2,))
        assert set(report.violations) == {((0, 1), (2,)), ((0, 2), (1,)), ((1, 2), (0,))}

    def test_sl2_is_valid(self):
        # e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f
        sl2 = NLieAlgebra(2, 3, {(0, 1): {2: 1}, (0, 2): {0: -2}, (1, 2): {1: 2}})
        assert sl2.validate().is_valid

    def test_ternary_simple_algebra_is_valid(self):
        # the 4-dimensional simple 3-Lie algebra: each bracket is the missing basis vector up to sign
        constants = {
            (1, 2, 3): {0: 1},
            (0, 2, 3): {1: -1},
            (0, 1, 3): {2: 1},
            (0, 1, 2): {3: -1},
        }
        assert NLieAlgebra(3, 4, constants).validate().is_valid


class TestDirectSum:
    def test_shape(self):
        algebra = direct_sum(heisenberg(2, 1), abelian(2, 2))
        assert algebra.dim == 5
        assert algebra.labels == ("x", "x1", "x2", "x1", "x2")
        assert algebra.table == {(1, 2): {0: 1}}

    def test_abelian_sum(self):
        assert direct_sum(abelian(2, 3), abelian(4, 3)).constants == abelian(6, 3).constants
        assert direct_sum(abelian(2, 3), abelian(4, 3)).dim == 6

    def test_shifted_indices(self):
        algebra = direct_sum(heisenberg(3, 1), heisenberg(3, 1))
        assert algebra.table == {(1, 2, 3): {0: 1}, (5, 6, 7): {4: 1}}

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            direct_sum(heisenberg(2, 1), heisenberg(3, 1))


class TestChangeBasis:
    def test_identity(self, h21):
        identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        changed = change_basis(h21, identity)
        assert changed.table == h21.table
        assert changed.labels == ("e1", "e2", "e3")

    def test_swap(self, h21):
        swapped = change_basis(h21, [[1, 0, 0], [0, 0, 1], [0, 1, 0]])
        assert swapped.table == {(1, 2): {0: -1}}

    def test_scaling_the_centre(self, h21):
        scaled = change_basis(h21, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert scaled.table == {(1, 2): {0: Fraction(1, 2)}}

    def test_round_trip(self):
        algebra = direct_sum(heisenberg(3, 1), abelian(1, 3))
        conjugated, matrix = random_basis_change(algebra, seed=7)
        assert conjugated.validate().is_valid
        back = change_basis(conjugated, invert(matrix))
        assert back.constants == algebra.constants

    def test_seeded(self, h21):
        assert random_basis_change(h21, seed=3) == random_basis_change(h21, seed=3)

    def test_singular(self, h21):
        with pytest.raises(ParameterError):
            change_basis(h21, [[1, 0, 0], [1, 0, 0], [0, 0, 1]])
