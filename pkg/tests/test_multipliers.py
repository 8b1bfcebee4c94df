import pytest

from nlie.core.algebra import NLieAlgebra, abelian, direct_sum, heisenberg, random_basis_change
from nlie.counting.basic import basic_count
from nlie.counting.multipliers import (
    EXACT,
    UPPER_BOUND,
    bound_2multiplier_dimL2_k,
    dim_2multiplier_dimL2_one,
    dim_2multiplier_direct_sum,
    dim_2multiplier_heisenberg,
    dim_2multiplier_of_algebra,
    dim_2multiplier_of_direct_sum,
    dim_multiplier_abelian,
    dim_multiplier_heisenberg,
    dim_schur_multiplier_abelian,
    estimate_2multiplier,
)
from nlie.errors import NotNilpotentError, ParameterError, UnsupportedAlgebraError

GRID = [(d, n) for n in range(2, 5) for d in range(n + 1, 10)]


class TestAbelian:
    @pytest.mark.parametrize("d,n,c", [(4, 2, 2), (3, 3, 2), (6, 4, 3)])
    def test_is_next_count(self, d, n, c):
        assert dim_multiplier_abelian(d, n, c).value == basic_count(d, n, c + 1)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_schur_of_n_generators(self, n):
        assert dim_multiplier_abelian(n, n, 1).value == 1

    def test_zero_algebra(self):
        assert dim_multiplier_abelian(0, 3, 2).value == 0

    def test_schur(self):
        assert dim_schur_multiplier_abelian(4, 2).value == 6
        assert dim_schur_multiplier_abelian(5, 3).value == 10
        assert dim_schur_multiplier_abelian(4, 2).source == "abelian Schur multiplier"

    def test_rejects_bad_parameters(self):
        with pytest.raises(ParameterError):
            dim_multiplier_abelian(3, 2, 0)
        with pytest.raises(ParameterError):
            dim_multiplier_abelian(-1, 2, 1)


class TestHeisenberg:
    def test_schur(self):
        assert dim_multiplier_heisenberg(2, 1).value == 2
        assert dim_multiplier_heisenberg(3, 2).value == 19
        assert dim_multiplier_heisenberg(2, 2).value == 5

    def test_two_multiplier(self):
        assert dim_2multiplier_heisenberg(2, 1).value == 5
        assert dim_2multiplier_heisenberg(3, 1).value == 9
        assert dim_2multiplier_heisenberg(2, 2).value == 24

    def test_kind(self):
        assert dim_2multiplier_heisenberg(2, 1).kind == EXACT

    def test_rejects_bad_parameters(self):
        with pytest.raises(ParameterError):
            dim_2multiplier_heisenberg(2, 0)
        with pytest.raises(ParameterError):
            dim_multiplier_heisenberg(1, 1)


class TestDirectSum:
    def test_trivial_summand(self):
        assert dim_2multiplier_direct_sum(7, 0, 3, 0, 2).value == 7

    def test_two_lines(self):
        assert dim_2multiplier_direct_sum(0, 0, 1, 1, 2).value == 2
        assert dim_2multiplier_direct_sum(0, 0, 1, 1, 2).value == basic_count(2, 2, 3)

    def test_heisenberg_plus_plane(self):
        assert dim_2multiplier_direct_sum(5, 2, 2, 2, 2).value == 23

    def test_rejects_negative(self):
        with pytest.raises(ParameterError):
            dim_2multiplier_direct_sum(1, -1, 1, 1, 2)


class TestDimL2One:
    def test_values(self):
        assert dim_2multiplier_dimL2_one(5, 2, 1).value == 23
        assert dim_2multiplier_dimL2_one(5, 2, 2).value == 24

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_no_complement(self, n):
        assert dim_2multiplier_dimL2_one(n + 1, n, 1).value == (n * n + 3 * n) // 2

    def test_too_small(self):
        with pytest.raises(ParameterError):
            dim_2multiplier_dimL2_one(4, 2, 2)

    @pytest.mark.parametrize("d,n", GRID)
    def test_matches_direct_sum_composition(self, d, n):
        composed = dim_2multiplier_direct_sum(
            dim_2multiplier_heisenberg(n, 1).value,
            dim_multiplier_abelian(d - n - 1, n, 2).value,
            n,
            d - n - 1,
            n,
        )
        assert dim_2multiplier_dimL2_one(d, n, 1).value == composed.value


class TestBound:
    def test_value(self):
        result = bound_2multiplier_dimL2_k(5, 2, 2)
        assert result.value == 19
        assert result.kind == UPPER_BOUND

    def test_grows_with_dimension(self):
        assert bound_2multiplier_dimL2_k(6, 2, 2).value >= bound_2multiplier_dimL2_k(5, 2, 2).value

    @pytest.mark.parametrize("d,n", GRID)
    def test_dominates_exact_value(self, d, n):
        assert bound_2multiplier_dimL2_k(d, n, 1).value >= dim_2multiplier_dimL2_one(d, n, 1).value

    def test_rejects_bad_parameters(self):
        with pytest.raises(ParameterError):
            bound_2multiplier_dimL2_k(5, 2, 0)
        with pytest.raises(ParameterError):
            bound_2multiplier_dimL2_k(3, 2, 2)


@pytest.mark.parametrize(
    "result",
    [
        dim_2multiplier_dimL2_one(9, 3, 2),
        bound_2multiplier_dimL2_k(9, 4, 3),
        dim_multiplier_heisenberg(4, 2),
        dim_2multiplier_direct_sum(3, 4, 2, 5, 3),
    ],
)
def test_traces_resum(result):
    assert result.value >= 0
    assert sum(value for _, value in result.trace) == result.value
    data = result.to_dict()
    assert list(data) == ["kind", "value", "source", "trace"]
    assert sum(term["value"] for term in data["trace"]) == result.value


class TestConcreteAlgebras:
    def test_heisenberg(self, h21):
        assert dim_2multiplier_of_algebra(h21).value == 5

    def test_conjugated_sum(self):
        algebra, _ = random_basis_change(direct_sum(heisenberg(2, 1), abelian(2, 2)), seed=11)
        assert dim_2multiplier_of_algebra(algebra).value == 23

    def test_abelian_is_unsupported(self):
        with pytest.raises(UnsupportedAlgebraError):
            dim_2multiplier_of_algebra(abelian(4, 2))

    def test_sum_of_concrete_algebras(self):
        result = dim_2multiplier_of_direct_sum(heisenberg(2, 1), abelian(2, 2))
        assert result.value == 23
        assert result.value == dim_2multiplier_of_algebra(
            direct_sum(heisenberg(2, 1), abelian(2, 2))
        ).value

    def test_sum_with_large_derived_algebra(self):
        with pytest.raises(UnsupportedAlgebraError):
            dim_2multiplier_of_direct_sum(heisenberg(2, 1), direct_sum(heisenberg(2, 1), heisenberg(2, 1)))

    def test_estimate(self):
        assert estimate_2multiplier(abelian(3, 2)).value == basic_count(3, 2, 3)
        assert estimate_2multiplier(heisenberg(3, 1)).value == 9
        bound = estimate_2multiplier(direct_sum(heisenberg(2, 1), heisenberg(2, 1)))
        assert bound.kind == UPPER_BOUND
        assert bound.value == bound_2multiplier_dimL2_k(6, 2, 2).value

    def test_estimate_needs_nilpotent(self):
        sl2 = NLieAlgebra(2, 3, {(0, 1): {2: 1}, (0, 2): {0: -2}, (1, 2): {1: 2}})
        with pytest.raises(NotNilpotentError):
            estimate_2multiplier(sl2)
