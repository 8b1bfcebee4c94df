"""Dimensions of Schur and c-nilpotent multipliers from closed forms."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..core.algebra import NLieAlgebra
from ..core.invariants import derived_subalgebra, nilpotency_class
from ..errors import ArityMismatchError, NotNilpotentError, ParameterError, UnsupportedAlgebraError
from ..structure.decompose import Decomposition, decompose_dim1_derived
from .basic import basic_count, binom, dim_modular_tensor_triple

logger = logging.getLogger(__name__)

EXACT = "exact"
UPPER_BOUND = "upper_bound"


@dataclass
class MultiplierResult:
    """
    A multiplier dimension with the summands it was assembled from.

    The trace values always add up to value.
    """

    kind: str
    value: int
    trace: List[Tuple[str, int]] = field(default_factory=list)
    source: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "source": self.source,
            "trace": [{"term": label, "value": value} for label, value in self.trace],
        }


def _result(kind: str, trace: List[Tuple[str, int]], source: str) -> MultiplierResult:
    value = sum(v for _, v in trace)
    if value < 0:
        logger.warning("%s evaluates to a negative dimension %d", source, value)
    return MultiplierResult(kind=kind, value=value, trace=trace, source=source)


def _check_arity(n: int) -> None:
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")


def _heisenberg_term(n: int) -> Tuple[str, int]:
    return ("(n^2+3n)/2", (n * n + 3 * n) // 2)


def dim_multiplier_abelian(d: int, n: int, c: int) -> MultiplierResult:
    """dim M^(c)(F(d)) = l_d^n(c+1)."""
    _check_arity(n)
    if d < 0:
        raise ParameterError(f"d must be non-negative, got {d}")
    if c < 1:
        raise ParameterError(f"c must be at least 1, got {c}")
    term = (f"l({d},{n},{c + 1})", basic_count(d, n, c + 1))
    return _result(EXACT, [term], "abelian c-nilpotent multiplier")


def dim_schur_multiplier_abelian(d: int, n: int) -> MultiplierResult:
    """dim M(F(d)) = C(d, n)."""
    result = dim_multiplier_abelian(d, n, 1)
    result.source = "abelian Schur multiplier"
    return result


def dim_multiplier_heisenberg(n: int, m: int) -> MultiplierResult:
    """Schur multiplier of H(n, m): n when m = 1, C(mn, n) - 1 otherwise."""
    _check_arity(n)
    if m < 1:
        raise ParameterError(f"m must be at least 1, got {m}")
    if m == 1:
        trace = [("n", n)]
    else:
        trace = [(f"C({m * n},{n})", binom(m * n, n)), ("-1", -1)]
    return _result(EXACT, trace, "Heisenberg Schur multiplier")


def dim_2multiplier_heisenberg(n: int, m: int) -> MultiplierResult:
    """2-nilpotent multiplier of H(n, m): (n^2+3n)/2 when m = 1, l_{mn}^n(3) otherwise."""
    _check_arity(n)
    if m < 1:
        raise ParameterError(f"m must be at least 1, got {m}")
    if m == 1:
        trace = [_heisenberg_term(n)]
    else:
        trace = [(f"l({m * n},{n},3)", basic_count(m * n, n, 3))]
    return _result(EXACT, trace, "Heisenberg 2-nilpotent multiplier")


def dim_2multiplier_direct_sum(
    dim_m2_l: int,
    dim_m2_m: int,
    dim_l_ab: int,
    dim_m_ab: int,
    n: int,
) -> MultiplierResult:
    """
    2-nilpotent multiplier of L + M from the summands' data.

    M^(2)(L) + M^(2)(M) + (L^ab (x) L^ab) (x) M^ab + (M^ab (x) M^ab) (x) L^ab
    """
    _check_arity(n)
    if min(dim_m2_l, dim_m2_m, dim_l_ab, dim_m_ab) < 0:
        raise ParameterError("dimensions must be non-negative")
    trace = [
        ("M2(L)", dim_m2_l),
        ("M2(M)", dim_m2_m),
        ("(Lab x Lab) x Mab", dim_modular_tensor_triple(dim_l_ab, dim_m_ab, n)),
        ("(Mab x Mab) x Lab", dim_modular_tensor_triple(dim_m_ab, dim_l_ab, n)),
    ]
    return _result(EXACT, trace, "direct sum 2-nilpotent multiplier")


def dim_2multiplier_dimL2_one(d: int, n: int, m: int) -> MultiplierResult:
    """
    2-nilpotent multiplier of a d-dimensional nilpotent algebra with dim L^2 = 1.

    Such an algebra is H(n, m) + F(d - mn - 1).

    Raises:
        ParameterError: if d < mn + 1
    """
    _check_arity(n)
    if m < 1:
        raise ParameterError(f"m must be at least 1, got {m}")
    if d < m * n + 1:
        raise ParameterError(f"d = {d} is smaller than mn + 1 = {m * n + 1}")

    rest = d - m * n - 1
    if m == 1:
        trace = [_heisenberg_term(n)]
    else:
        trace = [(f"l({m * n},{n},3)", basic_count(m * n, n, 3))]
    trace += [
        (f"l({rest},{n},3)", basic_count(rest, n, 3)),
        ("heisenberg x complement", dim_modular_tensor_triple(m * n, rest, n)),
        ("complement x heisenberg", dim_modular_tensor_triple(rest, m * n, n)),
    ]
    return _result(EXACT, trace, "dim L^2 = 1 2-nilpotent multiplier")


def bound_2multiplier_dimL2_k(d: int, n: int, k: int) -> MultiplierResult:
    """
    Upper bound for the 2-nilpotent multiplier when dim L^2 = k.

    Raises:
        ParameterError: if k < 1 or d < n + k
    """
    _check_arity(n)
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    if d < n + k:
        raise ParameterError(f"d = {d} is smaller than n + k = {n + k}")

    rest = d - n - k
    trace = [
        _heisenberg_term(n),
        (f"l({rest},{n},3)", basic_count(rest, n, 3)),
        ("heisenberg x complement", dim_modular_tensor_triple(n, rest, n)),
        ("complement x heisenberg", dim_modular_tensor_triple(rest, n, n)),
        (f"({d - k})^{2 * n - 2}", (d - k) ** (2 * n - 2)),
        ("-k+1", 1 - k),
    ]
    return _result(UPPER_BOUND, trace, "dim L^2 = k 2-nilpotent multiplier bound")


def dim_2multiplier_of_algebra(
    algebra: NLieAlgebra, decomposition: Optional[Decomposition] = None
) -> MultiplierResult:
    """
    2-nilpotent multiplier of a concrete nilpotent algebra with dim L^2 = 1.

    Raises:
        NotNilpotentError: if the algebra is not nilpotent
        UnsupportedAlgebraError: if dim L^2 != 1
    """
    if decomposition is None:
        decomposition = decompose_dim1_derived(algebra)
    return dim_2multiplier_dimL2_one(algebra.dim, algebra.arity, decomposition.m)


def _two_multiplier_data(algebra: NLieAlgebra) -> Tuple[int, int]:
    """(dim M^(2)(A), dim A^ab) for the algebras the closed forms cover."""
    derived_dim = derived_subalgebra(algebra).dim
    if derived_dim == 0:
        return dim_multiplier_abelian(algebra.dim, algebra.arity, 2).value, algebra.dim
    if derived_dim == 1:
        return dim_2multiplier_of_algebra(algebra).value, algebra.dim - 1
    raise UnsupportedAlgebraError(
        f"no exact 2-multiplier formula for dim L^2 = {derived_dim}"
    )


def dim_2multiplier_of_direct_sum(first: NLieAlgebra, second: NLieAlgebra) -> MultiplierResult:
    """2-nilpotent multiplier of first + second, each abelian or with dim L^2 = 1."""
    if first.arity != second.arity:
        raise ArityMismatchError(
            f"cannot add algebras of arity {first.arity} and {second.arity}"
        )
    m2_first, ab_first = _two_multiplier_data(first)
    m2_second, ab_second = _two_multiplier_data(second)
    return dim_2multiplier_direct_sum(m2_first, m2_second, ab_first, ab_second, first.arity)


def estimate_2multiplier(
    algebra: NLieAlgebra, decomposition: Optional[Decomposition] = None
) -> MultiplierResult:
    """
    Best available 2-nilpotent multiplier dimension of a nilpotent algebra.

    Abelian and dim L^2 = 1 algebras get exact values; dim L^2 = k >= 2 gets
    the upper bound when dim L >= n + k. decomposition, when given, is the
    algebra's H(n, m) + F(k) splitting and is not recomputed.
    """
    if nilpotency_class(algebra) is None:
        raise NotNilpotentError("the algebra is not nilpotent")
    derived_dim = derived_subalgebra(algebra).dim
    if derived_dim == 0:
        return dim_multiplier_abelian(algebra.dim, algebra.arity, 2)
    if derived_dim == 1:
        return dim_2multiplier_of_algebra(algebra, decomposition)
    if algebra.dim < algebra.arity + derived_dim:
        raise UnsupportedAlgebraError(
            f"dim L = {algebra.dim} is below n + dim L^2 = {algebra.arity + derived_dim}"
        )
    return bound_2multiplier_dimL2_k(algebra.dim, algebra.arity, derived_dim)
