"""Witt's formula for the graded dimensions of a free Lie algebra."""

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from ..errors import ParameterError


def witt_count(d: int, w: int) -> int:
    """(1/w) sum_{m | w} mu(m) d^(w/m), the number of Lyndon words of length w."""
    if d < 0:
        raise ParameterError(f"d must be non-negative, got {d}")
    if w < 1:
        raise ParameterError(f"w must be at least 1, got {w}")
    total = sum(int(mobius(m)) * d ** (w // m) for m in divisors(w))
    return total // w
