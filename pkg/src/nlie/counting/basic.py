"""Closed-form count of basic commutators and the dimensions built from it."""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import List, Tuple

from ..errors import ParameterError

logger = logging.getLogger(__name__)


def binom(a: int, b: int) -> int:
    """C(a, b), taken as 0 when b < 0 or a < b."""
    if b < 0 or a < b or a < 0:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class CountQuery:
    d: int
    n: int
    w: int

    def __post_init__(self):
        if self.d < 0:
            raise ParameterError(f"d must be non-negative, got {self.d}")
        if self.n < 2:
            raise ParameterError(f"n must be at least 2, got {self.n}")
        if self.w < 1:
            raise ParameterError(f"w must be at least 1, got {self.w}")


@dataclass
class FormulaTrace:
    """
    Every summand of the closed-form count, for auditing.

    beta_terms holds (j, j_star, beta) for j = 1..alpha0 and alpha_terms
    holds (i, alpha_i, inner binomial) for i = 2..w-1. For weights 1 and 2,
    and when d < n, rule names the closed form used and the lists are empty.
    """

    rule: str
    alpha0: int = 0
    beta_terms: List[Tuple[int, int, int]] = field(default_factory=list)
    alpha_terms: List[Tuple[int, int, int]] = field(default_factory=list)
    total: int = 0

    @property
    def beta_sum(self) -> int:
        return sum(beta for _, _, beta in self.beta_terms)

    @property
    def inner_sum(self) -> int:
        return sum(alpha * inner for _, alpha, inner in self.alpha_terms)

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "alpha0": self.alpha0,
            "beta_terms": [{"j": j, "j_star": js, "beta": b} for j, js, b in self.beta_terms],
            "alpha_terms": [
                {"i": i, "alpha": a, "binom": c} for i, a, c in self.alpha_terms
            ],
            "total": self.total,
        }


def count_basic(d: int, n: int, w: int) -> Tuple[int, FormulaTrace]:
    """
    Number of basic commutators of weight w on d generators of arity n.

    Weight 1 gives d, weight 2 gives C(d, n), and fewer than n generators
    give 0 from weight 2 on. Otherwise the value is the double sum

        sum_{j=1}^{alpha0} beta_{j*} * sum_{i=2}^{w-1} alpha_i C(C(d, n-1), w-i)

    with alpha0 = C(d-1, n-1), alpha_i = C(w-3, i-2), and for j in the block
    C(k-1, n-1)+1 .. C(k, n-1) (k = n-1 .. d-1): j* = C(k-1, n-1)+1 and
    beta_{j*} = d-n-j*+2. Blocks with beta <= 0 are kept as they are.

    Returns:
        Tuple of (count, trace)
    """
    query = CountQuery(d, n, w)
    d, n, w = query.d, query.n, query.w

    if w == 1:
        return d, FormulaTrace(rule="generators", total=d)
    if w == 2:
        value = binom(d, n)
        return value, FormulaTrace(rule="single bracket", total=value)
    if d < n:
        return 0, FormulaTrace(rule="fewer generators than arity", total=0)

    alpha0 = binom(d - 1, n - 1)
    beta_terms = []
    for k in range(n - 1, d):
        j_star = binom(k - 1, n - 1) + 1
        beta = d - n - j_star + 2
        for j in range(j_star, binom(k, n - 1) + 1):
            beta_terms.append((j, j_star, beta))

    slots = binom(d, n - 1)
    alpha_terms = [(i, binom(w - 3, i - 2), binom(slots, w - i)) for i in range(2, w)]

    trace = FormulaTrace(
        rule="double sum",
        alpha0=alpha0,
        beta_terms=beta_terms,
        alpha_terms=alpha_terms,
    )
    trace.total = trace.beta_sum * trace.inner_sum
    if trace.total < 0:
        logger.warning("count_basic(%d, %d, %d) is negative: %d", d, n, w, trace.total)
    return trace.total, trace


def basic_count(d: int, n: int, w: int) -> int:
    """count_basic without the trace."""
    return count_basic(d, n, w)[0]


def graded_dim_range(d: int, n: int, i: int, c: int) -> int:
    """Dimension of F^i / F^{i+c}: the counts of weights i .. i+c-1 summed."""
    if i < 1:
        raise ParameterError(f"start weight must be at least 1, got {i}")
    if c < 1:
        raise ParameterError(f"count must be at least 1, got {c}")
    return sum(basic_count(d, n, w) for w in range(i, i + c))


def _check_dims(dv: int, dw: int, n: int) -> None:
    if dv < 0 or dw < 0:
        raise ParameterError("dimensions must be non-negative")
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")


def dim_modular_tensor(dv: int, dw: int, n: int) -> int:
    """sum_{i=1}^{n-1} dV^i dW^(n-i)."""
    _check_dims(dv, dw, n)
    return sum(dv ** i * dw ** (n - i) for i in range(1, n))


def dim_modular_tensor_triple(dv: int, dw: int, n: int) -> int:
    """sum_{i=1}^{n-1} dV^(n i) dW^(n-i), the dimension of (V (x) V) (x) W."""
    _check_dims(dv, dw, n)
    return sum(dv ** (n * i) * dw ** (n - i) for i in range(1, n))
