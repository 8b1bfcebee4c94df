"""Capability predicates and dimension bounds on central series terms."""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..core.algebra import NLieAlgebra
from ..core.invariants import center, derived_subalgebra, lower_central_series, second_center
from ..counting.basic import basic_count
from ..errors import NLieError
from .decompose import Decomposition, decompose_dim1_derived

logger = logging.getLogger(__name__)


def is_capable_abelian(d: int, n: int) -> bool:
    """F(d) is capable exactly when d >= n."""
    return d >= n


def is_capable_heisenberg_sum(n: int, m: int, k: int) -> bool:
    """H(n, m) + F(k) is capable exactly when m = 1."""
    return m == 1


def is_2capable_heisenberg(n: int, m: int) -> bool:
    """H(2, 1) is the only 2-capable Heisenberg algebra."""
    return n == 2 and m == 1


def is_heisenberg(algebra: NLieAlgebra) -> bool:
    """L^2 = Z(L) with dim L^2 = 1."""
    derived = derived_subalgebra(algebra)
    return derived.dim == 1 and derived == center(algebra)


def classify_capability(
    algebra: NLieAlgebra, decomposition: Optional[Decomposition] = None
) -> Tuple[Optional[bool], Optional[bool]]:
    """
    Capability and 2-capability of a concrete algebra.

    Settled for abelian algebras and for H(n, m) + F(k); 2-capability is
    only known for Heisenberg algebras, and is ruled out whenever the
    algebra is not capable. Unknown answers are None. A decomposition
    already computed for the algebra is used as is.
    """
    n = algebra.arity
    derived = derived_subalgebra(algebra)
    if derived.dim == 0:
        return is_capable_abelian(algebra.dim, n), None
    if derived.dim != 1:
        return None, None

    if decomposition is None:
        try:
            decomposition = decompose_dim1_derived(algebra)
        except NLieError as e:
            logger.debug("capability unknown: %s", e)
            return None, None

    capable = is_capable_heisenberg_sum(n, decomposition.m, decomposition.k)
    if not capable:
        return False, False
    if decomposition.k == 0:
        return True, is_2capable_heisenberg(n, decomposition.m)
    return True, None


@dataclass(frozen=True)
class BoundCheck:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def to_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def check_gamma3_bound(algebra: NLieAlgebra) -> BoundCheck:
    """dim gamma_3(L) <= l_d^n(3) with d = dim L/Z_2(L)."""
    series = lower_central_series(algebra)
    gamma3 = series[2].dim if len(series) > 2 else series[-1].dim
    d = algebra.dim - second_center(algebra).dim
    return BoundCheck(lhs=gamma3, rhs=basic_count(d, algebra.arity, 3))


def check_gamma2_bound(algebra: NLieAlgebra) -> BoundCheck:
    """dim L^2 <= l_d^n(2) = C(d, n) with d = dim L/Z(L)."""
    d = algebra.dim - center(algebra).dim
    return BoundCheck(
        lhs=derived_subalgebra(algebra).dim, rhs=basic_count(d, algebra.arity, 2)
    )
