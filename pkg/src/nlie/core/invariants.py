"""Derived algebra, centre, central series and the analysis report."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .algebra import NLieAlgebra
from .linalg import SparseVector, Subspace, nullspace

logger = logging.getLogger(__name__)


def derived_subalgebra(algebra: NLieAlgebra) -> Subspace:
    """L^2, the span of all brackets."""
    return Subspace.span(list(algebra.table.values()), algebra.dim)


def bracket_with_algebra(algebra: NLieAlgebra, subspace: Subspace) -> Subspace:
    """[S, L, ..., L] spanned by brackets of the basis of S with basis tails."""
    images = []
    tails = list(combinations(range(algebra.dim), algebra.arity - 1))
    for vector in subspace.sparse_basis():
        for tail in tails:
            image = algebra.bracket_tail(vector, tail)
            if image:
                images.append(image)
    return Subspace.span(images, algebra.dim)


def _centraliser_modulo(algebra: NLieAlgebra, below: Subspace) -> Subspace:
    """{v : [v, e_J] lies in below for every (n-1)-tuple J}."""
    d = algebra.dim
    rows: Dict[Tuple[Tuple[int, ...], int], SparseVector] = {}
    for tail in combinations(range(d), algebra.arity - 1):
        for k in range(d):
            image = algebra.bracket_tail({k: Fraction(1)}, tail)
            if not image:
                continue
            residual = below.reduce(image)
            for t, value in residual.items():
                rows.setdefault((tail, t), {})[k] = value
    return Subspace.span(nullspace(list(rows.values()), d), d)


def center(algebra: NLieAlgebra) -> Subspace:
    return _centraliser_modulo(algebra, Subspace.zero(algebra.dim))


def lower_central_series(algebra: NLieAlgebra) -> List[Subspace]:
    """
    [gamma_1 = L, gamma_2, ...] until the series becomes stationary.

    The stationary term appears once, so a nilpotent algebra ends in zero.
    """
    series = [Subspace.full(algebra.dim)]
    while True:
        following = bracket_with_algebra(algebra, series[-1])
        if following == series[-1]:
            return series
        series.append(following)


def upper_central_series(algebra: NLieAlgebra) -> List[Subspace]:
    """[Z_1 = Z(L), Z_2, ...] until the series becomes stationary."""
    series = [center(algebra)]
    while True:
        following = _centraliser_modulo(algebra, series[-1])
        if following == series[-1]:
            return series
        series.append(following)


def nilpotency_class(algebra: NLieAlgebra) -> Optional[int]:
    """Class c with gamma_{c+1} = 0 != gamma_c; None when not nilpotent."""
    series = lower_central_series(algebra)
    if not series[-1].is_zero():
        return None
    return len(series) - 1


def second_center(algebra: NLieAlgebra) -> Subspace:
    series = upper_central_series(algebra)
    return series[1] if len(series) > 1 else series[0]


@dataclass
class AnalysisReport:
    """Computed invariants of a concrete algebra."""

    dim: int
    arity: int
    is_valid: bool
    derived_dim: int
    center_dim: int
    lower_series_dims: List[int]
    upper_series_dims: List[int]
    nilpotency_class: Optional[int]
    decomposition: Optional[Tuple[int, int]] = None
    is_heisenberg: bool = False
    capable: Optional[bool] = None
    two_capable: Optional[bool] = None
    two_multiplier: Optional[object] = None
    violations: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = field(default_factory=list)

    def to_dict(self) -> dict:
        """JSON-ready view; basis indices in violations are 1-based."""
        return {
            "dim": self.dim,
            "arity": self.arity,
            "is_valid": self.is_valid,
            "derived_dim": self.derived_dim,
            "center_dim": self.center_dim,
            "lower_series_dims": list(self.lower_series_dims),
            "upper_series_dims": list(self.upper_series_dims),
            "nilpotency_class": (
                self.nilpotency_class if self.nilpotency_class is not None else "not nilpotent"
            ),
            "decomposition": (
                {"m": self.decomposition[0], "k": self.decomposition[1]}
                if self.decomposition is not None
                else None
            ),
            "is_heisenberg": self.is_heisenberg,
            "capable": self.capable,
            "two_capable": self.two_capable,
            "two_multiplier": self.two_multiplier.to_dict() if self.two_multiplier else None,
            "violations": [
                {"x": [i + 1 for i in x], "y": [i + 1 for i in y]} for x, y in self.violations
            ],
        }


def analyze(algebra: NLieAlgebra) -> AnalysisReport:
    """
    Validate an algebra and compute its invariants.

    Structure recognition (decomposition, capability, 2-multiplier) runs only
    on valid algebras and is left empty when the algebra is outside the
    families those results cover.
    """
    from ..counting.multipliers import estimate_2multiplier
    from ..errors import NLieError
    from ..structure.capability import classify_capability, is_heisenberg
    from ..structure.decompose import decompose_dim1_derived

    validation = algebra.validate()
    lower = lower_central_series(algebra)
    upper = upper_central_series(algebra)
    derived = lower[1] if len(lower) > 1 else lower[0]
    report = AnalysisReport(
        dim=algebra.dim,
        arity=algebra.arity,
        is_valid=validation.is_valid,
        derived_dim=derived.dim,
        center_dim=upper[0].dim,
        lower_series_dims=[s.dim for s in lower],
        upper_series_dims=[s.dim for s in upper],
        nilpotency_class=len(lower) - 1 if lower[-1].is_zero() else None,
        violations=list(validation.violations),
    )
    if not validation.is_valid:
        logger.warning("algebra fails the Jacobi identity on %d tuples", len(validation.violations))
        return report

    report.is_heisenberg = is_heisenberg(algebra)
    decomposition = None
    if report.derived_dim == 1:
        if report.nilpotency_class is None:
            return report
        try:
            decomposition = decompose_dim1_derived(algebra)
        except NLieError as e:
            logger.warning("no Heisenberg decomposition: %s", e)
            return report
        report.decomposition = (decomposition.m, decomposition.k)

    report.capable, report.two_capable = classify_capability(algebra, decomposition)
    try:
        report.two_multiplier = estimate_2multiplier(algebra, decomposition)
    except NLieError as e:
        logger.debug("no 2-multiplier formula applies: %s", e)
    return report
