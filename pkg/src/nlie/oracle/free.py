"""Graded pieces of free nilpotent n-Lie algebras by exact linear algebra.

Weight w of the free algebra is spanned by the canonical bracket trees of
weight w. The relations are every Jacobi identity whose two sides have
weight w, together with every lower-weight relation placed inside a bracket.
The graded dimension is the number of trees minus the rank of the relations.
"""

import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from ..core.algebra import NLieAlgebra
from ..core.linalg import fraction_free_reduce
from ..errors import ParameterError
from .trees import (
    BracketTree,
    descending_tuples,
    enumerate_terms,
    normalize,
    term_index,
    weight_splits,
)

logger = logging.getLogger(__name__)

DEFAULT_TERM_CAP = 50000
TERM_CAP_ENVVAR = "NLIE_TERM_CAP"
ORACLE_CACHE_SIZE = 8


def resolve_term_cap(term_cap: Optional[int] = None) -> int:
    """Explicit cap, else the NLIE_TERM_CAP environment variable, else the default."""
    if term_cap is None:
        raw = os.environ.get(TERM_CAP_ENVVAR)
        if raw is None or not raw.strip():
            return DEFAULT_TERM_CAP
        try:
            term_cap = int(raw)
        except ValueError:
            raise ParameterError(f"{TERM_CAP_ENVVAR} must be an integer, got {raw!r}")
    if term_cap < 1:
        raise ParameterError(f"term cap must be positive, got {term_cap}")
    return term_cap


@dataclass
class RelationMatrix:
    """Integer relation rows over the canonical terms of one weight."""

    weight: int
    ncols: int
    rows: List[Dict[int, int]] = field(default_factory=list)
    _reduced: Optional[Tuple[List[Dict[int, int]], int, Tuple[int, ...]]] = field(
        default=None, repr=False, compare=False
    )

    def echelon(self) -> Tuple[List[Dict[int, int]], int, Tuple[int, ...]]:
        """Fraction-free rref: (rows, denominator, pivot columns)."""
        if self._reduced is None:
            self._reduced = fraction_free_reduce(self.rows, self.ncols)
        return self._reduced

    @property
    def rank(self) -> int:
        return len(self.echelon()[2])


@dataclass
class GradedComponent:
    """
    One weight of the free nilpotent algebra.

    basis lists the indices of the canonical terms kept as a basis (the
    non-pivot columns of the relations).
    """

    d: int
    n: int
    w: int
    canonical_terms: List[BracketTree]
    relation_rank: int
    basis: List[int]

    @property
    def dimension(self) -> int:
        return len(self.canonical_terms) - self.relation_rank

    @property
    def basis_terms(self) -> List[BracketTree]:
        return [self.canonical_terms[i] for i in self.basis]


class FreeNilpotentOracle:
    """
    Weight-graded free n-Lie algebra on d generators.

    Components are computed on demand and cached, lower weights first since
    their relations feed the higher ones.
    """

    def __init__(self, d: int, n: int, term_cap: Optional[int] = None):
        if d < 0:
            raise ParameterError(f"d must be non-negative, got {d}")
        if n < 2:
            raise ParameterError(f"n must be at least 2, got {n}")
        self.d = d
        self.n = n
        self.term_cap = resolve_term_cap(term_cap)
        self._relations: Dict[int, RelationMatrix] = {}
        self._components: Dict[int, GradedComponent] = {}
        self._indices: Dict[int, Dict[BracketTree, int]] = {}
        self._positions: Dict[int, Dict[int, int]] = {}
        # pivot column -> (row, denominator) for reducing terms to the basis
        self._reducers: Dict[int, Dict[int, Tuple[Dict[int, int], int]]] = {}

    def terms(self, w: int) -> List[BracketTree]:
        return enumerate_terms(self.d, self.n, w, self.term_cap)

    def _index(self, w: int) -> Dict[BracketTree, int]:
        if w not in self._indices:
            self._indices[w] = term_index(self.terms(w))
        return self._indices[w]

    def _add(self, row: Dict[int, int], index: Dict[BracketTree, int], tree: BracketTree, coefficient: int) -> None:
        normal = normalize(tree)
        if normal is None:
            return
        sign, canonical = normal
        column = index[canonical]
        value = row.get(column, 0) + sign * coefficient
        if value:
            row[column] = value
        else:
            row.pop(column, None)

    def _jacobi_rows(self, w: int, index: Dict[BracketTree, int]) -> List[Dict[int, int]]:
        n = self.n
        rows = []
        total = w + 2 * n - 4
        for x_total in range(n, total - (n - 1) + 1):
            y_total = total - x_total
            for x_weights in weight_splits(x_total, n, x_total):
                for y_weights in weight_splits(y_total, n - 1, y_total):
                    for xs in descending_tuples(x_weights, self.terms):
                        inner = BracketTree.node(*xs)
                        for ys in descending_tuples(y_weights, self.terms):
                            row: Dict[int, int] = {}
                            self._add(row, index, BracketTree.node(inner, *ys), 1)
                            for i, x in enumerate(xs):
                                replaced = xs[:i] + (BracketTree.node(x, *ys),) + xs[i + 1:]
                                self._add(row, index, BracketTree.node(*replaced), -1)
                            if row:
                                rows.append(row)
        return rows

    def _closure_rows(self, w: int, index: Dict[BracketTree, int]) -> List[Dict[int, int]]:
        """Lower-weight relations r placed as [r, t2, ..., tn]."""
        n = self.n
        rows = []
        for lower in range(3, w):
            relations = self.relations(lower)
            echelon_rows, _, _ = relations.echelon()
            if not echelon_rows:
                continue
            lower_terms = self.terms(lower)
            rest_total = w - lower + n - 2
            for weights in weight_splits(rest_total, n - 1, rest_total):
                for others in descending_tuples(weights, self.terms):
                    for relation in echelon_rows:
                        row: Dict[int, int] = {}
                        for column, coefficient in relation.items():
                            tree = BracketTree.node(lower_terms[column], *others)
                            self._add(row, index, tree, coefficient)
                        if row:
                            rows.append(row)
        return rows

    def relations(self, w: int) -> RelationMatrix:
        """Relations among the canonical terms of weight w (none below weight 3)."""
        if w not in self._relations:
            index = self._index(w)
            matrix = RelationMatrix(weight=w, ncols=len(index))
            if w >= 3:
                matrix.rows = self._jacobi_rows(w, index) + self._closure_rows(w, index)
            logger.debug(
                "d=%d n=%d w=%d: %d terms, %d relation rows",
                self.d, self.n, w, len(index), len(matrix.rows),
            )
            self._relations[w] = matrix
        return self._relations[w]

    def component(self, w: int) -> GradedComponent:
        if w not in self._components:
            terms = self.terms(w)
            relations = self.relations(w)
            rows, denominator, pivots = relations.echelon()
            pivot_set = set(pivots)
            self._reducers[w] = {p: (row, denominator) for p, row in zip(pivots, rows)}
            self._components[w] = GradedComponent(
                d=self.d,
                n=self.n,
                w=w,
                canonical_terms=terms,
                relation_rank=len(pivots),
                basis=[i for i in range(len(terms)) if i not in pivot_set],
            )
            logger.debug("d=%d n=%d w=%d: dimension %d", self.d, self.n, w, self._components[w].dimension)
        return self._components[w]

    def express(self, tree: BracketTree) -> Dict[int, Fraction]:
        """
        Coordinates of a tree in the basis of its weight.

        Returns:
            Map from position in component.basis to coefficient
        """
        component = self.component(tree.weight)
        normal = normalize(tree)
        if normal is None:
            return {}
        sign, canonical = normal
        column = self._index(tree.weight)[canonical]
        if tree.weight not in self._positions:
            self._positions[tree.weight] = {term: p for p, term in enumerate(component.basis)}
        position = self._positions[tree.weight]
        if column in position:
            return {position[column]: Fraction(sign)}
        row, denominator = self._reducers[tree.weight][column]
        return {
            position[j]: Fraction(-sign * value, denominator)
            for j, value in row.items()
            if j != column
        }

    def export(self, c: int) -> NLieAlgebra:
        """The free nilpotent algebra F/F^{c+1} with structure constants."""
        if c < 1:
            raise ParameterError(f"class must be at least 1, got {c}")
        elements: List[BracketTree] = []
        offsets: Dict[int, int] = {}
        for w in range(1, c + 1):
            offsets[w] = len(elements)
            elements.extend(self.component(w).basis_terms)

        constants = {}
        for key in combinations(range(len(elements)), self.n):
            tree = BracketTree.node(*(elements[i] for i in key))
            if tree.weight > c:
                continue
            image = self.express(tree)
            if image:
                constants[key] = {offsets[tree.weight] + p: v for p, v in image.items()}
        logger.debug("exported free nilpotent algebra of dimension %d", len(elements))
        return NLieAlgebra(self.n, len(elements), constants, tuple(str(t) for t in elements))


@lru_cache(maxsize=ORACLE_CACHE_SIZE)
def get_oracle(d: int, n: int, term_cap: int) -> FreeNilpotentOracle:
    """
    Shared oracle for (d, n, term_cap).

    Every caller with the same parameters gets the same instance, and its
    components stay cached for as long as the instance does. Only the
    ORACLE_CACHE_SIZE most recently used oracles are kept.
    """
    return FreeNilpotentOracle(d, n, term_cap)


def _oracle(d: int, n: int, term_cap: Optional[int]) -> FreeNilpotentOracle:
    return get_oracle(d, n, resolve_term_cap(term_cap))


def jacobi_relations(d: int, n: int, w: int, term_cap: Optional[int] = None) -> RelationMatrix:
    return _oracle(d, n, term_cap).relations(w)


def graded_dimension(d: int, n: int, w: int, term_cap: Optional[int] = None) -> GradedComponent:
    """
    Weight-w component of the free n-Lie algebra on d generators.

    Raises:
        TermCapExceededError: if some weight up to w has more canonical
            terms than the cap
    """
    if w < 1:
        raise ParameterError(f"w must be at least 1, got {w}")
    return _oracle(d, n, term_cap).component(w)


def export_free_nilpotent(d: int, n: int, c: int, term_cap: Optional[int] = None) -> NLieAlgebra:
    return _oracle(d, n, term_cap).export(c)
