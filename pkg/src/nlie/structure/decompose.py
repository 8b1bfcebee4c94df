"""Recognition of nilpotent algebras with one-dimensional derived algebra.

Such an algebra is H(n, m) + F(k). Writing [v1, ..., vn] = phi(v1, ..., vn) z
for a generator z of L^2 turns the bracket into an alternating n-form phi on
L/Z(L), and the Heisenberg blocks are the blocks of phi.

For n = 2 the blocks come from a greedy symplectic basis. For n >= 3 they
are unique and are recovered as the joint eigenspaces of the centroid of phi,
the maps T with phi(T v1, v2, ...) = phi(v1, T v2, ...).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from ..core.algebra import NLieAlgebra, abelian, direct_sum, heisenberg
from ..core.invariants import center, derived_subalgebra, nilpotency_class
from ..core.linalg import Subspace, Vector, as_dense, format_fraction, nullspace, rational_eigenspaces
from ..errors import NotNilpotentError, ParameterError, UnsupportedAlgebraError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decomposition:
    """
    L = H(n, m) + F(k) together with the witnessing basis.

    Row i of change_of_basis is the i-th new basis vector in the coordinates
    of the input algebra; in that basis the structure constants are exactly
    those of direct_sum(heisenberg(n, m), abelian(k, n)).
    """

    m: int
    k: int
    change_of_basis: Tuple[Vector, ...]
    arity: int = 2

    def canonical(self) -> NLieAlgebra:
        return direct_sum(heisenberg(self.arity, self.m), abelian(self.k, self.arity))

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "change_of_basis": [
                [format_fraction(v) for v in row] for row in self.change_of_basis
            ],
        }


class _Form:
    """The n-form phi restricted to the coordinate complement of the centre."""

    def __init__(self, algebra: NLieAlgebra, pivot: int, coordinates: Sequence[int]):
        self.algebra = algebra
        self.pivot = pivot
        self.coordinates = list(coordinates)
        self._cache: Dict[Tuple[int, ...], Fraction] = {}

    @property
    def rank(self) -> int:
        return len(self.coordinates)

    def lift(self, vector: Sequence[Fraction]) -> Dict[int, Fraction]:
        """Complement coordinates to algebra coordinates."""
        return {self.coordinates[a]: v for a, v in enumerate(vector) if v}

    def on_basis(self, indices: Tuple[int, ...]) -> Fraction:
        if indices not in self._cache:
            image = self.algebra.basis_bracket([self.coordinates[a] for a in indices])
            self._cache[indices] = image.get(self.pivot, Fraction(0))
        return self._cache[indices]

    def image(self, vectors: Sequence[Sequence[Fraction]]) -> Dict[int, Fraction]:
        return self.algebra.bracket_sparse([self.lift(v) for v in vectors])

    def value(self, vectors: Sequence[Sequence[Fraction]]) -> Fraction:
        return self.image(vectors).get(self.pivot, Fraction(0))


def _unit(size: int, index: int) -> List[Fraction]:
    vector = [Fraction(0)] * size
    vector[index] = Fraction(1)
    return vector


def _symplectic_blocks(form: _Form) -> List[List[List[Fraction]]]:
    """Greedy symplectic basis: take the first pair with phi != 0, rescale, project."""
    r = form.rank
    gram = [[form.on_basis((a, b)) for b in range(r)] for a in range(r)]

    def pair(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for a, xa in enumerate(x):
            if xa:
                for b, yb in enumerate(y):
                    if yb and gram[a][b]:
                        total += xa * gram[a][b] * yb
        return total

    remaining = [_unit(r, a) for a in range(r)]
    blocks = []
    while remaining:
        found = next(
            (
                (a, b, value)
                for a, b in combinations(range(len(remaining)), 2)
                for value in [pair(remaining[a], remaining[b])]
                if value
            ),
            None,
        )
        if found is None:
            raise UnsupportedAlgebraError("the bracket form is degenerate off the centre")
        a, b, value = found
        u = [x / value for x in remaining[a]]
        v = remaining[b]
        blocks.append([u, v])

        rest = [w for i, w in enumerate(remaining) if i not in (a, b)]
        remaining = []
        for w in rest:
            with_v, with_u = pair(w, v), pair(w, u)
            remaining.append([wi - with_v * ui + with_u * vi for wi, ui, vi in zip(w, u, v)])
    return blocks


def _centroid(form: _Form) -> List[List[List[Fraction]]]:
    """Basis of {T : phi(T e_a, e_b, R) = phi(e_a, T e_b, R)} as r x r matrices."""
    r, n = form.rank, form.algebra.arity
    rests = list(combinations(range(r), n - 2))
    rows = []
    for a in range(r):
        for b in range(a, r):
            for rest in rests:
                row: Dict[int, Fraction] = {}
                for c in range(r):
                    left = form.on_basis((c, b) + rest)
                    if left:
                        row[c * r + a] = row.get(c * r + a, Fraction(0)) + left
                    right = form.on_basis((a, c) + rest)
                    if right:
                        row[c * r + b] = row.get(c * r + b, Fraction(0)) - right
                row = {j: v for j, v in row.items() if v}
                if row:
                    rows.append(row)
    kernel = nullspace(rows, r * r)
    return [
        [[t.get(c * r + a, Fraction(0)) for a in range(r)] for c in range(r)]
        for t in kernel
    ]


def _centroid_blocks(form: _Form) -> List[List[List[Fraction]]]:
    """Split the complement into the joint eigenspaces of the centroid."""
    r, n = form.rank, form.algebra.arity
    centroid = _centroid(form)
    logger.debug("centroid of the bracket form has dimension %d", len(centroid))

    spaces = [Subspace.full(r)]
    if len(centroid) > 1:
        for matrix in centroid:
            try:
                eigenspaces = rational_eigenspaces(matrix)
            except ParameterError as e:
                raise UnsupportedAlgebraError(f"bracket form does not split: {e}")
            refined = []
            for space in spaces:
                for _, eigenspace in eigenspaces:
                    part = space.intersection(eigenspace)
                    if not part.is_zero():
                        refined.append(part)
            spaces = refined

    if sum(s.dim for s in spaces) != r or any(s.dim != n for s in spaces):
        raise UnsupportedAlgebraError(
            f"bracket form does not split into {n}-dimensional blocks "
            f"(pieces of dimension {sorted(s.dim for s in spaces)})"
        )

    blocks = []
    for space in sorted(spaces, key=lambda s: (s.pivots, s.basis)):
        vectors = [list(row) for row in space.basis]
        value = form.value(vectors)
        if not value:
            raise UnsupportedAlgebraError("bracket form vanishes on a block")
        vectors[0] = [x / value for x in vectors[0]]
        blocks.append(vectors)
    return blocks


def _check_blocks(form: _Form, vectors: List[List[Fraction]], z: Dict[int, Fraction]) -> None:
    n = form.algebra.arity
    blocks = {tuple(range(i, i + n)) for i in range(0, len(vectors), n)}
    for combo in combinations(range(len(vectors)), n):
        image = form.image([vectors[i] for i in combo])
        expected = z if combo in blocks else {}
        if image != expected:
            raise UnsupportedAlgebraError(
                f"the bracket does not take Heisenberg form on basis tuple {combo}"
            )


def decompose_dim1_derived(algebra: NLieAlgebra) -> Decomposition:
    """
    Write a nilpotent algebra with dim L^2 = 1 as H(n, m) + F(k).

    The new basis is z, then the m blocks of n vectors, then k central
    vectors completing z to a basis of Z(L).

    Raises:
        UnsupportedAlgebraError: if dim L^2 != 1, or the bracket form does
            not split into Heisenberg blocks
        NotNilpotentError: if the algebra is not nilpotent
    """
    n, d = algebra.arity, algebra.dim
    derived = derived_subalgebra(algebra)
    if derived.dim != 1:
        raise UnsupportedAlgebraError(
            f"dim L^2 = {derived.dim}; only dim L^2 = 1 decomposes "
            "(use bound_2multiplier_dimL2_k for larger derived algebras)"
        )
    if nilpotency_class(algebra) is None:
        raise NotNilpotentError("the algebra is not nilpotent")

    z = derived.basis[0]
    pivot = derived.pivots[0]
    centre = center(algebra)
    centre_pivots = set(centre.pivots)
    form = _Form(algebra, pivot, [q for q in range(d) if q not in centre_pivots])

    if form.rank % n:
        raise UnsupportedAlgebraError(
            f"dim L/Z(L) = {form.rank} is not a multiple of the arity {n}"
        )
    blocks = _symplectic_blocks(form) if n == 2 else _centroid_blocks(form)
    vectors = [v for block in blocks for v in block]
    _check_blocks(form, vectors, derived.sparse_basis()[0])

    residual = []
    spanned = Subspace.span([z], d)
    for row in centre.basis:
        if not spanned.contains(row):
            residual.append(row)
            spanned = spanned.sum(Subspace.span([row], d))

    rows = [z] + [as_dense(form.lift(v), d) for v in vectors] + residual
    m, k = len(blocks), len(residual)
    logger.debug("decomposed as H(%d, %d) + F(%d)", n, m, k)
    return Decomposition(m=m, k=k, change_of_basis=tuple(tuple(r) for r in rows), arity=n)
