"""Finite-dimensional n-Lie algebras given by structure constants over QQ."""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial, prod
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import AlgebraFormatError, ArityMismatchError, DimensionMismatchError, ParameterError
from .linalg import SparseVector, Vector, as_dense, as_sparse, determinant, invert

logger = logging.getLogger(__name__)

Key = Tuple[int, ...]
ConstantsLike = Union[
    Mapping[Sequence[int], Mapping[int, object]],
    Iterable[Tuple[Sequence[int], Iterable[Tuple[int, object]]]],
]


def sort_with_sign(indices: Sequence[int]) -> Tuple[int, Key]:
    """
    Sort indices and return the parity of the sorting permutation.

    Returns:
        Tuple of (sign, sorted indices); sign is 0 when an index repeats
    """
    items = list(indices)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    if any(items[i] == items[i + 1] for i in range(len(items) - 1)):
        return 0, tuple(items)
    return sign, tuple(items)


@lru_cache(maxsize=None)
def _signed_permutations(n: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    return tuple((p, sort_with_sign(p)[0]) for p in permutations(range(n)))


def _minor(rows: Sequence[SparseVector], columns: Key) -> Fraction:
    n = len(columns)
    if n > 6:
        return determinant([[row.get(c, Fraction(0)) for c in columns] for row in rows])
    total = Fraction(0)
    for perm, sign in _signed_permutations(n):
        term = Fraction(sign)
        for a, b in enumerate(perm):
            entry = rows[a].get(columns[b])
            if not entry:
                break
            term *= entry
        else:
            total += term
    return total


def _accumulate(target: SparseVector, source: Mapping[int, Fraction], factor: Fraction) -> None:
    for index, value in source.items():
        updated = target.get(index, Fraction(0)) + factor * value
        if updated:
            target[index] = updated
        else:
            target.pop(index, None)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking the axioms on basis elements."""

    skew_ok: bool
    jacobi_ok: bool
    violations: Tuple[Tuple[Key, Key], ...] = ()

    @property
    def is_valid(self) -> bool:
        return self.skew_ok and self.jacobi_ok


@dataclass(frozen=True)
class NLieAlgebra:
    """
    An n-Lie algebra on the basis e_0 .. e_{dim-1}.

    Only brackets of strictly increasing index tuples are stored; every other
    basis bracket follows by skew-symmetry. The constants are normalized into
    a sorted tuple so that equal algebras compare (and hash) equal. Nothing is
    assumed about the Jacobi identity until validate() is called.
    """

    arity: int
    dim: int
    constants: ConstantsLike = ()
    labels: Tuple[str, ...] = ()
    trusted: bool = field(default=False, compare=False)
    _table: Dict[Key, Dict[int, Fraction]] = field(
        default=None, init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.arity < 2:
            raise ParameterError(f"arity must be at least 2, got {self.arity}")
        if self.dim < 0:
            raise ParameterError(f"dimension must be non-negative, got {self.dim}")

        labels = tuple(self.labels) or tuple(f"e{i + 1}" for i in range(self.dim))
        if len(labels) != self.dim:
            raise AlgebraFormatError(f"{len(labels)} labels given for dimension {self.dim}")

        items = self.constants.items() if isinstance(self.constants, Mapping) else self.constants
        table: Dict[Key, Dict[int, Fraction]] = {}
        for key, value in items:
            key = tuple(int(i) for i in key)
            if len(key) != self.arity:
                raise ArityMismatchError(f"bracket {key} has {len(key)} arguments, expected {self.arity}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise AlgebraFormatError(f"bracket arguments {key} are not strictly increasing")
            if key and not (0 <= key[0] and key[-1] < self.dim):
                raise DimensionMismatchError(f"bracket {key} outside 0..{self.dim - 1}")
            if key in table:
                raise AlgebraFormatError(f"bracket {key} given twice")
            entries = value.items() if isinstance(value, Mapping) else value
            vector = as_sparse(dict(entries), self.dim)
            if vector:
                table[key] = vector

        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_table", table)
        object.__setattr__(
            self,
            "constants",
            tuple((key, tuple(sorted(table[key].items()))) for key in sorted(table)),
        )

    @property
    def table(self) -> Mapping[Key, Mapping[int, Fraction]]:
        return self._table

    def basis_bracket(self, indices: Sequence[int]) -> SparseVector:
        """Bracket of basis elements e_{i1}, ..., e_{in} in any order."""
        if len(indices) != self.arity:
            raise ArityMismatchError(f"expected {self.arity} indices, got {len(indices)}")
        sign, key = sort_with_sign(indices)
        if not sign or key not in self._table:
            return {}
        return {k: sign * v for k, v in self._table[key].items()}

    def bracket_tail(self, vector: Mapping[int, Fraction], tail: Sequence[int]) -> SparseVector:
        """[v, e_{t1}, ..., e_{t(n-1)}] for a sparse vector v."""
        result: SparseVector = {}
        for k, coefficient in vector.items():
            sign, key = sort_with_sign((k,) + tuple(tail))
            if sign and key in self._table:
                _accumulate(result, self._table[key], sign * coefficient)
        return result

    def bracket_sparse(self, vectors: Sequence[Mapping[int, Fraction]]) -> SparseVector:
        if len(vectors) != self.arity:
            raise ArityMismatchError(f"expected {self.arity} vectors, got {len(vectors)}")
        result: SparseVector = {}
        if not self._table or any(not v for v in vectors):
            return result

        support_cost = prod(len(v) for v in vectors)
        minor_cost = len(self._table) * factorial(self.arity)
        if support_cost <= minor_cost:
            supports = [list(v.items()) for v in vectors]
            for choice in product(*supports):
                sign, key = sort_with_sign([index for index, _ in choice])
                if not sign or key not in self._table:
                    continue
                coefficient = Fraction(sign)
                for _, value in choice:
                    coefficient *= value
                _accumulate(result, self._table[key], coefficient)
        else:
            for key, value in self._table.items():
                minor = _minor(vectors, key)
                if minor:
                    _accumulate(result, value, minor)
        return result

    def bracket(self, vectors: Sequence[Sequence]) -> Vector:
        """
        Multilinear, alternating bracket of n coefficient vectors.

        Args:
            vectors: n dense coefficient vectors of length dim

        Returns:
            Dense coefficient vector of the result
        """
        if len(vectors) != self.arity:
            raise ArityMismatchError(f"expected {self.arity} vectors, got {len(vectors)}")
        sparse = [as_sparse(v, self.dim) for v in vectors]
        return as_dense(self.bracket_sparse(sparse), self.dim)

    def validate(self) -> ValidationReport:
        """
        Check skew-symmetric storage and the Jacobi identity on basis tuples.

        Both sides of the identity are alternating in the x's and in the y's,
        so strictly increasing x- and y-tuples cover every case.
        """
        skew_ok = all(
            len(key) == self.arity and all(a < b for a, b in zip(key, key[1:]))
            for key in self._table
        )

        n, d = self.arity, self.dim
        violations: List[Tuple[Key, Key]] = []
        tails = list(combinations(range(d), n - 1))
        # [e_i, y] for every basis index and tail
        inner = {y: [self.bracket_tail({i: Fraction(1)}, y) for i in range(d)] for y in tails}

        for x in combinations(range(d), n):
            head = self._table.get(x, {})
            for y in tails:
                images = inner[y]
                if not head and not any(images[i] for i in x):
                    continue
                lhs = self.bracket_tail(head, y)
                rhs: SparseVector = {}
                for position, i in enumerate(x):
                    for k, coefficient in images[i].items():
                        replaced = x[:position] + (k,) + x[position + 1:]
                        sign, key = sort_with_sign(replaced)
                        if sign and key in self._table:
                            _accumulate(rhs, self._table[key], sign * coefficient)
                if lhs != rhs:
                    violations.append((x, y))

        if violations:
            logger.debug("Jacobi identity fails on %d basis tuples", len(violations))
        return ValidationReport(skew_ok, not violations, tuple(violations))


def bracket(algebra: NLieAlgebra, vectors: Sequence[Sequence]) -> Vector:
    return algebra.bracket(vectors)


def validate(algebra: NLieAlgebra) -> ValidationReport:
    return algebra.validate()


def abelian(d: int, n: int = 2) -> NLieAlgebra:
    """The d-dimensional abelian n-Lie algebra F(d)."""
    return NLieAlgebra(n, d, {}, tuple(f"x{i + 1}" for i in range(d)), trusted=True)


def heisenberg(n: int, m: int) -> NLieAlgebra:
    """
    The Heisenberg n-Lie algebra H(n, m).

    Basis x, x1, ..., x_{mn} (indices 0..mn); the nonzero brackets are
    [x_{(i-1)n+1}, ..., x_{in}] = x for i = 1..m.
    """
    if n < 2:
        raise ParameterError(f"arity must be at least 2, got {n}")
    if m < 1:
        raise ParameterError(f"m must be at least 1, got {m}")
    constants = {
        tuple(range((i - 1) * n + 1, i * n + 1)): {0: Fraction(1)}
        for i in range(1, m + 1)
    }
    labels = ("x",) + tuple(f"x{i}" for i in range(1, m * n + 1))
    return NLieAlgebra(n, m * n + 1, constants, labels, trusted=True)


def direct_sum(first: NLieAlgebra, second: NLieAlgebra) -> NLieAlgebra:
    """Direct sum; the basis of the second summand is shifted past the first."""
    if first.arity != second.arity:
        raise ArityMismatchError(
            f"cannot add algebras of arity {first.arity} and {second.arity}"
        )
    shift = first.dim
    constants = dict(first.table)
    for key, value in second.table.items():
        constants[tuple(i + shift for i in key)] = {k + shift: v for k, v in value.items()}
    return NLieAlgebra(
        first.arity,
        first.dim + second.dim,
        constants,
        first.labels + second.labels,
        trusted=first.trusted and second.trusted,
    )


def change_basis(
    algebra: NLieAlgebra,
    matrix: Sequence[Sequence],
    labels: Optional[Sequence[str]] = None,
) -> NLieAlgebra:
    """
    Rewrite the structure constants in a new basis.

    Row i of matrix holds the coordinates of the i-th new basis vector in the
    old basis. The matrix must be invertible.
    """
    d = algebra.dim
    if len(matrix) != d:
        raise DimensionMismatchError(f"expected a {d}x{d} matrix, got {len(matrix)} rows")
    rows = [as_sparse(row, d) for row in matrix]
    inverse = [as_sparse(row, d) for row in invert(matrix)]

    constants = {}
    for key in combinations(range(d), algebra.arity):
        old = algebra.bracket_sparse([rows[i] for i in key])
        if not old:
            continue
        new: SparseVector = {}
        for j, coefficient in old.items():
            _accumulate(new, inverse[j], coefficient)
        if new:
            constants[key] = new
    return NLieAlgebra(
        algebra.arity,
        d,
        constants,
        tuple(labels) if labels is not None else (),
        trusted=algebra.trusted,
    )


def random_invertible_matrix(
    dim: int,
    rng: random.Random,
    low: int = -2,
    high: int = 2,
) -> List[List[Fraction]]:
    """A random integer matrix with entries in [low, high] and nonzero determinant."""
    while True:
        matrix = [[Fraction(rng.randint(low, high)) for _ in range(dim)] for _ in range(dim)]
        if dim == 0 or determinant(matrix) != 0:
            return matrix


def random_basis_change(
    algebra: NLieAlgebra,
    seed: int,
    low: int = -2,
    high: int = 2,
) -> Tuple[NLieAlgebra, List[List[Fraction]]]:
    """
    Conjugate an algebra by a seeded random invertible integer matrix.

    Returns:
        Tuple of (conjugated algebra, basis-change matrix)
    """
    rng = random.Random(seed)
    matrix = random_invertible_matrix(algebra.dim, rng, low, high)
    return change_basis(algebra, matrix), matrix
