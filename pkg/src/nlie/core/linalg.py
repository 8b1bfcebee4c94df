"""Exact rational linear algebra built on sympy's DomainMatrix."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from sympy import Dummy, Poly, roots
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..errors import DimensionMismatchError, ParameterError

Vector = Tuple[Fraction, ...]
SparseVector = Dict[int, Fraction]
VectorLike = Union[Sequence, Mapping[int, object]]


def to_fraction(value) -> Fraction:
    """
    Convert an exact scalar to a Fraction.

    Accepts ints, Fractions, strings such as "3", "-1/2" or "0.25", sympy
    Rationals and QQ domain elements. Floats are rejected.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not accepted")
    # sympy Rational / Integer
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    # QQ elements (PythonMPQ or gmpy2.mpq)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def format_fraction(value: Fraction) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    return str(value)


def as_sparse(vector: VectorLike, ambient_dim: int) -> SparseVector:
    """Normalize a dense sequence or an index map into a sparse vector."""
    if isinstance(vector, Mapping):
        items = vector.items()
    else:
        if len(vector) != ambient_dim:
            raise DimensionMismatchError(
                f"vector has length {len(vector)}, expected {ambient_dim}"
            )
        items = enumerate(vector)

    sparse = {}
    for index, value in items:
        if not 0 <= index < ambient_dim:
            raise DimensionMismatchError(f"index {index} outside 0..{ambient_dim - 1}")
        value = to_fraction(value)
        if value:
            sparse[index] = value
    return sparse


def as_dense(vector: Mapping[int, Fraction], ambient_dim: int) -> Vector:
    return tuple(vector.get(i, Fraction(0)) for i in range(ambient_dim))


def _to_domain(value: Fraction, domain):
    if domain == ZZ:
        if value.denominator != 1:
            raise ValueError(f"{value} is not an integer")
        return ZZ(int(value.numerator))
    return QQ(int(value.numerator), int(value.denominator))


def to_domain_matrix(
    rows: Sequence[Mapping[int, Fraction]],
    ncols: int,
    domain=QQ,
) -> DomainMatrix:
    """Build a sparse DomainMatrix from a list of sparse rows."""
    data = {}
    for i, row in enumerate(rows):
        entries = {j: _to_domain(to_fraction(v), domain) for j, v in row.items() if v}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), ncols), domain)


def _sparse_rows(matrix: DomainMatrix, count: int) -> List[SparseVector]:
    rows: List[SparseVector] = [dict() for _ in range(count)]
    for i, entries in matrix.to_sdm().items():
        if i >= count:
            continue
        for j, value in entries.items():
            if value:
                rows[i][j] = to_fraction(value)
    return rows


def row_reduce(
    rows: Sequence[Mapping[int, Fraction]],
    ncols: int,
) -> Tuple[List[SparseVector], Tuple[int, ...]]:
    """
    Reduced row echelon form over QQ.

    Returns:
        Tuple of (nonzero rref rows, pivot columns)
    """
    if ncols == 0 or not any(rows):
        return [], ()
    reduced, pivots = to_domain_matrix(rows, ncols).rref()
    pivots = tuple(int(p) for p in pivots)
    return _sparse_rows(reduced, len(pivots)), pivots


def fraction_free_reduce(
    rows: Sequence[Mapping[int, int]],
    ncols: int,
) -> Tuple[List[Dict[int, int]], int, Tuple[int, ...]]:
    """
    Fraction-free reduced row echelon form of an integer matrix.

    The true rref is the returned rows divided by the returned denominator.

    Returns:
        Tuple of (nonzero rows, denominator, pivot columns)
    """
    if ncols == 0 or not any(rows):
        return [], 1, ()
    matrix = to_domain_matrix(
        [{j: Fraction(v) for j, v in row.items()} for row in rows], ncols, domain=ZZ
    )
    reduced, denominator, pivots = matrix.rref_den()
    pivots = tuple(int(p) for p in pivots)
    out: List[Dict[int, int]] = [dict() for _ in pivots]
    for i, entries in reduced.to_sdm().items():
        if i < len(pivots):
            out[i] = {j: int(v) for j, v in entries.items() if v}
    return out, int(denominator), pivots


def rank(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> int:
    return len(row_reduce(rows, ncols)[1])


def nullspace(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> List[SparseVector]:
    """Basis of {x : row · x = 0 for every row}."""
    if ncols == 0:
        return []
    if not any(rows):
        return [{i: Fraction(1)} for i in range(ncols)]
    kernel = to_domain_matrix(rows, ncols).nullspace()
    return [row for row in _sparse_rows(kernel, kernel.shape[0]) if row]


def _dense_matrix(matrix: Sequence[Sequence], size: int) -> DomainMatrix:
    if len(matrix) != size or any(len(row) != size for row in matrix):
        raise DimensionMismatchError(f"expected a {size}x{size} matrix")
    return to_domain_matrix([as_sparse(row, size) for row in matrix], size)


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    size = len(matrix)
    if size == 0:
        return Fraction(1)
    return to_fraction(_dense_matrix(matrix, size).det())


def invert(matrix: Sequence[Sequence]) -> List[List[Fraction]]:
    """Inverse of a square rational matrix."""
    size = len(matrix)
    if size == 0:
        return []
    try:
        inverse = _dense_matrix(matrix, size).inv()
    except DMNonInvertibleMatrixError:
        raise ParameterError("matrix is not invertible")
    sparse = _sparse_rows(inverse, size)
    return [list(as_dense(row, size)) for row in sparse]


def rational_eigenspaces(matrix: Sequence[Sequence]) -> List[Tuple[Fraction, "Subspace"]]:
    """
    Eigenvalues and eigenspaces of a square rational matrix acting on columns.

    Raises:
        ParameterError: if the characteristic polynomial does not split over QQ
    """
    size = len(matrix)
    if size == 0:
        return []
    domain_matrix = _dense_matrix(matrix, size)
    t = Dummy("t")
    coefficients = [QQ.to_sympy(c) for c in domain_matrix.charpoly()]
    found = roots(Poly(coefficients, t), filter="Q")
    if sum(found.values()) != size:
        raise ParameterError("characteristic polynomial does not split over the rationals")

    rows = [as_sparse(row, size) for row in matrix]
    spaces = []
    for value in sorted(to_fraction(r) for r in found):
        shifted = []
        for i, row in enumerate(rows):
            row = dict(row)
            row[i] = row.get(i, Fraction(0)) - value
            shifted.append({j: v for j, v in row.items() if v})
        spaces.append((value, Subspace.span(nullspace(shifted, size), size)))
    return spaces


@dataclass(frozen=True)
class Subspace:
    """
    A subspace of Q^ambient_dim stored as its reduced row echelon basis.

    The rref basis is canonical, so two subspaces are equal exactly when
    their dataclass fields are equal.
    """

    ambient_dim: int
    basis: Tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[VectorLike], ambient_dim: int) -> "Subspace":
        rows = [as_sparse(v, ambient_dim) for v in vectors]
        reduced, _ = row_reduce(rows, ambient_dim)
        return cls(ambient_dim, tuple(as_dense(r, ambient_dim) for r in reduced))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(({i: 1} for i in range(ambient_dim)), ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, v in enumerate(row) if v) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def sparse_basis(self) -> List[SparseVector]:
        return [as_sparse(row, self.ambient_dim) for row in self.basis]

    def reduce(self, vector: VectorLike) -> SparseVector:
        """Canonical representative of vector modulo this subspace."""
        residual = as_sparse(vector, self.ambient_dim)
        for pivot, row in zip(self.pivots, self.basis):
            factor = residual.get(pivot)
            if not factor:
                continue
            for j, value in enumerate(row):
                if value:
                    updated = residual.get(j, Fraction(0)) - factor * value
                    if updated:
                        residual[j] = updated
                    else:
                        residual.pop(j, None)
        return residual

    def contains(self, vector: VectorLike) -> bool:
        return not self.reduce(vector)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(row) for row in self.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(list(self.basis) + list(other.basis), self.ambient_dim)

    def annihilator(self) -> "Subspace":
        """The subspace {x : b · x = 0 for every basis row b}."""
        return Subspace.span(nullspace(self.sparse_basis(), self.ambient_dim), self.ambient_dim)

    def intersection(self, other: "Subspace") -> "Subspace":
        constraints = self.annihilator().sparse_basis() + other.annihilator().sparse_basis()
        return Subspace.span(nullspace(constraints, self.ambient_dim), self.ambient_dim)
