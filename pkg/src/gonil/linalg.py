"""Exact rational linear algebra: matrices, solving, kernels, signatures.

Everything here works over arbitrary-precision rationals (``fractions.Fraction``);
there is no floating point anywhere.  Elimination uses the first-nonzero pivot
rule throughout, so every reduced form is canonical and reproducible across
runs and platforms.  Internally rows are cleared to primitive integer vectors
and reduced with integer row operations, which keeps entry growth (and run
time) under control.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

Vec = tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    """Raised when operand shapes are incompatible."""


def to_vec(entries: Iterable) -> Vec:
    return tuple(Fraction(x) for x in entries)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def vec_add(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in x)


def vec_dot(x: Vec, y: Vec) -> Fraction:
    if len(x) != len(y):
        raise DimensionMismatch("dot product needs equal lengths")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def is_zero_vec(x: Vec) -> bool:
    return all(a == 0 for a in x)


class Matrix:
    """Immutable dense matrix over rationals (row-major)."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if data:
            ncols = len(data[0]) if ncols is None else ncols
            if any(len(r) != ncols for r in data):
                raise DimensionMismatch("ragged rows")
        elif ncols is None:
            raise DimensionMismatch("empty matrix needs an explicit column count")
        self._rows = data
        self._ncols = ncols

    @classmethod
    def identity(cls, n: int) -> Matrix:
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Matrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def stack(cls, mats: Sequence[Matrix]) -> Matrix:
        if not mats:
            raise DimensionMismatch("nothing to stack")
        ncols = mats[0].ncols
        rows: list[Vec] = []
        for m in mats:
            if m.ncols != ncols:
                raise DimensionMismatch("stack needs equal column counts")
            rows.extend(m.rows)
        return cls(rows, ncols=ncols)

    @classmethod
    def from_vector(cls, vec: Sequence, n: int) -> Matrix:
        """Reshape a row-major length-n*n vector into an n-by-n matrix."""
        vec = to_vec(vec)
        if len(vec) != n * n:
            raise DimensionMismatch("vector length is not n*n")
        return cls([vec[i * n : (i + 1) * n] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def rows(self) -> tuple[Vec, ...]:
        return self._rows

    def row(self, i: int) -> Vec:
        return self._rows[i]

    def column(self, j: int) -> Vec:
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def transpose(self) -> Matrix:
        if not self._rows:
            return Matrix([[] for _ in range(self._ncols)], ncols=0)
        return Matrix(zip(*self._rows), ncols=self.nrows)

    def __add__(self, other: Matrix) -> Matrix:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch in addition")
        return Matrix(
            [tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)],
            ncols=self.ncols,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return Matrix([tuple(-a for a in r) for r in self._rows], ncols=self.ncols)

    def scale(self, c) -> Matrix:
        c = Fraction(c)
        return Matrix([tuple(c * a for a in r) for r in self._rows], ncols=self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch("inner dimensions differ")
            cols = other.transpose().rows
            return Matrix(
                [tuple(vec_dot(r, c) for c in cols) for r in self._rows],
                ncols=other.ncols,
            )
        vec = to_vec(other)
        if self.ncols != len(vec):
            raise DimensionMismatch("matrix-vector size mismatch")
        return tuple(vec_dot(r, vec) for r in self._rows)

    def apply(self, vec: Sequence) -> Vec:
        return self @ vec

    def commutator(self, other: Matrix) -> Matrix:
        return self @ other - other @ self

    def is_zero(self) -> bool:
        return all(a == 0 for r in self._rows for a in r)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def is_nilpotent(self) -> bool:
        if self.nrows != self.ncols:
            raise DimensionMismatch("nilpotency needs a square matrix")
        power = self
        for _ in range(self.nrows):
            if power.is_zero():
                return True
            power = power @ self
        return power.is_zero()

    def vectorize(self) -> Vec:
        return tuple(a for r in self._rows for a in r)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self._ncols == other._ncols
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self._ncols, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(",".join(str(a) for a in r) for r in self._rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


def _int_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Clear denominators and common factors, row by row."""
    out = []
    for row in rows:
        scale = math.lcm(*(f.denominator for f in row)) if row else 1
        ints = [int(f * scale) for f in row]
        g = math.gcd(*ints) if ints else 0
        if g > 1:
            ints = [a // g for a in ints]
        out.append(ints)
    return out


def _eliminate(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """In-place integer Gauss-Jordan; returns the rows and pivot columns.

    First nonzero entry in column order is the pivot.  Rows are combined as
    ``p*row - f*pivot_row`` and re-normalized by their gcd, so all arithmetic
    stays in the integers.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        pivot_row = None
        for r in range(pr, nrows):
            if rows[r][pc]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != pr:
            rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        p = rows[pr][pc]
        prow = rows[pr]
        for r in range(nrows):
            if r == pr:
                continue
            f = rows[r][pc]
            if not f:
                continue
            new = [p * a - f * b for a, b in zip(rows[r], prow)]
            g = math.gcd(*new)
            rows[r] = [a // g for a in new] if g > 1 else new
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return rows, pivots


class RRef(NamedTuple):
    matrix: Matrix  # zero rows dropped, pivot entries normalized to 1
    pivots: tuple[int, ...]


def rref(m: Matrix) -> RRef:
    """Canonical reduced row echelon form (first-nonzero pivot rule)."""
    rows, pivots = _eliminate(_int_rows(m.rows))
    reduced = []
    for r, pc in zip(rows, pivots):
        p = Fraction(r[pc])
        reduced.append(tuple(Fraction(a) / p for a in r))
    return RRef(Matrix(reduced, ncols=m.ncols), tuple(pivots))


def rank(m: Matrix) -> int:
    return len(rref(m).pivots)


def kernel(m: Matrix) -> Matrix:
    """Canonical reduced-echelon basis of the right kernel, as rows."""
    red, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    vecs = []
    for c in free:
        v = [Fraction(0)] * m.ncols
        v[c] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r, c]
        vecs.append(v)
    if not vecs:
        return Matrix([], ncols=m.ncols)
    return rref(Matrix(vecs, ncols=m.ncols)).matrix


@dataclass(frozen=True)
class LinearSolution:
    """One exact solution of A x = b together with a kernel basis of A."""

    particular: Vec
    kernel: Matrix


def solve_linear(a: Matrix, b: Sequence) -> LinearSolution | None:
    """Solve A x = b exactly; return None when the system is inconsistent."""
    b = to_vec(b)
    if a.nrows != len(b):
        raise DimensionMismatch("right-hand side length differs from row count")
    aug = Matrix([row + (bi,) for row, bi in zip(a.rows, b)], ncols=a.ncols + 1)
    red, pivots = rref(aug)
    if pivots and pivots[-1] == a.ncols:
        return None
    x = [Fraction(0)] * a.ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r, a.ncols]
    return LinearSolution(tuple(x), kernel(a))


def solve_unique(a: Matrix, b: Sequence) -> Vec | None:
    sol = solve_linear(a, b)
    return None if sol is None else sol.particular


class SignatureTriple(NamedTuple):
    """Counts of positive, negative, and radical directions of a symmetric form."""

    p: int
    q: int
    r: int


def congruence_diagonalize(g: Matrix) -> tuple[Matrix, Vec]:
    """Rational congruence diagonalization of a symmetric matrix.

    Returns rows ``b_i`` and values ``d_i`` with ``b_i G b_j^T = d_i delta_ij``.
    Pivots on the first usable diagonal entry; when all remaining diagonal
    entries vanish but some off-diagonal entry ``g_ij`` does not, substitutes
    ``b_i <- b_i + b_j`` first.  Entirely deterministic.
    """
    if not g.is_symmetric():
        raise ValueError("congruence diagonalization needs a symmetric matrix")
    n = g.nrows
    c = [list(row) for row in g.rows]
    basis = [list(row) for row in Matrix.identity(n).rows]
    active = list(range(n))
    out_rows: list[list[Fraction]] = []
    diag: list[Fraction] = []
    while active:
        pivot = next((i for i in active if c[i][i] != 0), None)
        if pivot is None:
            pair = next(
                (
                    (i, j)
                    for ai, i in enumerate(active)
                    for j in active[ai + 1 :]
                    if c[i][j] != 0
                ),
                None,
            )
            if pair is None:
                for i in active:
                    out_rows.append(basis[i])
                    diag.append(Fraction(0))
                break
            i, j = pair
            basis[i] = [a + b for a, b in zip(basis[i], basis[j])]
            for k in range(n):
                c[i][k] += c[j][k]
            for k in range(n):
                c[k][i] += c[k][j]
            continue
        d = c[pivot][pivot]
        for j in active:
            if j == pivot or c[pivot][j] == 0:
                continue
            f = c[pivot][j] / d
            basis[j] = [a - f * b for a, b in zip(basis[j], basis[pivot])]
            for k in range(n):
                c[j][k] -= f * c[pivot][k]
            for k in range(n):
                c[k][j] -= f * c[k][pivot]
        out_rows.append(basis[pivot])
        diag.append(d)
        active.remove(pivot)
    return Matrix(out_rows, ncols=n), tuple(diag)


def symmetric_signature(g: Matrix) -> SignatureTriple:
    """Signature (p, q, r) of a symmetric rational matrix (Sylvester's law)."""
    _, diag = congruence_diagonalize(g)
    p = sum(1 for d in diag if d > 0)
    q = sum(1 for d in diag if d < 0)
    return SignatureTriple(p, q, len(diag) - p - q)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class Subspace:
    """A linear subspace in canonical form: rref rows of a basis matrix."""

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> Subspace:
        rows = [to_vec(v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatch("spanning vector has wrong length")
        if not rows:
            return cls(ambient_dim, Matrix([], ncols=ambient_dim))
        return cls(ambient_dim, rref(Matrix(rows, ncols=ambient_dim)).matrix)

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix([], ncols=ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def pivots(self) -> tuple[int, ...]:
        out = []
        for row in self.basis.rows:
            out.append(next(j for j, a in enumerate(row) if a != 0))
        return tuple(out)

    def reduce_vector(self, vec: Sequence) -> Vec:
        """Residual of vec after eliminating along this subspace's pivots."""
        v = list(to_vec(vec))
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector has wrong length")
        for row, pc in zip(self.basis.rows, self.pivots):
            c = v[pc]
            if c:
                for j in range(pc, self.ambient_dim):
                    v[j] -= c * row[j]
        return tuple(v)

    def contains_vector(self, vec: Sequence) -> bool:
        return is_zero_vec(self.reduce_vector(vec))

    def coordinates(self, vec: Sequence) -> Vec | None:
        """Coefficients of vec in this basis, or None if outside."""
        sol = solve_linear(self.basis.transpose(), vec)
        return None if sol is None else sol.particular

    def __le__(self, other: Subspace) -> bool:
        return all(other.contains_vector(r) for r in self.basis.rows)

    def plus(self, other: Subspace) -> Subspace:
        self._check_ambient(other)
        rows = list(self.basis.rows) + list(other.basis.rows)
        return Subspace.span(self.ambient_dim, rows)

    def annihilator(self) -> Matrix:
        """Rows y with (basis) y = 0; membership test x in V <=> ann @ x = 0."""
        if self.dim == 0:
            return Matrix.identity(self.ambient_dim)
        return kernel(self.basis)

    def intersect(self, other: Subspace) -> Subspace:
        self._check_ambient(other)
        stacked = Matrix.stack([self.annihilator(), other.annihilator()])
        return Subspace(self.ambient_dim, kernel(stacked))

    def complement_rows_within(self, larger: Subspace) -> Matrix:
        """Rows of `larger`'s canonical basis whose pivots this subspace does not use.

        Requires self <= larger; the returned rows span a complement of self
        inside larger, deterministically.
        """
        if not self <= larger:
            raise ValueError("complement requires containment")
        used = set(self.pivots)
        rows = [r for r, pc in zip(larger.basis.rows, larger.pivots) if pc not in used]
        return Matrix(rows, ncols=self.ambient_dim)

    def _check_ambient(self, other: Subspace) -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces live in different ambient spaces")

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"
