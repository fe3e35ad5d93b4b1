"""Derivations, skew-symmetric operators, and the isotropy algebra.

An OperatorSpace is a linear space of n-by-n operators in canonical form:
the operators vectorize row-major into an n^2-dimensional coordinate space
and the basis is kept in reduced echelon form there, so equality and
membership are plain rank checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gonil.lie import LieAlgebra
from gonil.linalg import DimensionMismatch, Matrix, Subspace, kernel
from gonil.metric import MetricLieAlgebra, SymForm


@dataclass(frozen=True)
class OperatorSpace:
    """A canonicalized linear space of square matrices over the rationals."""

    ambient_dim: int
    basis: tuple[Matrix, ...]

    @classmethod
    def from_operators(cls, ambient_dim: int, ops, commutator_closed: bool = False) -> OperatorSpace:
        span = Subspace.span(ambient_dim * ambient_dim, [op.vectorize() for op in ops])
        mats = tuple(Matrix.from_vector(v, ambient_dim) for v in span.basis.rows)
        space = cls(ambient_dim, mats)
        if commutator_closed:
            space.verify_commutator_closed()
        return space

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _span(self) -> Subspace:
        n2 = self.ambient_dim * self.ambient_dim
        if not self.basis:
            return Subspace.zero(n2)
        return Subspace(n2, Matrix([op.vectorize() for op in self.basis], ncols=n2))

    def contains(self, op: Matrix) -> bool:
        return self._span().contains_vector(op.vectorize())

    def coordinates(self, op: Matrix):
        """Coefficients of op in this basis, or None if outside the span."""
        return self._span().coordinates(op.vectorize())

    def combine(self, coeffs) -> Matrix:
        """The operator with the given coefficients in this basis."""
        out = Matrix.zeros(self.ambient_dim, self.ambient_dim)
        for c, op in zip(coeffs, self.basis):
            c = Fraction(c)
            if c:
                out = out + op.scale(c)
        return out

    def verify_commutator_closed(self) -> None:
        span = self._span()
        for i, a in enumerate(self.basis):
            for b in self.basis[i + 1 :]:
                if not span.contains_vector(a.commutator(b).vectorize()):
                    raise ValueError("operator space is not closed under commutators")

    def intersect(self, other: OperatorSpace) -> OperatorSpace:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("operator spaces act on different dimensions")
        meet = self._span().intersect(other._span())
        mats = tuple(Matrix.from_vector(v, self.ambient_dim) for v in meet.basis.rows)
        return OperatorSpace(self.ambient_dim, mats)


def derivation_space(alg: LieAlgebra) -> OperatorSpace:
    """All D with D[x,y] = [Dx,y] + [x,Dy], via one kernel computation.

    Unknowns are the n^2 entries of D, row-major: index(l, k) = l*n + k.
    """
    n = alg.dim
    table = alg.table
    rows: list[list[Fraction]] = []
    zero = Fraction(0)
    for i in range(n):
        for j in range(i + 1, n):
            targets = table.get((i, j), {})
            b_lj = [alg.bracket_basis(l, j) for l in range(n)]
            b_il = [alg.bracket_basis(i, l) for l in range(n)]
            for m in range(n):
                row = [zero] * (n * n)
                # [D e_i, e_j]_m = sum_l D[l,i] c^m_{l j}
                # [e_i, D e_j]_m = sum_l D[l,j] c^m_{i l}
                for l in range(n):
                    c = b_lj[l][m]
                    if c:
                        row[l * n + i] += c
                    c = b_il[l][m]
                    if c:
                        row[l * n + j] += c
                # - D([e_i, e_j])_m = - sum_k c^k_{ij} D[m,k]
                for k, c in targets.items():
                    row[m * n + k] -= c
                if any(row):
                    rows.append(row)
    if not rows:
        return OperatorSpace.from_operators(
            n, [Matrix.from_vector(v, n) for v in Subspace.full(n * n).basis.rows]
        )
    ker = kernel(Matrix(rows, ncols=n * n))
    return OperatorSpace(n, tuple(Matrix.from_vector(v, n) for v in ker.rows))


def is_derivation(alg: LieAlgebra, op: Matrix) -> bool:
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            lhs = op @ alg.bracket_basis(i, j)
            rhs_vecs = alg.bracket(op.column(i), _basis(alg.dim, j)), alg.bracket(
                _basis(alg.dim, i), op.column(j)
            )
            if lhs != tuple(a + b for a, b in zip(*rhs_vecs)):
                return False
    return True


def skew_space(form: SymForm) -> OperatorSpace:
    """All D with D^T G + G D = 0 for the form's Gram matrix G."""
    n = form.dim
    g = form.gram
    rows = []
    zero = Fraction(0)
    for a in range(n):
        for b in range(a, n):
            row = [zero] * (n * n)
            for l in range(n):
                if g[l, b]:
                    row[l * n + a] += g[l, b]
                if g[a, l]:
                    row[l * n + b] += g[a, l]
            if any(row):
                rows.append(row)
    if not rows:
        return OperatorSpace.from_operators(
            n, [Matrix.from_vector(v, n) for v in Subspace.full(n * n).basis.rows]
        )
    ker = kernel(Matrix(rows, ncols=n * n))
    return OperatorSpace(n, tuple(Matrix.from_vector(v, n) for v in ker.rows))


def is_skew(form: SymForm, op: Matrix) -> bool:
    return (op.transpose() @ form.gram + form.gram @ op).is_zero()


def isotropy_algebra(m: MetricLieAlgebra) -> OperatorSpace:
    """Skew-symmetric derivations of (n, <.,.>): the isotropy algebra.

    Closed under commutators; the closure is re-verified on construction.
    """
    space = derivation_space(m.algebra).intersect(skew_space(m.form))
    space.verify_commutator_closed()
    return space


def is_isotropy_member(m: MetricLieAlgebra, op: Matrix) -> bool:
    return is_skew(m.form, op) and is_derivation(m.algebra, op)


def is_adh_invariant(m: MetricLieAlgebra, v: Subspace, h: OperatorSpace | None = None) -> bool:
    """True iff D(V) <= V for every basis operator D of the isotropy algebra."""
    if v.ambient_dim != m.dim:
        raise DimensionMismatch("subspace does not live in the algebra")
    if h is None:
        h = isotropy_algebra(m)
    return all(v.contains_vector(d @ x) for d in h.basis for x in v.basis.rows)


def _basis(n: int, i: int):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)
