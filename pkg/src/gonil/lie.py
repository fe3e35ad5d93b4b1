"""Lie algebras given by sparse structure constants.

A bracket table stores only pairs (i, j) with i < j; antisymmetry is
structural.  The Jacobi identity is validated on construction unless the
caller explicitly opts out (needed to inspect broken candidate tables).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from gonil.linalg import (
    DimensionMismatch,
    Matrix,
    Subspace,
    Vec,
    is_zero_vec,
    solve_linear,
    to_vec,
    vec_add,
)

BracketTable = Mapping[tuple[int, int], Mapping[int, Fraction]]


class JacobiError(ValueError):
    """The candidate bracket table violates the Jacobi identity."""

    def __init__(self, defects):
        self.defects = defects
        triples = ", ".join(str(t) for t, _ in defects[:3])
        super().__init__(f"Jacobi identity fails at {len(defects)} triple(s), e.g. {triples}")


class NotNilpotentError(ValueError):
    """Lower central series stabilized above zero."""


class EngelError(RuntimeError):
    """Engel flag extraction hit a zero common kernel."""


class LieAlgebra:
    """Finite-dimensional algebra over the rationals with antisymmetric bracket."""

    __slots__ = ("dim", "_table")

    def __init__(self, dim: int, brackets: BracketTable, validate: bool = True):
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), targets in brackets.items():
            if not (0 <= i < j < dim):
                raise DimensionMismatch(f"bracket key ({i},{j}) out of range for dim {dim}")
            entry = {}
            for k, c in targets.items():
                if not 0 <= k < dim:
                    raise DimensionMismatch(f"bracket target {k} out of range for dim {dim}")
                c = Fraction(c)
                if c:
                    entry[k] = c
            if entry:
                table[(i, j)] = entry
        self.dim = dim
        self._table = table
        if validate:
            defects = jacobi_defect(self)
            if defects:
                raise JacobiError(defects)

    @property
    def table(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {k: dict(v) for k, v in self._table.items()}

    def bracket_basis(self, i: int, j: int) -> Vec:
        """[e_i, e_j] as a coordinate vector."""
        out = [Fraction(0)] * self.dim
        if i == j:
            return tuple(out)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for k, c in self._table.get((i, j), {}).items():
            out[k] = sign * c
        return tuple(out)

    def bracket(self, x: Sequence, y: Sequence) -> Vec:
        x, y = to_vec(x), to_vec(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("bracket arguments must have the algebra's dimension")
        out = [Fraction(0)] * self.dim
        for (i, j), targets in self._table.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                for k, v in targets.items():
                    out[k] += c * v
        return tuple(out)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of y -> [x, y]; column b is [x, e_b]."""
        cols = [self.bracket(x, _basis_vec(self.dim, b)) for b in range(self.dim)]
        return Matrix(zip(*cols), ncols=self.dim)

    def ad_basis(self, i: int) -> Matrix:
        return self.ad(_basis_vec(self.dim, i))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self._table == other._table
        )

    def __hash__(self) -> int:
        return hash((self.dim, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self._table.items()))))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim {self.dim}, {len(self._table)} bracket entries)"


def _basis_vec(n: int, i: int) -> Vec:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def abelian(dim: int) -> LieAlgebra:
    return LieAlgebra(dim, {})


def jacobi_defect(alg: LieAlgebra) -> list[tuple[tuple[int, int, int], Vec]]:
    """All triples i<j<k where [e_i,[e_j,e_k]] + cyclic fails, with the defect."""
    n = alg.dim
    defects = []
    basis = [_basis_vec(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = vec_add(
                    vec_add(
                        alg.bracket(basis[i], alg.bracket_basis(j, k)),
                        alg.bracket(basis[j], alg.bracket_basis(k, i)),
                    ),
                    alg.bracket(basis[k], alg.bracket_basis(i, j)),
                )
                if not is_zero_vec(total):
                    defects.append(((i, j, k), total))
    return defects


def bracket_subspaces(alg: LieAlgebra, v: Subspace, w: Subspace) -> Subspace:
    """Span of [x, y] over basis vectors x of V and y of W."""
    _check_ambient(alg, v)
    _check_ambient(alg, w)
    vecs = [alg.bracket(x, y) for x in v.basis.rows for y in w.basis.rows]
    return Subspace.span(alg.dim, vecs)


def derived_subalgebra(alg: LieAlgebra) -> Subspace:
    vecs = []
    for (i, j) in alg._table:
        vecs.append(alg.bracket_basis(i, j))
    return Subspace.span(alg.dim, vecs)


def lower_central_series(alg: LieAlgebra) -> list[Subspace]:
    """Chain n >= [n,n] >= [n,[n,n]] >= ... down to the stable term."""
    full = Subspace.full(alg.dim)
    chain = [full]
    current = derived_subalgebra(alg)
    while True:
        chain.append(current)
        if current.dim == 0:
            return chain
        nxt = bracket_subspaces(alg, full, current)
        if nxt == current:
            return chain
        current = nxt


def nilpotency_step(alg: LieAlgebra) -> int:
    """Smallest s with n^s = 0, counting n^1 = [n,n]; abelian algebras have step 1."""
    chain = lower_central_series(alg)
    if chain[-1].dim != 0:
        raise NotNilpotentError(
            f"lower central series stabilizes at dimension {chain[-1].dim}"
        )
    return max(len(chain) - 1, 1)


def is_nilpotent(alg: LieAlgebra) -> bool:
    return lower_central_series(alg)[-1].dim == 0


def derived_series(alg: LieAlgebra) -> list[Subspace]:
    chain = [Subspace.full(alg.dim)]
    while True:
        current = chain[-1]
        nxt = bracket_subspaces(alg, current, current)
        if nxt == current:
            return chain
        chain.append(nxt)
        if nxt.dim == 0:
            return chain


def centralizer(alg: LieAlgebra, v: Subspace) -> Subspace:
    """{x : [x, w] = 0 for all w in V}."""
    _check_ambient(alg, v)
    if v.dim == 0:
        return Subspace.full(alg.dim)
    blocks = [alg.ad(w).scale(-1) for w in v.basis.rows]  # column a of -ad(w) is [e_a, w]
    from gonil.linalg import kernel

    return Subspace(alg.dim, kernel(Matrix.stack(blocks)))


def center(alg: LieAlgebra) -> Subspace:
    return centralizer(alg, Subspace.full(alg.dim))


def transporter(alg: LieAlgebra, v: Subspace, w: Subspace) -> Subspace:
    """{x : [x, V] <= W}."""
    _check_ambient(alg, v)
    _check_ambient(alg, w)
    if v.dim == 0:
        return Subspace.full(alg.dim)
    ann = w.annihilator()
    blocks = [ann @ alg.ad(u).scale(-1) for u in v.basis.rows]
    from gonil.linalg import kernel

    return Subspace(alg.dim, kernel(Matrix.stack(blocks)))


def is_ideal(alg: LieAlgebra, v: Subspace) -> bool:
    return bracket_subspaces(alg, Subspace.full(alg.dim), v) <= v


@dataclass(frozen=True)
class EngelFlag:
    """Ascending common-kernel chain and a basis making all operators strictly lower triangular."""

    spaces: tuple[Subspace, ...]  # W_1 < W_2 < ... < W_k = full space
    basis: Matrix  # rows ordered so that op(row_i) lies in span(row_{i+1}, ...)


def engel_flag(ops: Sequence[Matrix], closure_depth: int | None = None) -> EngelFlag:
    """Simultaneously strictly-triangularize a family of nilpotent operators.

    The family must span a Lie algebra of nilpotent operators once closed
    under commutators (the closure is computed, bounded by `closure_depth`,
    default dim^2 rounds).  Extraction walks ascending common kernels; a zero
    intermediate kernel means the precondition failed.
    """
    if not ops:
        raise ValueError("need at least one operator")
    n = ops[0].ncols
    for op in ops:
        if op.nrows != n or op.ncols != n:
            raise DimensionMismatch("operators must be square and same-sized")
        if not op.is_nilpotent():
            raise EngelError("no common kernel vector: an operator is not nilpotent")
    closed = _commutator_closure(list(ops), closure_depth or n * n)
    for op in closed:
        if not op.is_nilpotent():
            raise EngelError("no common kernel vector: commutator closure is not nilpotent")

    from gonil.linalg import kernel

    spaces: list[Subspace] = []
    current = Subspace.zero(n)
    while current.dim < n:
        ann = current.annihilator()
        stacked = Matrix.stack([ann @ op for op in ops])
        nxt = Subspace(n, kernel(stacked))
        if nxt.dim == current.dim:
            raise EngelError("no common kernel vector")
        spaces.append(nxt)
        current = nxt
    ordered: list[Vec] = []
    for idx in range(len(spaces) - 1, -1, -1):
        inner = spaces[idx - 1] if idx > 0 else Subspace.zero(n)
        ordered.extend(inner.complement_rows_within(spaces[idx]).rows)
    basis = Matrix(ordered, ncols=n)
    _verify_strict_triangularity(ops, basis)
    return EngelFlag(tuple(spaces), basis)


def _commutator_closure(ops: list[Matrix], depth: int) -> list[Matrix]:
    span = Subspace.span(ops[0].ncols ** 2, [op.vectorize() for op in ops])
    family = list(ops)
    for _ in range(depth):
        new = []
        for a in family:
            for b in family:
                c = a.commutator(b)
                if not span.contains_vector(c.vectorize()):
                    new.append(c)
                    span = span.plus(Subspace.span(span.ambient_dim, [c.vectorize()]))
        if not new:
            return family
        family.extend(new)
    return family


def _verify_strict_triangularity(ops: Sequence[Matrix], basis: Matrix) -> None:
    n = basis.nrows
    bt = basis.transpose()
    for op in ops:
        for j in range(n):
            image = op @ basis.row(j)
            sol = solve_linear(bt, image)
            assert sol is not None, "flag basis does not span"
            if any(sol.particular[i] != 0 for i in range(j + 1)):
                raise EngelError("triangularity verification failed")


def _check_ambient(alg: LieAlgebra, v: Subspace) -> None:
    if v.ambient_dim != alg.dim:
        raise DimensionMismatch("subspace ambient dimension differs from the algebra")
