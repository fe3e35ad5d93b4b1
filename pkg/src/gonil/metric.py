"""Symmetric bilinear forms on a Lie algebra and the metric pairing.

Restriction, radical, orthogonal complement and the induced quotient form are
all exact subspace computations on Gram matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from gonil.lie import LieAlgebra, is_nilpotent, derived_subalgebra
from gonil.linalg import (
    DimensionMismatch,
    Matrix,
    SignatureTriple,
    Subspace,
    Vec,
    kernel,
    symmetric_signature,
    to_vec,
)


class PreconditionError(ValueError):
    """An operation's stated precondition does not hold for the given input."""


@dataclass(frozen=True)
class SymForm:
    """A symmetric bilinear form given by its Gram matrix."""

    gram: Matrix

    def __post_init__(self):
        if not self.gram.is_symmetric():
            raise PreconditionError("Gram matrix must be symmetric")

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        return sum(
            (a * b for a, b in zip(self.gram @ to_vec(y), to_vec(x))), Fraction(0)
        )

    def signature(self) -> SignatureTriple:
        return symmetric_signature(self.gram)

    def is_nondegenerate(self) -> bool:
        return self.signature().r == 0

    def radical(self) -> Subspace:
        """{x : <x, .> = 0}, in the form's own coordinates."""
        return Subspace(self.dim, kernel(self.gram))


@dataclass(frozen=True)
class MetricLieAlgebra:
    """A nilpotent Lie algebra together with a nondegenerate symmetric form."""

    algebra: LieAlgebra
    form: SymForm

    def __post_init__(self):
        if self.algebra.dim != self.form.dim:
            raise DimensionMismatch("algebra and form dimensions differ")

    @classmethod
    def checked(cls, algebra: LieAlgebra, form: SymForm) -> MetricLieAlgebra:
        """Construct with full invariant validation (nondegeneracy, nilpotency)."""
        m = cls(algebra, form)
        if not form.is_nondegenerate():
            raise PreconditionError("metric form must be nondegenerate")
        if not is_nilpotent(algebra):
            raise PreconditionError("algebra must be nilpotent")
        return m

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        return self.form.pair(x, y)

    def nprime(self) -> Subspace:
        return derived_subalgebra(self.algebra)

    def v_complement(self) -> Subspace:
        """The orthogonal complement of the derived algebra."""
        return orth_complement(self, self.nprime())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MetricLieAlgebra)
            and self.algebra == other.algebra
            and self.form.gram == other.form.gram
        )


def orth_complement(m: MetricLieAlgebra, v: Subspace) -> Subspace:
    """{x : <x, w> = 0 for all w in V} with respect to m's form."""
    if v.ambient_dim != m.dim:
        raise DimensionMismatch("subspace does not live in the algebra")
    if v.dim == 0:
        return Subspace.full(m.dim)
    return Subspace(m.dim, kernel(v.basis @ m.form.gram))


def restrict_form(m: MetricLieAlgebra, v: Subspace) -> SymForm:
    """Gram matrix of the form in V's canonical basis."""
    if v.ambient_dim != m.dim:
        raise DimensionMismatch("subspace does not live in the algebra")
    return SymForm(v.basis @ m.form.gram @ v.basis.transpose())


def radical_of_restriction(m: MetricLieAlgebra, v: Subspace) -> Subspace:
    """Radical of the restricted form, re-embedded in ambient coordinates."""
    restricted = restrict_form(m, v)
    coords = restricted.radical()
    vecs = [_combine(v.basis, c) for c in coords.basis.rows]
    return Subspace.span(m.dim, vecs)


def quotient_form(m: MetricLieAlgebra, m1: Subspace, eg: Subspace) -> tuple[SymForm, Matrix]:
    """Form induced on a canonical complement of eg inside m1.

    Preconditions: eg <= m1, <eg, m1> = 0, and dim m1 + dim eg = dim of the
    algebra; under these the induced form is nondegenerate and independent of
    the complement choice up to congruence.  Returns the form together with
    the complement's rows (in ambient coordinates).
    """
    if not eg <= m1:
        raise PreconditionError("eg is not contained in m1")
    for x in eg.basis.rows:
        for y in m1.basis.rows:
            if m.pair(x, y) != 0:
                raise PreconditionError("<eg, m1> != 0")
    if m1.dim + eg.dim != m.dim:
        raise PreconditionError("dim m1 + dim eg != dim n")
    comp = eg.complement_rows_within(m1)
    gram = comp @ m.form.gram @ comp.transpose()
    form = SymForm(gram)
    if not form.is_nondegenerate():
        raise PreconditionError("induced form is degenerate (is the ambient form nondegenerate?)")
    return form, comp


def _combine(basis: Matrix, coeffs: Vec) -> Vec:
    out = [Fraction(0)] * basis.ncols
    for c, row in zip(coeffs, basis.rows):
        if c:
            for j, a in enumerate(row):
                out[j] += c * a
    return tuple(out)
