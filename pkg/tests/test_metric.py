import random
from fractions import Fraction

import pytest

from gonil.lie import abelian
from gonil.linalg import Matrix, Subspace
from gonil.metric import (
    MetricLieAlgebra,
    PreconditionError,
    SymForm,
    orth_complement,
    quotient_form,
    radical_of_restriction,
    restrict_form,
)
from oracles import random_invertible_matrix


def random_metric_abelian(rng, n):
    # congruence image of a random +/-1 diagonal: nondegenerate, mixed signature
    p = random_invertible_matrix(rng, n, 3)
    signs = Matrix([[Fraction(rng.choice((1, -1))) if i == j else Fraction(0) for j in range(n)] for i in range(n)])
    gram = p.transpose() @ signs @ p
    return MetricLieAlgebra.checked(abelian(n), SymForm(gram))


def test_orth_complement_of_zero(abelian4):
    assert orth_complement(abelian4, Subspace.zero(4)) == Subspace.full(4)


def test_orth_complement_paper(paper):
    m = paper.algebra
    v = orth_complement(m, m.nprime())
    f_span = Subspace.span(12, [[1 if j == i else 0 for j in range(12)] for i in range(8)])
    assert v == f_span


def test_double_complement_random():
    rng = random.Random(21)
    for _ in range(20):
        n = rng.randint(2, 5)
        m = random_metric_abelian(rng, n)
        v = Subspace.span(n, [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(0, n))])
        w = orth_complement(m, v)
        assert v.dim + w.dim == n
        assert orth_complement(m, w) == v


def test_restrict_paper_nprime(paper):
    m = paper.algebra
    assert tuple(restrict_form(m, m.nprime()).signature()) == (3, 1, 0)


def test_restrict_de5_nprime(de5):
    sig = restrict_form(de5, de5.nprime()).signature()
    assert tuple(sig) == (1, 0, 1)  # degeneracy 1, semidefinite


def test_radical_of_zero_form():
    gram = Matrix.zeros(3, 3)
    assert SymForm(gram).radical().dim == 3


def test_radical_of_restriction_is_ambient(de5):
    rad = radical_of_restriction(de5, de5.nprime())
    assert rad.dim == 1
    assert rad.contains_vector((0, 0, 0, 0, 1))  # the central direction e


def test_quotient_form_trivial_eg(abelian4):
    form, comp = quotient_form(abelian4, Subspace.full(4), Subspace.zero(4))
    assert form.gram == abelian4.form.gram
    assert comp == Matrix.identity(4)


def test_quotient_form_de5(de5):
    m1 = Subspace.span(5, [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    eg = Subspace.span(5, [[0, 0, 0, 0, 1]])
    form, comp = quotient_form(de5, m1, eg)
    assert form.gram == Matrix.identity(3)
    assert comp.nrows == 3


def test_quotient_form_rejects_non_containment(de5):
    eg = Subspace.span(5, [[1, 0, 0, 0, 0]])  # f is not inside m1
    m1 = Subspace.span(5, [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    with pytest.raises(PreconditionError, match="not contained"):
        quotient_form(de5, m1, eg)


def test_quotient_form_rejects_dimension_mismatch(de5):
    # eg and m1 orthogonal and nested, but dims sum to 4 != 5
    m1 = Subspace.span(5, [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 1]])
    eg = Subspace.span(5, [[0, 0, 0, 0, 1]])
    with pytest.raises(PreconditionError, match="dim"):
        quotient_form(de5, m1, eg)


def test_quotient_form_rejects_nonorthogonal(paper):
    m = paper.algebra
    eg = Subspace.span(12, [[1 if i == 8 else 0 for i in range(12)]])  # e1 pairs with e4
    m1 = orth_complement(m, Subspace.span(12, [[1 if i == 0 else 0 for i in range(12)]]))
    with pytest.raises(PreconditionError):
        quotient_form(m, m1, eg)


def test_full_signature_paper(paper):
    assert tuple(paper.algebra.form.signature()) == (8, 4, 0)


def test_signature_additivity_on_orthogonal_split(paper):
    m = paper.algebra
    s1 = restrict_form(m, m.nprime()).signature()
    s2 = restrict_form(m, m.v_complement()).signature()
    total = m.form.signature()
    assert (s1.p + s2.p, s1.q + s2.q, s1.r + s2.r) == tuple(total)


def test_checked_rejects_degenerate_form():
    with pytest.raises(PreconditionError, match="nondegenerate"):
        MetricLieAlgebra.checked(abelian(2), SymForm(Matrix([[1, 0], [0, 0]])))


def test_checked_rejects_non_nilpotent():
    from gonil.lie import LieAlgebra

    solvable = LieAlgebra(2, {(0, 1): {1: 1}})
    with pytest.raises(PreconditionError, match="nilpotent"):
        MetricLieAlgebra.checked(solvable, SymForm(Matrix.identity(2)))
