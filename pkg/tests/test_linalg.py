import random
from fractions import Fraction

import pytest

from gonil.linalg import (
    DimensionMismatch,
    Matrix,
    Subspace,
    congruence_diagonalize,
    is_zero_vec,
    kernel,
    rank,
    rational_sqrt,
    rref,
    solve_linear,
    symmetric_signature,
    to_vec,
    vec_sub,
)
from oracles import (
    naive_rref,
    random_invertible_matrix,
    random_rational_matrix,
    random_symmetric_matrix,
    signature_by_descartes,
    signature_by_random_congruence,
)


def test_solve_identity():
    sol = solve_linear(Matrix.identity(3), [1, 2, 3])
    assert sol is not None
    assert sol.particular == to_vec([1, 2, 3])
    assert sol.kernel.nrows == 0


def test_solve_inconsistent_rows():
    a = Matrix([[1, 1], [1, 1]])
    assert solve_linear(a, [0, 1]) is None


def test_solve_random_invertible_by_substitution():
    rng = random.Random(42)
    for _ in range(20):
        a = random_invertible_matrix(rng, 3)
        b = to_vec([rng.randint(-9, 9) for _ in range(3)])
        sol = solve_linear(a, b)
        assert sol is not None
        assert a @ sol.particular == b
        assert sol.kernel.nrows == 0


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        solve_linear(Matrix.identity(3), [1, 2])


def test_kernel_zero_matrix():
    assert kernel(Matrix.zeros(2, 3)).nrows == 3


def test_kernel_identity():
    assert kernel(Matrix.identity(4)).nrows == 0


def test_kernel_single_row_by_substitution():
    a = Matrix([[1, 2, 3]])
    k = kernel(a)
    assert k.nrows == 2
    for v in k.rows:
        assert is_zero_vec(a @ v)


def test_solve_and_kernel_back_substitution_random():
    # 100 random systems, mixed shapes; exactness is the whole point.
    rng = random.Random(7)
    for _ in range(100):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
        a = random_rational_matrix(rng, nrows, ncols)
        x0 = to_vec([Fraction(rng.randint(-5, 5), rng.randint(1, 2)) for _ in range(ncols)])
        b = a @ x0
        sol = solve_linear(a, b)
        assert sol is not None, "consistent by construction"
        assert a @ sol.particular == b
        for v in sol.kernel.rows:
            assert is_zero_vec(a @ v)
        assert rank(a) + sol.kernel.nrows == ncols


def test_rref_matches_naive_fraction_reference():
    rng = random.Random(555)
    for _ in range(60):
        nr, nc = rng.randint(1, 7), rng.randint(1, 7)
        m = Matrix(
            [
                [Fraction(rng.randint(-50, 50), rng.randint(1, 17)) for _ in range(nc)]
                for _ in range(nr)
            ],
            ncols=nc,
        )
        assert rref(m) == naive_rref(m)


def test_signature_on_degenerate_low_rank_forms():
    rng = random.Random(556)
    for _ in range(30):
        n = rng.randint(3, 7)
        r = rng.randint(1, n - 1)
        b = Matrix([[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(r)], ncols=n)
        signs = Matrix(
            [[Fraction(rng.choice((1, -1))) if i == j else Fraction(0) for j in range(r)] for i in range(r)]
        )
        g = b.transpose() @ signs @ b
        sig = symmetric_signature(g)
        assert sig == signature_by_descartes(g)
        assert sig.r >= n - r


def test_rref_canonical_and_idempotent():
    rng = random.Random(3)
    for _ in range(25):
        m = random_rational_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        red, pivots = rref(m)
        again, pivots2 = rref(red)
        assert red == again and pivots == pivots2
        for i, pc in enumerate(pivots):
            assert red[i, pc] == 1
            assert all(red[r, pc] == 0 for r in range(red.nrows) if r != i)


def test_signature_diag():
    assert symmetric_signature(Matrix([[1, 0, 0], [0, 1, 0], [0, 0, -1]])) == (2, 1, 0)


def test_signature_hyperbolic_plane():
    assert symmetric_signature(Matrix([[0, 1], [1, 0]])) == (1, 1, 0)


def test_signature_rejects_asymmetric():
    with pytest.raises(ValueError):
        symmetric_signature(Matrix([[0, 1], [2, 0]]))


def test_signature_lorentz_block_form():
    # antidiagonal ones framing an identity block: one hyperbolic plane plus
    # two positive directions
    g = Matrix([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]])
    assert symmetric_signature(g) == (3, 1, 0)


def test_signature_eight_dim_block_form():
    # blocks (2,1,2,1,2): two hyperbolic pairs, a third plane, and I_2
    g = [[0] * 8 for _ in range(8)]
    for a, b in ((0, 6), (1, 7), (2, 5)):
        g[a][b] = g[b][a] = 1
    g[3][3] = g[4][4] = 1
    assert symmetric_signature(Matrix(g)) == (5, 3, 0)


def test_signature_agrees_with_oracles_on_random_instances():
    rng = random.Random(2024)
    for _ in range(100):
        n = rng.randint(2, 6)
        g = random_symmetric_matrix(rng, n)
        sig = symmetric_signature(g)
        assert sig == signature_by_descartes(g)
        assert sig == signature_by_random_congruence(g, rng)
        assert sig.p + sig.q + sig.r == n


def test_signature_congruence_invariance():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(2, 4)
        g = random_symmetric_matrix(rng, n)
        p = random_invertible_matrix(rng, n)
        assert symmetric_signature(p.transpose() @ g @ p) == symmetric_signature(g)


def test_congruence_diagonalize_certifies_itself():
    rng = random.Random(5)
    for _ in range(25):
        g = random_symmetric_matrix(rng, rng.randint(1, 5))
        basis, diag = congruence_diagonalize(g)
        prod = basis @ g @ basis.transpose()
        for i in range(g.nrows):
            for j in range(g.nrows):
                assert prod[i, j] == (diag[i] if i == j else 0)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


def test_subspace_sum_intersection_dims():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(2, 6)
        v = Subspace.span(n, [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(0, n))])
        w = Subspace.span(n, [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(0, n))])
        s, t = v.plus(w), v.intersect(w)
        assert s.dim + t.dim == v.dim + w.dim
        assert t <= v and t <= w and v <= s and w <= s


def test_subspace_membership_and_coordinates():
    v = Subspace.span(4, [[1, 0, 2, 0], [0, 1, -1, 0]])
    assert v.contains_vector([2, 3, 1, 0])
    assert not v.contains_vector([0, 0, 0, 1])
    coords = v.coordinates([2, 3, 1, 0])
    assert coords is not None
    recovered = [Fraction(0)] * 4
    for c, row in zip(coords, v.basis.rows):
        recovered = [a + c * b for a, b in zip(recovered, row)]
    assert is_zero_vec(vec_sub(tuple(recovered), to_vec([2, 3, 1, 0])))


def test_subspace_complement_rows():
    big = Subspace.span(4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    small = Subspace.span(4, [[0, 1, 1, 0]])
    comp = small.complement_rows_within(big)
    assert comp.nrows == 2
    rebuilt = Subspace.span(4, list(comp.rows) + list(small.basis.rows))
    assert rebuilt == big
