from __future__ import annotations

from fractions import Fraction

import pytest

from gonil.catalog import build_example
from gonil.isotropy import isotropy_algebra
from gonil.lie import LieAlgebra
from gonil.linalg import Matrix
from gonil.metric import MetricLieAlgebra, SymForm


@pytest.fixture(scope="session")
def paper():
    return build_example("paper_2_3")


@pytest.fixture(scope="session")
def paper_iso(paper):
    return isotropy_algebra(paper.algebra)


@pytest.fixture(scope="session")
def de5():
    return build_example("de5").algebra


@pytest.fixture(scope="session")
def de7():
    return build_example("de7_lorentz").algebra


@pytest.fixture(scope="session")
def heis3():
    return build_example("heis3").algebra


@pytest.fixture(scope="session")
def filiform4():
    return build_example("filiform4").algebra


@pytest.fixture(scope="session")
def abelian4():
    return build_example("abelian_n").algebra


def necessary_condition_counterexample() -> MetricLieAlgebra:
    """4-dim algebra [f,e1]=e2, [f,e2]=e3 with <e2,e3> = 1: violates <[T,X],X> = 0."""
    alg = LieAlgebra(4, {(0, 1): {2: 1}, (0, 2): {3: 1}})
    g = [[Fraction(0)] * 4 for _ in range(4)]
    g[0][0] = g[1][1] = Fraction(1)
    g[2][3] = g[3][2] = Fraction(1)
    return MetricLieAlgebra.checked(alg, SymForm(Matrix(g)))


def engel_witness_algebra() -> MetricLieAlgebra:
    """6-dim, signature (4,2): degeneracy-2 restriction whose null plane does
    not commute with its orthogonal, so the reduction needs the common-kernel
    (Engel) step.  Basis (a, b, z1, z2, p, q): [a,b] = z1, [a,z1] = z2;
    z1, z2 null and paired with p, q."""
    brackets = {(0, 1): {2: 1}, (0, 2): {3: 1}}
    g = [[Fraction(0)] * 6 for _ in range(6)]
    g[0][0] = g[1][1] = Fraction(1)
    g[2][4] = g[4][2] = Fraction(1)
    g[3][5] = g[5][3] = Fraction(1)
    return MetricLieAlgebra.checked(LieAlgebra(6, brackets), SymForm(Matrix(g)))
