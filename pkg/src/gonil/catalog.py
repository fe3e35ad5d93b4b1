"""Built-in named examples with exact data and a full verification pipeline.

The centerpiece is ``paper_2_3``: a 12-dimensional, 4-step nilpotent metric
Lie algebra of signature (8,4) whose derived algebra is Lorentz, together
with the explicit family of skew derivations (linear in the tangent vector)
that witnesses its geodesic-orbit property.  The remaining entries are small
reference algebras and forward-built degenerate examples for reduction tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from gonil.double_ext import DegeneracyTag, ExtensionData, classify_degeneracy, extend2
from gonil.go_engine import linear_go_certificate
from gonil.isotropy import is_derivation, is_skew, isotropy_algebra
from gonil.lie import (
    LieAlgebra,
    abelian,
    bracket_subspaces,
    center,
    is_ideal,
    jacobi_defect,
    lower_central_series,
    nilpotency_step,
)
from gonil.linalg import Matrix, Subspace, Vec, to_vec
from gonil.metric import MetricLieAlgebra, SymForm, restrict_form


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class Expected:
    """An invariant value pinned at build time; re-verified on load."""

    value: object
    source: str  # "stated" for values the construction documents, "derived" for hand expansions


@dataclass(frozen=True)
class NamedExample:
    name: str
    algebra: MetricLieAlgebra
    expected: Mapping[str, Expected] = field(default_factory=dict)
    witness_operators: tuple[Matrix, ...] | None = None


EXAMPLE_NAMES = ("paper_2_3", "abelian_n", "heis3", "filiform4", "de5", "de7_lorentz")

# Basis layout of paper_2_3: f1..f8 then e1..e4.
_F1, _F2, _F3, _F4, _F5, _F6, _F7, _F8 = range(8)
_E1, _E2, _E3, _E4 = 8, 9, 10, 11

PAPER_BASIS_NAMES = ("f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "e1", "e2", "e3", "e4")


def _paper_algebra() -> MetricLieAlgebra:
    # Forgetting the inner product, the algebra splits as the direct sum of
    # the 6-dimensional ideal span(f1, f2, e1..e4) - the algebra L_{6,21}(1)
    # of the standard nilpotent classification lists (documentation note
    # only; no isomorphism checking here) - and a 6-dimensional abelian
    # ideal.
    brackets = {
        (_F1, _E1): {_E2: 1},
        (_F2, _E1): {_E3: 1},
        (_F1, _E2): {_E4: -1},
        (_F2, _E3): {_E4: -1},
        (_F1, _F2): {_E1: 1},
        (_F1, _F6): {_E2: 1},
        (_F2, _F6): {_E3: 1},
        (_F1, _F4): {_E4: 1},
        (_F2, _F5): {_E4: 1},
    }
    g = [[Fraction(0)] * 12 for _ in range(12)]
    for a, b in ((_F1, _F7), (_F2, _F8), (_F3, _F6), (_E1, _E4)):
        g[a][b] = g[b][a] = Fraction(1)
    for a in (_F4, _F5, _E2, _E3):
        g[a][a] = Fraction(1)
    return MetricLieAlgebra.checked(LieAlgebra(12, brackets), SymForm(Matrix(g)))


def paper_isotropy_operator(t: Sequence) -> Matrix:
    """The example's skew derivation, linear in the tangent vector.

    Block diagonal: an 8x8 block on the f-part and a 4x4 block on the e-part,
    with entries linear in the coordinates (y_1..y_8, x_1..x_4) of t.
    """
    t = to_vec(t)
    if len(t) != 12:
        raise CatalogError("tangent vector must have length 12")
    y = (Fraction(0),) + t[:8]  # y[1]..y[8]
    x = (Fraction(0),) + t[8:]  # x[1]..x[4]
    fv = [[Fraction(0)] * 8 for _ in range(8)]
    fv[2][0] = x[2] + y[4]
    fv[2][1] = x[3] + y[5]
    fv[2][3] = -y[1]
    fv[2][4] = -y[2]
    fv[3][0] = x[1] - y[6]
    fv[3][5] = y[1]
    fv[4][1] = x[1] - y[6]
    fv[4][5] = y[2]
    fv[5][0] = y[2]
    fv[5][1] = -y[1]
    fv[6][1] = y[3] - x[4]
    fv[6][2] = -y[2]
    fv[6][3] = y[6] - x[1]
    fv[6][5] = -x[2] - y[4]
    fv[7][0] = x[4] - y[3]
    fv[7][2] = y[1]
    fv[7][4] = y[6] - x[1]
    fv[7][5] = -x[3] - y[5]
    ev = [[Fraction(0)] * 4 for _ in range(4)]
    ev[1][0] = -y[1]
    ev[2][0] = -y[2]
    ev[3][1] = y[1]
    ev[3][2] = y[2]
    full = [[Fraction(0)] * 12 for _ in range(12)]
    for i in range(8):
        for j in range(8):
            full[i][j] = fv[i][j]
    for i in range(4):
        for j in range(4):
            full[8 + i][8 + j] = ev[i][j]
    return Matrix(full)


def _basis_vec(n: int, i: int) -> Vec:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def euclidean_abelian(n: int) -> MetricLieAlgebra:
    return MetricLieAlgebra.checked(abelian(n), SymForm(Matrix.identity(n)))


def de5_data() -> tuple[MetricLieAlgebra, ExtensionData]:
    """Euclidean R^3 base with D(e1) = e2 and omega(e1, e2) = 1."""
    base = euclidean_abelian(3)
    d = Matrix([[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    omega = Matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    return base, ExtensionData(d, to_vec([0, 0, 0]), omega)


def de7_lorentz_data() -> tuple[MetricLieAlgebra, ExtensionData]:
    """Lorentz R^5 base (form diag(1,1,1,1,-1)) with the same coupling."""
    gram = Matrix([[1 if i == j else 0 for j in range(5)] for i in range(5)])
    rows = [list(r) for r in gram.rows]
    rows[4][4] = Fraction(-1)
    base = MetricLieAlgebra.checked(abelian(5), SymForm(Matrix(rows)))
    d = Matrix.zeros(5, 5)
    drows = [list(r) for r in d.rows]
    drows[1][0] = Fraction(1)
    omega = [[Fraction(0)] * 5 for _ in range(5)]
    omega[0][1], omega[1][0] = Fraction(1), Fraction(-1)
    return base, ExtensionData(Matrix(drows), to_vec([0] * 5), Matrix(omega))


def _sig(p, q, r):
    return (p, q, r)


_BUILDERS: dict[str, Callable[[], tuple[MetricLieAlgebra, dict[str, Expected], tuple[Matrix, ...] | None]]] = {}


def _register(name):
    def wrap(fn):
        _BUILDERS[name] = fn
        return fn

    return wrap


@_register("paper_2_3")
def _build_paper():
    m = _paper_algebra()
    expected = {
        "dim": Expected(12, "stated"),
        "nprime_dim": Expected(4, "stated"),
        "signature": Expected(_sig(8, 4, 0), "stated"),
        "nprime_signature": Expected(_sig(3, 1, 0), "stated"),
        "v_signature": Expected(_sig(5, 3, 0), "stated"),
        "step": Expected(4, "stated"),
        "lcs_dims": Expected((12, 4, 3, 1, 0), "derived"),
        "center_dim": Expected(7, "derived"),
        "degeneracy": Expected(DegeneracyTag.NONDEGENERATE.value, "stated"),
    }
    witnesses = tuple(paper_isotropy_operator(_basis_vec(12, b)) for b in range(12))
    return m, expected, witnesses


@_register("abelian_n")
def _build_abelian():
    m = euclidean_abelian(4)
    expected = {
        "dim": Expected(4, "stated"),
        "step": Expected(1, "stated"),
        "lcs_dims": Expected((4, 0), "stated"),
        "signature": Expected(_sig(4, 0, 0), "stated"),
        "center_dim": Expected(4, "stated"),
        "degeneracy": Expected(DegeneracyTag.NONDEGENERATE.value, "stated"),
    }
    return m, expected, None


@_register("heis3")
def _build_heis3():
    alg = LieAlgebra(3, {(0, 1): {2: 1}})
    m = MetricLieAlgebra.checked(alg, SymForm(Matrix.identity(3)))
    expected = {
        "dim": Expected(3, "stated"),
        "step": Expected(2, "stated"),
        "lcs_dims": Expected((3, 1, 0), "stated"),
        "signature": Expected(_sig(3, 0, 0), "stated"),
        "center_dim": Expected(1, "derived"),
        "degeneracy": Expected(DegeneracyTag.NONDEGENERATE.value, "stated"),
    }
    return m, expected, None


@_register("filiform4")
def _build_filiform4():
    alg = LieAlgebra(4, {(0, 1): {2: 1}, (0, 2): {3: 1}})
    m = MetricLieAlgebra.checked(alg, SymForm(Matrix.identity(4)))
    expected = {
        "dim": Expected(4, "stated"),
        "step": Expected(3, "derived"),
        "lcs_dims": Expected((4, 2, 1, 0), "derived"),
        "signature": Expected(_sig(4, 0, 0), "stated"),
        "center_dim": Expected(1, "derived"),
        "degeneracy": Expected(DegeneracyTag.NONDEGENERATE.value, "stated"),
    }
    return m, expected, None


@_register("de5")
def _build_de5():
    base, data = de5_data()
    m = extend2(base, data)
    expected = {
        "dim": Expected(5, "stated"),
        "step": Expected(3, "derived"),
        "lcs_dims": Expected((5, 2, 1, 0), "derived"),
        "signature": Expected(_sig(4, 1, 0), "derived"),
        "nprime_signature": Expected(_sig(1, 0, 1), "derived"),
        "center_dim": Expected(2, "derived"),
        "degeneracy": Expected(DegeneracyTag.DEG1_SEMIDEFINITE.value, "derived"),
    }
    return m, expected, None


@_register("de7_lorentz")
def _build_de7():
    base, data = de7_lorentz_data()
    m = extend2(base, data)
    expected = {
        "dim": Expected(7, "stated"),
        "step": Expected(3, "derived"),
        "lcs_dims": Expected((7, 2, 1, 0), "derived"),
        "signature": Expected(_sig(5, 2, 0), "derived"),
        "nprime_signature": Expected(_sig(1, 0, 1), "derived"),
        "center_dim": Expected(4, "derived"),
        "degeneracy": Expected(DegeneracyTag.DEG1_SEMIDEFINITE.value, "derived"),
    }
    return m, expected, None


def build_example(name: str) -> NamedExample:
    """Construct a named example and re-verify every pinned invariant."""
    if name not in _BUILDERS:
        raise CatalogError(f"unknown example {name!r}; known: {', '.join(EXAMPLE_NAMES)}")
    m, expected, witnesses = _BUILDERS[name]()
    example = NamedExample(name, m, expected, witnesses)
    for key, exp in expected.items():
        actual = _compute_invariant(example, key)
        if actual != exp.value:
            raise CatalogError(
                f"example {name}: pinned {key}={exp.value!r} but computed {actual!r}"
            )
    return example


def _compute_invariant(example: NamedExample, key: str):
    m = example.algebra
    if key == "dim":
        return m.dim
    if key == "step":
        return nilpotency_step(m.algebra)
    if key == "lcs_dims":
        return tuple(s.dim for s in lower_central_series(m.algebra))
    if key == "signature":
        return tuple(m.form.signature())
    if key == "nprime_dim":
        return m.nprime().dim
    if key == "nprime_signature":
        return tuple(restrict_form(m, m.nprime()).signature())
    if key == "v_signature":
        return tuple(restrict_form(m, m.v_complement()).signature())
    if key == "center_dim":
        return center(m.algebra).dim
    if key == "degeneracy":
        return classify_degeneracy(m).tag.value
    raise CatalogError(f"unknown invariant {key!r}")


@dataclass(frozen=True)
class CheckRecord:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    records: tuple[CheckRecord, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def lines(self) -> list[str]:
        out = []
        for r in self.records:
            status = "PASS" if r.passed else "FAIL"
            suffix = f" ({r.detail})" if r.detail and not r.passed else ""
            out.append(f"CHECK[{r.name}]: {status}{suffix}")
        done = sum(1 for r in self.records if r.passed)
        out.append(f"SUMMARY: {'PASS' if self.passed else 'FAIL'} ({done}/{len(self.records)})")
        return out


def verify_paper_example(example: NamedExample | None = None) -> VerificationReport:
    """Run the whole pipeline over the 12-dimensional example.

    Checks, in order: the Jacobi identity; the dimensions of the algebra and
    its derived algebra; the three signatures; the nilpotency step; that the
    derived algebra is abelian; that each per-basis witness operator is skew,
    a derivation, and inside the computed isotropy algebra; the polarized
    orbit identity on all symmetric basis pairs against every basis
    direction; the two printed ideals (ideal, trivially intersecting,
    commuting, the second abelian); and feasibility of the linear
    certificate.
    """
    if example is None:
        example = build_example("paper_2_3")
    m = example.algebra
    alg = m.algebra
    n = m.dim
    records: list[CheckRecord] = []

    def record(name, passed, detail=""):
        records.append(CheckRecord(name, bool(passed), detail))

    defects = jacobi_defect(alg)
    record("jacobi", not defects, f"{len(defects)} violating triples")
    record("dim", n == 12, f"dim={n}")
    nprime = m.nprime()
    record("nprime_dim", nprime.dim == 4, f"dim n'={nprime.dim}")
    sig = tuple(m.form.signature())
    record("signature_ambient", sig == (8, 4, 0), f"signature={sig}")
    sig_np = tuple(restrict_form(m, nprime).signature())
    record("signature_nprime", sig_np == (3, 1, 0), f"signature={sig_np}")
    sig_v = tuple(restrict_form(m, m.v_complement()).signature())
    record("signature_v", sig_v == (5, 3, 0), f"signature={sig_v}")
    try:
        step = nilpotency_step(alg)
    except ValueError:
        step = None
    record("step", step == 4, f"step={step}")
    record(
        "nprime_abelian",
        bracket_subspaces(alg, nprime, nprime).dim == 0,
        "derived algebra bracket is nonzero",
    )

    witnesses = example.witness_operators or ()
    record("witness_count", len(witnesses) == n, f"{len(witnesses)} stored operators")
    bad_skew = [b for b, op in enumerate(witnesses) if not is_skew(m.form, op)]
    record("witness_skew", not bad_skew, f"skewness fails at basis {bad_skew}")
    bad_der = [b for b, op in enumerate(witnesses) if not is_derivation(alg, op)]
    record("witness_derivation", not bad_der, f"derivation fails at basis {bad_der}")
    iso = isotropy_algebra(m)
    bad_member = [b for b, op in enumerate(witnesses) if not iso.contains(op)]
    record("witness_in_isotropy", not bad_member, f"membership fails at basis {bad_member}")

    bad_polar = _polarized_orbit_defects(m, witnesses)
    record(
        "go_polarized",
        not bad_polar,
        f"{len(bad_polar)} nonzero polarized values, first at {bad_polar[:1]}",
    )

    ideal_1 = Subspace.span(n, [_basis_vec(n, i) for i in (_F1, _F2, _E1, _E2, _E3, _E4)])
    abelian_rows = [
        _basis_vec(n, _F3),
        tuple(a + b for a, b in zip(_basis_vec(n, _F4), _basis_vec(n, _E2))),
        tuple(a + b for a, b in zip(_basis_vec(n, _F5), _basis_vec(n, _E3))),
        tuple(a - b for a, b in zip(_basis_vec(n, _F6), _basis_vec(n, _E1))),
        _basis_vec(n, _F7),
        _basis_vec(n, _F8),
    ]
    ideal_2 = Subspace.span(n, abelian_rows)
    record("ideal_1", is_ideal(alg, ideal_1), "span(f1,f2,e1..e4) is not an ideal")
    record("ideal_2", is_ideal(alg, ideal_2), "the 6-dim abelian span is not an ideal")
    record("ideals_intersect_trivially", ideal_1.intersect(ideal_2).dim == 0)
    record("ideals_commute", bracket_subspaces(alg, ideal_1, ideal_2).dim == 0)
    record("ideal_2_abelian", bracket_subspaces(alg, ideal_2, ideal_2).dim == 0)

    linear = linear_go_certificate(m, iso)
    record("linear_go_feasible", linear is not None)
    return VerificationReport(tuple(records))


def _polarized_orbit_defects(m: MetricLieAlgebra, witnesses: Sequence[Matrix]):
    """Nonzero values of the polarized orbit identity over basis pairs.

    The identity is quadratic in the tangent vector and linear in the probe,
    so vanishing on all symmetric basis pairs (a <= b) against all probes c
    is equivalent to the full statement for the linear witness family.
    """
    n = m.dim
    bad = []
    if len(witnesses) != n:
        return [("missing witnesses",)]
    for a in range(n):
        ea = _basis_vec(n, a)
        for b in range(a, n):
            eb = _basis_vec(n, b)
            for c in range(n):
                ec = _basis_vec(n, c)
                val = m.pair(
                    tuple(
                        x + y
                        for x, y in zip(m.algebra.bracket_basis(a, c), witnesses[a] @ ec)
                    ),
                    eb,
                ) + m.pair(
                    tuple(
                        x + y
                        for x, y in zip(m.algebra.bracket_basis(b, c), witnesses[b] @ ec)
                    ),
                    ea,
                )
                if val != 0:
                    bad.append((a, b, c, val))
    return bad
