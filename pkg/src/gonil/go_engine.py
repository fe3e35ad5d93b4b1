"""Geodesic-orbit certification by exact linear feasibility.

For a fixed tangent vector T the defining equation is linear in the unknown
pair (A, k), with A ranging over a given space of skew derivations: one exact
solve per vector, no optimization loop.  Because the ambient algebra splits
as (skew derivations) + (the nilpotent algebra itself) with the algebra an
ideal, no projection is needed in the bracket term.

A randomized audit refutes the property exactly when it finds one infeasible
integer vector; an all-feasible run is evidence only, never proof, since the
property quantifies over a continuum.  Audit verdicts are REFUTED or
CONSISTENT, never "proven".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from gonil.isotropy import OperatorSpace, is_derivation, is_skew
from gonil.linalg import (
    Matrix,
    Vec,
    congruence_diagonalize,
    is_zero_vec,
    rational_sqrt,
    solve_linear,
    to_vec,
    vec_add,
    vec_scale,
)
from gonil.metric import MetricLieAlgebra, restrict_form


class GOEngineError(ValueError):
    """Invalid input to a certification routine."""


@dataclass(frozen=True)
class GOCertificate:
    """Exact witness (A, k) for one tangent vector T.

    Satisfies <[T + A, e_b], T> = k <T, e_b> for every basis vector e_b, with
    A given by its coefficients in the operator-space basis.  k vanishes
    whenever T is non-null (substitute T' = T to see it is forced).
    """

    T: Vec
    A_coeffs: Vec
    k: Fraction


@dataclass(frozen=True)
class LinearGOCertificate:
    """A linear map T -> A(T) certifying the property with k identically 0.

    coeffs has one row per operator-space basis element; column a holds the
    coefficients of A(e_a).  Existence is sufficient for the geodesic-orbit
    property but not necessary: pointwise certificates may depend nonlinearly
    on T and may need k != 0 on null vectors.
    """

    coeffs: Matrix


@dataclass(frozen=True)
class AuditPoint:
    index: int
    T: Vec
    certificate: GOCertificate | None

    @property
    def feasible(self) -> bool:
        return self.certificate is not None


@dataclass(frozen=True)
class GOAuditReport:
    samples: int
    seed: int
    bound: int
    points: tuple[AuditPoint, ...]
    null_point: AuditPoint | None

    @property
    def failures(self) -> tuple[Vec, ...]:
        out = [p.T for p in self.points if not p.feasible]
        if self.null_point is not None and not self.null_point.feasible:
            out.append(self.null_point.T)
        return tuple(out)

    @property
    def verdict(self) -> str:
        return "REFUTED" if self.failures else "CONSISTENT"

    def lines(self) -> list[str]:
        out = [
            f"SAMPLES: {self.samples}",
            f"SEED: {self.seed}",
            f"BOUND: {self.bound}",
            f"VERDICT: {self.verdict}",
            f"FAILURES: {len(self.failures)}",
        ]
        all_points = list(self.points)
        if self.null_point is not None:
            out.append(f"NULL_SAMPLE: {_fmt_vec(self.null_point.T)}")
            all_points.append(self.null_point)
        else:
            out.append("NULL_SAMPLE: none")
        fail_idx = 0
        for p in all_points:
            label = "null" if p.index < 0 else str(p.index)
            if p.feasible:
                cert = p.certificate
                out.append(f"CERT[{label}].T: {_fmt_vec(p.T)}")
                out.append(f"CERT[{label}].A: {_fmt_vec(cert.A_coeffs)}")
                out.append(f"CERT[{label}].K: {cert.k}")
            else:
                out.append(f"FAILURE[{fail_idx}].T: {_fmt_vec(p.T)}")
                fail_idx += 1
        return out


def _fmt_vec(v) -> str:
    return ",".join(str(x) for x in v)


def check_subisotropy(m: MetricLieAlgebra, h: OperatorSpace) -> None:
    """Verify every basis operator of h is a skew derivation of m."""
    if h.ambient_dim != m.dim:
        raise GOEngineError("operator space dimension differs from the algebra")
    for op in h.basis:
        if not is_skew(m.form, op):
            raise GOEngineError("operator space is not inside the isotropy algebra (skewness fails)")
        if not is_derivation(m.algebra, op):
            raise GOEngineError("operator space is not inside the isotropy algebra (derivation fails)")


def go_certificate_at(
    m: MetricLieAlgebra, h: OperatorSpace, t, *, _checked: bool = False
) -> GOCertificate | None:
    """Solve the per-vector certificate system; None means infeasible at T.

    The system, one equation per basis vector e_b with unknowns the h-basis
    coefficients of A and the scalar k:

        sum_j c_j <D_j e_b, T>  -  k <T, e_b>  =  -<[T, e_b], T>
    """
    t = to_vec(t)
    if len(t) != m.dim:
        raise GOEngineError("tangent vector has wrong length")
    if is_zero_vec(t):
        raise GOEngineError("tangent vector must be nonzero")
    if not _checked:
        check_subisotropy(m, h)
    gt = m.form.gram @ t
    cols = [op.transpose() @ gt for op in h.basis]
    cols.append(tuple(-x for x in gt))
    ad_t = m.algebra.ad(t)
    rhs = tuple(-x for x in (ad_t.transpose() @ gt))
    system = Matrix(zip(*cols), ncols=len(cols))
    sol = solve_linear(system, rhs)
    if sol is None:
        return None
    coeffs, k = sol.particular[:-1], sol.particular[-1]
    cert = GOCertificate(t, coeffs, k)
    _verify_certificate(m, h, cert)
    return cert


def _verify_certificate(m: MetricLieAlgebra, h: OperatorSpace, cert: GOCertificate) -> None:
    a = h.combine(cert.A_coeffs)
    t = cert.T
    for b in range(m.dim):
        eb = [Fraction(0)] * m.dim
        eb[b] = Fraction(1)
        lhs = m.pair(vec_add(m.algebra.bracket(t, eb), a @ eb), t)
        if lhs != cert.k * m.pair(t, eb):
            raise AssertionError("internal: certificate fails its defining identity")
    if m.pair(t, t) != 0 and cert.k != 0:
        raise AssertionError("internal: k must vanish on non-null vectors")


def first_null_vector(m: MetricLieAlgebra) -> Vec | None:
    """A deterministic rational null vector, if the diagonalizer exposes one.

    Scans the congruence-diagonal values for the first opposite-sign pair
    whose ratio is a perfect rational square.
    """
    basis, diag = congruence_diagonalize(m.form.gram)
    n = len(diag)
    for i in range(n):
        for j in range(i + 1, n):
            if diag[i] * diag[j] < 0:
                s = rational_sqrt(-diag[i] / diag[j])
                if s is not None:
                    return vec_add(basis.row(i), vec_scale(s, basis.row(j)))
    return None


def go_random_audit(
    m: MetricLieAlgebra,
    h: OperatorSpace,
    samples: int,
    seed: int,
    bound: int = 10,
) -> GOAuditReport:
    """Per-vector feasibility on seeded integer samples plus one null vector.

    Any exact infeasibility refutes the geodesic-orbit property for this
    operator space; an all-feasible report is CONSISTENT, nothing stronger.
    Entries are drawn uniformly from [-bound, bound]; zero vectors are
    redrawn.  The extra null sample (when the form exposes one rationally)
    covers the k != 0 regime.
    """
    if samples < 1:
        raise GOEngineError("need at least one sample")
    if bound < 1:
        raise GOEngineError("bound must be positive")
    check_subisotropy(m, h)
    rng = random.Random(seed)
    points = []
    for idx in range(samples):
        while True:
            t = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(m.dim))
            if not is_zero_vec(t):
                break
        points.append(AuditPoint(idx, t, go_certificate_at(m, h, t, _checked=True)))
    null_point = None
    nv = first_null_vector(m)
    if nv is not None and not is_zero_vec(nv):
        null_point = AuditPoint(-1, nv, go_certificate_at(m, h, nv, _checked=True))
    return GOAuditReport(samples, seed, bound, tuple(points), null_point)


def linear_go_certificate(m: MetricLieAlgebra, h: OperatorSpace) -> LinearGOCertificate | None:
    """Solve for a linear map T -> A(T) with k identically zero.

    Polarizing the quadratic-in-T identity gives, for basis indices a <= b
    and every c:

        <[e_a + A(e_a), e_c], e_b> + <[e_b + A(e_b), e_c], e_a> = 0,

    a single linear system in the dim(h) * n coefficients of the map.
    Feasibility is sufficient for the geodesic-orbit property; infeasibility
    only rules out linear witnesses with k = 0.
    """
    check_subisotropy(m, h)
    n = m.dim
    nh = h.dim
    gram = m.form.gram
    paired = [gram @ op for op in h.basis]  # paired[j][b][c] = <D_j e_c, e_b>
    bracket_pair = [
        [gram @ m.algebra.bracket_basis(a, c) for c in range(n)] for a in range(n)
    ]  # bracket_pair[a][c][b] = <[e_a, e_c], e_b>
    rows = []
    rhs = []
    zero = Fraction(0)
    for a in range(n):
        for b in range(a, n):
            for c in range(n):
                row = [zero] * (nh * n)
                for j in range(nh):
                    pj = paired[j]
                    if pj[b, c]:
                        row[j * n + a] += pj[b, c]
                    if pj[a, c]:
                        row[j * n + b] += pj[a, c]
                val = -bracket_pair[a][c][b] - bracket_pair[b][c][a]
                if any(row) or val:
                    rows.append(row)
                    rhs.append(val)
    if not rows:
        return LinearGOCertificate(Matrix.zeros(nh, n))
    sol = solve_linear(Matrix(rows, ncols=nh * n), rhs)
    if sol is None:
        return None
    coeffs = Matrix(
        [sol.particular[j * n : (j + 1) * n] for j in range(nh)], ncols=n
    )
    cert = LinearGOCertificate(coeffs)
    _verify_linear_certificate(m, h, cert)
    return cert


def linear_witness_at(h: OperatorSpace, cert: LinearGOCertificate, t) -> Matrix:
    """Assemble A(T) from a linear certificate."""
    t = to_vec(t)
    coeffs = cert.coeffs @ t
    return h.combine(coeffs)


def _verify_linear_certificate(m: MetricLieAlgebra, h: OperatorSpace, cert: LinearGOCertificate) -> None:
    n = m.dim
    ops = [linear_witness_at(h, cert, _basis(n, a)) for a in range(n)]
    for a in range(n):
        for b in range(a, n):
            for c in range(n):
                ec = _basis(n, c)
                val = m.pair(
                    vec_add(m.algebra.bracket_basis(a, c), ops[a] @ ec), _basis(n, b)
                ) + m.pair(vec_add(m.algebra.bracket_basis(b, c), ops[b] @ ec), _basis(n, a))
                if val != 0:
                    raise AssertionError("internal: linear certificate fails polarized identity")


@dataclass(frozen=True)
class NecessaryConditionReport:
    """Outcome of the polarized bracket-orthogonality identities on n'."""

    skipped: bool
    notice: str
    nprime_basis: Matrix
    violations: tuple[tuple[int, int, int, Fraction], ...]

    @property
    def passed(self) -> bool:
        return not self.skipped and not self.violations

    def lines(self) -> list[str]:
        if self.skipped:
            return [f"NECESSARY_CONDITIONS: SKIPPED ({self.notice})"]
        out = [f"NECESSARY_CONDITIONS: {'PASS' if self.passed else 'FAIL'}"]
        for a, i, j, defect in self.violations:
            out.append(f"VIOLATION: ambient={a} nprime_i={i} nprime_j={j} defect={defect}")
        return out


def necessary_condition_check(m: MetricLieAlgebra) -> NecessaryConditionReport:
    """Check <[e_a, x], y> + <[e_a, y], x> = 0 for all x, y in a basis of n'.

    These identities follow from the geodesic-orbit property when the form
    restricted to n' is nondegenerate; on a degenerate restriction the check
    does not apply and is skipped with a notice.
    """
    nprime = m.nprime()
    restricted = restrict_form(m, nprime)
    if restricted.signature().r != 0:
        return NecessaryConditionReport(
            True, "form restricted to n' is degenerate; identities do not apply",
            nprime.basis, ()
        )
    violations = []
    rows = nprime.basis.rows
    for a in range(m.dim):
        ea = _basis(m.dim, a)
        images = [m.algebra.bracket(ea, x) for x in rows]
        for i in range(len(rows)):
            for j in range(i, len(rows)):
                defect = m.pair(images[i], rows[j]) + m.pair(images[j], rows[i])
                if defect != 0:
                    violations.append((a, i, j, defect))
    return NecessaryConditionReport(False, "", nprime.basis, tuple(violations))


def _basis(n: int, i: int) -> Vec:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)
