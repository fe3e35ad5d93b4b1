"""Batch command-line front end.

Every command prints greppable ``KEY: value`` lines.  Exit codes: 0 for
success (including a CONSISTENT audit), 1 when a property is refuted or a
verification fails, 2 for malformed input.  Identical command lines with the
same seed produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from gonil.catalog import (
    EXAMPLE_NAMES,
    CatalogError,
    PAPER_BASIS_NAMES,
    build_example,
    verify_paper_example,
)
from gonil.double_ext import ReductionError, classify_degeneracy, extend2, reduce as reduce_algebra
from gonil.go_engine import (
    GOEngineError,
    go_certificate_at,
    go_random_audit,
    linear_go_certificate,
    necessary_condition_check,
)
from gonil.io import (
    FormatError,
    load_algebra,
    load_extension_data,
    save_algebra,
)
from gonil.isotropy import isotropy_algebra
from gonil.lie import NotNilpotentError, center, lower_central_series, nilpotency_step
from gonil.linalg import DimensionMismatch
from gonil.metric import MetricLieAlgebra, PreconditionError, restrict_form

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_MALFORMED = 2


def _resolve_algebra(spec: str) -> MetricLieAlgebra:
    if spec.startswith("catalog:"):
        return build_example(spec[len("catalog:") :]).algebra
    m, _names = load_algebra(spec)
    return m


def _fmt_vec(v) -> str:
    return ",".join(str(x) for x in v)


def _fmt_sig(sig) -> str:
    return f"{sig.p},{sig.q},{sig.r}"


def _parse_vector(text: str):
    try:
        return [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad vector {text!r}: {exc}") from exc


def cmd_check(args) -> int:
    _resolve_algebra(args.algebra)
    print("STATUS: OK")
    return EXIT_OK


def cmd_invariants(args) -> int:
    m = _resolve_algebra(args.algebra)
    chain = lower_central_series(m.algebra)
    print(f"DIM: {m.dim}")
    print(f"LCS_DIMS: {','.join(str(s.dim) for s in chain)}")
    print(f"STEP: {nilpotency_step(m.algebra)}")
    print(f"CENTER_DIM: {center(m.algebra).dim}")
    nprime = m.nprime()
    print(f"NPRIME_DIM: {nprime.dim}")
    print(f"SIGNATURE: {_fmt_sig(m.form.signature())}")
    print(f"SIGNATURE_NPRIME: {_fmt_sig(restrict_form(m, nprime).signature())}")
    print(f"SIGNATURE_V: {_fmt_sig(restrict_form(m, m.v_complement()).signature())}")
    print(f"DEGENERACY_CASE: {classify_degeneracy(m).tag.value}")
    return EXIT_OK


def cmd_isotropy(args) -> int:
    m = _resolve_algebra(args.algebra)
    iso = isotropy_algebra(m)
    print(f"ISOTROPY_DIM: {iso.dim}")
    for idx, op in enumerate(iso.basis):
        for r, row in enumerate(op.rows):
            print(f"BASIS[{idx}].ROW[{r}]: {_fmt_vec(row)}")
    return EXIT_OK


def cmd_go(args) -> int:
    m = _resolve_algebra(args.algebra)
    iso = isotropy_algebra(m)
    report = go_random_audit(m, iso, args.samples, args.seed, args.bound)
    print(f"ALGEBRA: {args.algebra}")
    print(f"ISOTROPY_DIM: {iso.dim}")
    for line in report.lines():
        print(line)
    return EXIT_OK if report.verdict == "CONSISTENT" else EXIT_REFUTED


def cmd_go_at(args) -> int:
    m = _resolve_algebra(args.algebra)
    iso = isotropy_algebra(m)
    t = _parse_vector(args.vector)
    cert = go_certificate_at(m, iso, t)
    print(f"T: {_fmt_vec(t)}")
    if cert is None:
        print("RESULT: INFEASIBLE")
        return EXIT_REFUTED
    print("RESULT: FEASIBLE")
    print(f"A_COEFFS: {_fmt_vec(cert.A_coeffs)}")
    print(f"K: {cert.k}")
    return EXIT_OK


def cmd_linear_go(args) -> int:
    m = _resolve_algebra(args.algebra)
    iso = isotropy_algebra(m)
    cert = linear_go_certificate(m, iso)
    print(f"ISOTROPY_DIM: {iso.dim}")
    if cert is None:
        print("RESULT: INFEASIBLE")
        print("NOTE: only linear witnesses with k = 0 are ruled out")
        return EXIT_REFUTED
    print("RESULT: FEASIBLE")
    for j, row in enumerate(cert.coeffs.rows):
        print(f"L[{j}]: {_fmt_vec(row)}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    m = _resolve_algebra(args.algebra)
    result = reduce_algebra(m)
    for line in result.witness.lines():
        print(line)
    print(f"QUOTIENT_DIM: {result.m0.dim}")
    print(f"QUOTIENT_SIGNATURE: {_fmt_sig(result.m0.form.signature())}")
    for i, row in enumerate(result.complement_rows.rows):
        print(f"COMPLEMENT[{i}]: {_fmt_vec(row)}")
    if args.output:
        save_algebra(args.output, result.m0)
        print(f"WROTE: {args.output}")
    return EXIT_OK


def cmd_extend(args) -> int:
    m = _resolve_algebra(args.algebra)
    data = load_extension_data(args.data)
    extended = extend2(m, data)
    print(f"EXTENDED_DIM: {extended.dim}")
    print(f"EXTENDED_SIGNATURE: {_fmt_sig(extended.form.signature())}")
    if args.output:
        save_algebra(args.output, extended)
        print(f"WROTE: {args.output}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    example = build_example(args.name)
    out = args.output or f"{args.name}.json"
    names = PAPER_BASIS_NAMES if args.name == "paper_2_3" else None
    save_algebra(out, example.algebra, names)
    print(f"NAME: {example.name}")
    print(f"DIM: {example.algebra.dim}")
    print(f"WROTE: {out}")
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    report = verify_paper_example()
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_REFUTED


def cmd_necessary(args) -> int:
    m = _resolve_algebra(args.algebra)
    report = necessary_condition_check(m)
    for line in report.lines():
        print(line)
    if report.skipped:
        return EXIT_OK
    return EXIT_OK if report.passed else EXIT_REFUTED


def cmd_normal_forms(args) -> int:
    from gonil.normal_forms import iwasawa_nilpotent_basis, maximal_abelian_family

    family = iwasawa_nilpotent_basis(args.q, args.m)
    print(f"SIGNATURE: {family.signature[0]},{family.signature[1]}")
    print(f"AMBIENT: {family.dim_ambient}")
    print(f"FAMILY_DIM: {family.dim}")
    if args.family:
        gens = maximal_abelian_family(args.family, args.m, args.u1, args.v1)
        print(f"ABELIAN_FAMILY: {args.family}")
        print(f"ABELIAN_DIM: {len(gens)}")
        print("ABELIAN_VERIFIED: yes")
        to_print = gens
    else:
        to_print = family.generators
    for idx, gen in enumerate(to_print):
        for r, row in enumerate(gen.rows):
            print(f"GENERATOR[{idx}].ROW[{r}]: {_fmt_vec(row)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gonil",
        description="Exact certification of metric nilpotent Lie algebras: "
        "geodesic-orbit checks and double-extension reduction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        return p

    p = add("check", cmd_check, "validate an algebra file")
    p.add_argument("algebra", help="path to an algebra file or catalog:NAME")

    p = add("invariants", cmd_invariants, "print series dims, step, signatures")
    p.add_argument("algebra")

    p = add("isotropy", cmd_isotropy, "print the isotropy algebra basis")
    p.add_argument("algebra")

    p = add("go", cmd_go, "randomized geodesic-orbit audit")
    p.add_argument("algebra")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, default=10)

    p = add("go-at", cmd_go_at, "certificate at one tangent vector")
    p.add_argument("algebra")
    p.add_argument("--vector", required=True, help='comma-separated rationals, e.g. "1,0,-2/3"')

    p = add("linear-go", cmd_linear_go, "solve for a linear certificate")
    p.add_argument("algebra")

    p = add("reduce", cmd_reduce, "double-extension quotient of a degenerate algebra")
    p.add_argument("algebra")
    p.add_argument("--output", help="write the quotient algebra file here")

    p = add("extend", cmd_extend, "apply a two-dimensional extension")
    p.add_argument("algebra")
    p.add_argument("--data", required=True, help="extension data JSON file")
    p.add_argument("--output", help="write the extended algebra file here")

    p = add("catalog", cmd_catalog, "write a built-in example to a file")
    p.add_argument("name", choices=EXAMPLE_NAMES)
    p.add_argument("--output")

    add("verify-paper", cmd_verify_paper, "run the full 12-dim example verification")

    p = add("necessary", cmd_necessary, "polarized bracket-orthogonality identities on n'")
    p.add_argument("algebra")

    p = add("normal-forms", cmd_normal_forms, "nilpotent triangular families")
    p.add_argument("--q", type=int, choices=(1, 2), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", type=int, choices=(1, 2, 3))
    p.add_argument("--u1", type=Fraction)
    p.add_argument("--v1", type=Fraction)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FormatError, CatalogError, DimensionMismatch, GOEngineError, FileNotFoundError) as exc:
        # bad files, bad names, bad vectors/parameters: malformed input
        print(f"ERROR: {exc}")
        return EXIT_MALFORMED
    except (ReductionError, PreconditionError, NotNilpotentError) as exc:
        # well-formed input failing a property or an operation's hypothesis
        print(f"ERROR: {exc}")
        return EXIT_REFUTED
    except ValueError as exc:
        print(f"ERROR: {exc}")
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
