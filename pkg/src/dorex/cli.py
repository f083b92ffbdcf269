"""Command-line driver.

Subcommands:

    check FILE                      consistency triple; exit 1 on failure
    classify FILE [--json]          full classification report
    mul FILE EXPR                   normal form of an element expression
    hilbert FILE --max-deg N [--oracle] [--cap C]
                                    closed-form dimensions, optional
                                    brute-force comparison; exit 1 on mismatch
    catalog list | show NAME [--param k=v ...]
    detsigma FILE                   det sigma images + multiplicativity

Exit codes: 0 pass, 1 mathematical failure, 2 usage or parse error,
3 resource-cap refusal.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from . import catalogue, dsl, oracle, report
from .classify import classify
from .errors import (ConstraintError, DorexError, InconsistentMapsError,
                     InconsistentPresentationError, ParseError, RefusalError,
                     ResourceCapError)
from .extension import DOEPresentation
from .report import ReportDocument, canonical_json, two_column

EXIT_PASS = 0
EXIT_MATH_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dorex",
        description="Exact normal forms, consistency checks and classification "
                    "for two-variable extension presentations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the consistency triple on a file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="classify a presentation")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("mul", help="normal form of an element expression")
    p.add_argument("file")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("hilbert", help="graded dimensions, optionally certified")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="compare against brute-force row reduction")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_WORD_CAP,
                   help="word-count cap per degree")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("catalog", help="built-in presentations")
    csub = p.add_subparsers(dest="subcommand", required=True)
    csub.add_parser("list", help="list entry names").add_argument(
        "--json", action="store_true")
    show = csub.add_parser("show", help="emit an entry as a presentation file")
    show.add_argument("name")
    show.add_argument("--param", action="append", default=[],
                      metavar="NAME=VALUE")
    show.add_argument("--json", action="store_true")

    p = sub.add_parser("detsigma", help="determinant of sigma on the generators")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    return parser


def _load(path: str) -> dsl.PresentationSource:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return dsl.parse_presentation(text)


def _cmd_check(args) -> Tuple[int, ReportDocument]:
    source = _load(args.file)
    pres = source.presentation
    machine = report.consistency_json(pres)
    rows = []
    for label, key in (("sigma homomorphism", "sigma_hom"),
                       ("delta derivation", "delta_derivation"),
                       ("overlap", "overlap")):
        entry = machine[key]
        rows.append((label, entry["status"]))
    rows.append(("consistent", "yes" if machine["consistent"] else "no"))
    lines = [two_column(rows)]
    for key in ("sigma_hom", "delta_derivation", "overlap"):
        for failure in machine[key]["failures"]:
            if isinstance(failure, dict):
                lines.append(f"  {key}: generator {failure['generator']}: "
                             f"residual {failure['residual']}")
            else:
                lines.append(f"  {key}: {failure}")
    code = EXIT_PASS if machine["consistent"] else EXIT_MATH_FAIL
    return code, ReportDocument(machine, "\n".join(lines), args.json)


def _cmd_classify(args) -> Tuple[int, ReportDocument]:
    source = _load(args.file)
    pres = source.presentation
    rep = classify(pres)
    machine = report.classification_json(rep)
    machine["checks"] = report.consistency_json(pres)
    rows = []
    for key in ("is_right_doe", "is_spbw", "is_bijective", "is_double_via_det"):
        entry = machine[key]
        value = entry["status"]
        if entry["reason"]:
            value += f" ({entry['reason']})"
        rows.append((key, value))
    for key in ("is_graded", "is_connected", "is_trimmed",
                "is_quasi_commutative", "is_derivation_type",
                "is_endomorphism_type", "is_constant"):
        rows.append((key, "yes" if machine[key] else "no"))
    lines = [two_column(rows)]
    if machine["theorem_citations"]:
        lines.append("justifications:")
        lines.extend(f"  - {c}" for c in machine["theorem_citations"])
    return EXIT_PASS, ReportDocument(machine, "\n".join(lines), args.json)


def _cmd_mul(args) -> Tuple[int, ReportDocument]:
    source = _load(args.file)
    element = dsl.parse_element(source, args.expr)
    text = dsl.format_element(element)
    machine = {"input": args.expr, "normal_form": text}
    return EXIT_PASS, ReportDocument(machine, text, args.json)


def _cmd_hilbert(args) -> Tuple[int, ReportDocument]:
    source = _load(args.file)
    pres = source.presentation
    if args.max_deg < 0:
        raise ParseError("--max-deg must be nonnegative")
    graded = pres.grading().graded
    if graded:
        dims = oracle.hilbert_closed_form(pres, args.max_deg)
    elif args.oracle:
        dims = None  # filtered mode reports brute-force dims below
    else:
        raise ParseError("ungraded presentation: closed form undefined; "
                         "rerun with --oracle for filtered brute-force dimensions")

    machine = {"mode": "graded" if graded else "filtered"}
    code = EXIT_PASS
    if args.oracle:
        cert = oracle.pbw_freeness_check(pres, args.max_deg, cap=args.cap)
        brute = list(cert.dims)
        if graded:
            match = brute == dims and cert.ok
        else:
            dims = brute
            match = cert.ok
        machine["dims"] = dims
        machine["oracle_dims"] = brute
        if match:
            machine["oracle"] = "match"
            suffix = " | oracle: match"
        else:
            code = EXIT_MATH_FAIL
            fail_at = cert.fail_degree
            if fail_at is None:  # closed form vs brute force disagreement
                fail_at = next(n for n, (a, b) in enumerate(zip(dims, brute))
                               if a != b)
                deficit = dims[fail_at] - brute[fail_at]
            else:
                deficit = cert.deficit
            machine["oracle"] = "mismatch"
            machine["fail_degree"] = fail_at
            machine["deficit"] = deficit
            suffix = f" | oracle: MISMATCH at degree {fail_at} (deficit {deficit})"
        human = " ".join(str(d) for d in dims) + suffix
    else:
        machine["dims"] = dims
        human = " ".join(str(d) for d in dims)
    return code, ReportDocument(machine, human, args.json)


def _parse_param_bindings(pairs: List[str]) -> dict:
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise ParseError(f"--param expects NAME=VALUE, got {pair!r}")
        name, _, value = pair.partition("=")
        try:
            out[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"--param {name}: {value!r} is not a rational") from None
    return out


def _cmd_catalog(args) -> Tuple[int, ReportDocument]:
    if args.subcommand == "list":
        names = catalogue.names()
        machine = {"entries": names}
        return EXIT_PASS, ReportDocument(machine, "\n".join(names), args.json)
    bindings = _parse_param_bindings(args.param)
    try:
        pres, _expected = catalogue.get_example(args.name, **bindings)
    except KeyError as exc:
        raise ParseError(str(exc.args[0])) from None
    text = dsl.format_presentation(pres)
    machine = {"name": args.name, "file": text}
    return EXIT_PASS, ReportDocument(machine, text.rstrip("\n"), args.json)


def _cmd_detsigma(args) -> Tuple[int, ReportDocument]:
    source = _load(args.file)
    pres = source.presentation
    rep = pres.det_sigma_endo()
    machine = report.det_sigma_json(rep)
    lines = []
    if rep.endo.ring.ngens == 0:
        lines.append("det_sigma: identity on Q")
    for name in rep.endo.ring.names:
        lines.append(f"det_sigma: {name} -> {machine['images'][name]}")
    lines.append(f"multiplicative: {machine['multiplicative']['status']}")
    for failure in machine["multiplicative"]["failures"]:
        lines.append(f"  {failure}")
    inv = machine["invertible"]
    lines.append(f"invertible: {inv['status']}"
                 + (f" ({inv['reason']})" if inv["reason"] else ""))
    code = EXIT_PASS if rep.multiplicative.ok else EXIT_MATH_FAIL
    return code, ReportDocument(machine, "\n".join(lines), args.json)


_HANDLERS = {
    "check": _cmd_check,
    "classify": _cmd_classify,
    "mul": _cmd_mul,
    "hilbert": _cmd_hilbert,
    "catalog": _cmd_catalog,
    "detsigma": _cmd_detsigma,
}


def run_command(argv: List[str]) -> Tuple[int, ReportDocument]:
    """Parse and execute one invocation; never raises on expected errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        if code not in (0, EXIT_USAGE):
            code = EXIT_USAGE
        return code, ReportDocument({}, "", False)
    try:
        return _HANDLERS[args.command](args)
    except ResourceCapError as exc:
        doc = ReportDocument({"error": str(exc), "count": exc.count,
                              "cap": exc.cap},
                             f"resource cap exceeded: {exc}",
                             getattr(args, "json", False))
        return EXIT_RESOURCE, doc
    except ParseError as exc:
        doc = ReportDocument({"error": str(exc)}, f"error: {exc}",
                             getattr(args, "json", False))
        return EXIT_USAGE, doc
    except ConstraintError as exc:
        doc = ReportDocument({"error": str(exc)}, f"error: {exc}",
                             getattr(args, "json", False))
        return EXIT_USAGE, doc
    except (InconsistentPresentationError, InconsistentMapsError,
            RefusalError) as exc:
        doc = ReportDocument({"error": str(exc)}, f"error: {exc}",
                             getattr(args, "json", False))
        return EXIT_MATH_FAIL, doc


def main(argv: Optional[List[str]] = None) -> int:
    code, doc = run_command(sys.argv[1:] if argv is None else argv)
    rendered = doc.rendered()
    if rendered.strip():
        sys.stdout.write(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
