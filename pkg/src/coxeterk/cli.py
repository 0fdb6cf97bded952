"""Command-line interface: ``coxeterk {validate,compute,gen,oracle}``."""

from __future__ import annotations

import argparse
import sys

from coxeterk.groups import A5xC2, D, DxC2, carter_rank
from coxeterk.ktables import k_minus1_rank
from coxeterk.polyhedron import (
    FAMILIES,
    ParseError,
    PolyhedronError,
    check_realizability,
    coxeter_matrix_of,
    dumps,
    generate,
    parse_input,
)
from coxeterk.report import build_report

EXIT_OK, EXIT_PARSE, EXIT_FAIL = 0, 1, 2
ORACLE_MAX_N = 60


def _load(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_input(text)


def cmd_validate(args) -> int:
    try:
        obj = _load(args.path)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PolyhedronError as exc:
        print(f"Fail: {exc}")
        return EXIT_FAIL
    verdict = check_realizability(obj)
    print(verdict.text())
    return EXIT_OK if verdict.passed else EXIT_FAIL


def cmd_compute(args) -> int:
    try:
        obj = _load(args.path)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PolyhedronError as exc:
        print(f"Fail: {exc}")
        return EXIT_FAIL
    report = build_report(obj)
    if args.json:
        sys.stdout.write(report.to_json())
    elif not report.verdict.passed:
        print(report.verdict.text())
    elif args.degree == "all":
        if args.quiet:
            print("\n".join(report.k_lines()))
        else:
            sys.stdout.write(report.render_text())
    else:
        print("\n".join(report.k_lines((int(args.degree),))))
        if not args.quiet:
            for w in report.warnings:
                print(f"warning: {w.render()}", file=sys.stderr)
    return EXIT_OK if report.verdict.passed else EXIT_FAIL


def cmd_gen(args) -> int:
    try:
        P = generate(args.family, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    doc = coxeter_matrix_of(P).to_document() if args.matrix else P.to_document()
    sys.stdout.write(dumps(doc))
    return EXIT_OK


def oracle_rows(max_n: int) -> list[tuple[str, int, int]]:
    rows = []
    for n in range(3, max_n + 1):
        for g in (D(n), DxC2(n)):
            rows.append((str(g), k_minus1_rank(g), carter_rank(g)))
    rows.append((str(A5xC2), k_minus1_rank(A5xC2), carter_rank(A5xC2)))
    return rows


def cmd_oracle(args) -> int:
    if not 3 <= args.max_n <= ORACLE_MAX_N:
        print(f"error: --max-n must lie in 3..{ORACLE_MAX_N}", file=sys.stderr)
        return EXIT_FAIL
    rows = oracle_rows(args.max_n)
    bad = 0
    if not args.quiet:
        print(f"{'group':<14}{'closed':>8}{'carter':>8}")
    for name, closed, carter in rows:
        ok = closed == carter
        bad += not ok
        if not args.quiet or not ok:
            print(f"{name:<14}{closed:>8}{carter:>8}  {'ok' if ok else 'MISMATCH'}")
    print(f"{len(rows) - bad}/{len(rows)} rows agree")
    return EXIT_OK if bad == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxeterk",
        description="Lower algebraic K-theory of 3-dimensional hyperbolic reflection groups.",
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="print only results")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the necessary realizability conditions")
    p.add_argument("path", help="input document, or - for standard input")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("compute", help="compute Wh, K~_0, K_-1 and the lower K-groups")
    p.add_argument("path", help="input document, or - for standard input")
    p.add_argument("--degree", choices=["1", "0", "-1", "all"], default="all")
    p.add_argument("--json", action="store_true", help="emit the full report as JSON")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("gen", help="print a document for a built-in family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("n", type=int)
    p.add_argument("--matrix", action="store_true", help="emit the Coxeter-matrix form")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="compare closed-form K_-1 ranks with Carter's formula")
    p.add_argument("--max-n", type=int, default=ORACLE_MAX_N)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    # accept --quiet after the subcommand as well
    raw = list(sys.argv[1:] if argv is None else argv)
    quiet = any(a in ("-q", "--quiet") for a in raw)
    raw = [a for a in raw if a not in ("-q", "--quiet")]
    args = parser.parse_args(raw)
    args.quiet = quiet
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
