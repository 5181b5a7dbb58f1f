"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when a check fails
(the failing law and its witness are printed), 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import sys

from . import axioms, fixtures, triality
from .errors import AlgebraError, ExtractionRefusedError, ParseError
from .formats import emit_cayley, emit_triple, parse_cayley, parse_triple

OK, FAILED, USAGE = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _show(reports) -> bool:
    ok = True
    for rep in reports:
        print(rep)
        ok &= rep.passed
    return ok


def cmd_classify(args) -> int:
    tbl = parse_cayley(_read(args.table))
    ladder = axioms.classify(tbl)
    print(ladder.describe())
    if ladder.stopped_by is not None:
        print(f"stopped by {ladder.stopped_by}")
    if args.require:
        wanted = axioms.Rung[args.require.upper().replace("-", "_")]
        return OK if ladder.rung >= wanted else FAILED
    return OK


def _extract(tbl):
    try:
        return triality.extract_triple(tbl)
    except ExtractionRefusedError as exc:
        print(f"not a Moufang loop: {exc.report}")
        return None


def cmd_extract(args) -> int:
    triple = _extract(parse_cayley(_read(args.table)))
    if triple is None:
        return FAILED
    sys.stdout.write(emit_triple(triple))
    return OK


def cmd_verify(args) -> int:
    triple = parse_triple(_read(args.triple))
    tbl = parse_cayley(_read(args.table))
    report = triality.verify_hypotheses(triple, tbl)
    _show(report.reports())
    print("hypotheses hold" if report.overall else "hypotheses FAIL")
    return OK if report.overall else FAILED


def cmd_reconstruct(args) -> int:
    triple = parse_triple(_read(args.triple))
    try:
        tbl = triality.reconstruct_multiplication(triple)
    except AlgebraError as exc:
        print(f"reconstruction failed: {exc}")
        return FAILED
    sys.stdout.write(emit_cayley(tbl))
    return OK


def cmd_roundtrip(args) -> int:
    tbl = parse_cayley(_read(args.table))
    triple = _extract(tbl)
    if triple is None:
        return FAILED
    rebuilt = triality.reconstruct_multiplication(triple)
    if rebuilt != tbl:
        diff = next((g, h) for g in range(tbl.order) for h in range(tbl.order)
                    if rebuilt[g][h] != tbl[g][h])
        print(f"round-trip FAILED at {diff}: {rebuilt[diff[0]][diff[1]]} != {tbl[diff[0]][diff[1]]}")
        return FAILED
    print("round-trip OK")
    return OK


def cmd_suite(args) -> int:
    triple = parse_triple(_read(args.triple))
    if args.table:
        tbl = parse_cayley(_read(args.table))
    else:
        try:
            tbl = triality.reconstruct_multiplication(triple)
        except AlgebraError as exc:
            print(f"reconstruction failed: {exc}")
            return FAILED
    hyp = triality.verify_hypotheses(triple, tbl)
    if not hyp.overall:
        print(f"hypotheses FAIL: {hyp.first_failure()}")
        return FAILED
    ok = _show(triality.run_proposition_suite(triple, tbl))
    print("all propositions hold" if ok else "some propositions FAIL")
    return OK if ok else FAILED


def cmd_generate(args) -> int:
    kind = args.kind
    params = args.params
    expected = {"cyclic": 1, "s3": 0, "chein-s3": 0, "random": 2}[kind]
    if len(params) != expected:
        raise _Usage(f"generate {kind} takes {expected} integer argument(s)")
    if kind == "cyclic":
        tbl = fixtures.cyclic_group(params[0])
    elif kind == "s3":
        tbl = fixtures.symmetric_group_3()
    elif kind == "chein-s3":
        tbl = fixtures.chein_s3()
    else:
        tbl = fixtures.random_loop(params[0], params[1])
    sys.stdout.write(emit_cayley(tbl))
    return OK


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="moufang", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="place a Cayley table on the groupoid..group ladder")
    p.add_argument("table")
    p.add_argument("--require", choices=[r.name.lower().replace("_", "-") for r in axioms.Rung],
                   help="exit 1 unless this rung is reached")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("extract", help="write the translation triple of a Moufang loop")
    p.add_argument("table")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", help="check the reconstruction hypotheses")
    p.add_argument("triple")
    p.add_argument("table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reconstruct", help="rebuild the Cayley table from a triple")
    p.add_argument("triple")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("roundtrip", help="extract then reconstruct and compare")
    p.add_argument("table")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("suite", help="verify hypotheses and every derived proposition")
    p.add_argument("triple")
    p.add_argument("table", nargs="?", help="defaults to the reconstructed table")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("generate", help="print a fixture table: cyclic N | s3 | chein-s3 | random N SEED")
    p.add_argument("kind", choices=["cyclic", "s3", "chein-s3", "random"])
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, _Usage) as exc:
        print(f"moufang {args.command}: {exc}", file=sys.stderr)
        return USAGE
    except AlgebraError as exc:
        # parsed fine but violates a structural precondition (sizes, degrees)
        print(f"moufang {args.command}: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
