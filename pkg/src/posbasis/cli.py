"""Command line: ``posbasis check | generate | certify | poll``.

Exit codes: 0 predicate true / success, 1 predicate false (or a report
that fails certification), 2 input or usage error, 3 the Fourier-Motzkin
cross-check disagrees with the simplex engine.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dsdemo, generators, oracle
from .cone import check, is_positively_spanning, pli_problem, spanning_problem
from .errors import PosBasisError
from .io import (
    certify_report,
    direction_name,
    dumps_report,
    parse_rational,
    parse_vecset,
    report_document,
    report_from_document,
    serialize_vecset,
)
from .lp import Inside

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def cross_check(report, predicate: str) -> dict:
    """Compare every stored verdict with the Fourier-Motzkin oracle."""
    vs = report.set
    disagreements = []
    if predicate in ("pli", "basis"):
        for i, res in report.per_vector:
            if oracle.oracle_membership(pli_problem(vs, i)) != isinstance(res, Inside):
                disagreements.append(f"membership of {vs.label(i)}")
    if predicate in ("spanning", "basis"):
        for k, res in enumerate(report.spanning_witnesses):
            if oracle.oracle_membership(spanning_problem(vs, k)) != isinstance(res, Inside):
                disagreements.append(f"membership of {direction_name(k)}")
        if oracle.oracle_positive_spanning(vs) != report.verdict_spanning:
            disagreements.append("positive spanning characterization")
    return {"oracle": "fourier-motzkin", "agree": not disagreements, "disagreements": disagreements}


def cmd_check(args) -> int:
    vs = parse_vecset(_read(args.path))
    verdict, report = check(vs, args.predicate)
    xc = cross_check(report, args.predicate) if args.cross_check else None
    sys.stdout.write(dumps_report(report_document(report, args.predicate, xc)))
    if xc is not None and not xc["agree"]:
        print("error: oracle disagrees: " + "; ".join(xc["disagreements"]), file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_TRUE if verdict else EXIT_FALSE


def cmd_generate(args) -> int:
    fam = args.family
    if fam in ("minimal", "maximal", "binomial") and args.n is None:
        raise UsageError(f"family {fam} needs -n")
    if fam == "minimal":
        vs = generators.gen_minimal_basis(args.n)
    elif fam == "maximal":
        vs = generators.gen_maximal_basis(args.n)
    elif fam == "binomial":
        vs = generators.gen_binomial(args.n)
    else:
        params = None
        if args.params:
            params = [parse_rational(tok.strip()) for tok in args.params.split(",")]
        m = args.m if args.m is not None else (len(params) if params else None)
        if m is None:
            raise UsageError("family circle-lift needs -m or --params")
        vs = generators.gen_circle_lift(m, args.n if args.n is not None else 3, params)
    sys.stdout.write(serialize_vecset(vs))
    return EXIT_TRUE


def cmd_certify(args) -> int:
    try:
        doc = json.loads(_read(args.path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"report is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise UsageError("report must be a JSON object")
    report = report_from_document(doc)
    issues = certify_report(report, doc.get("verdicts", {}).get("basis"))
    checked = len(report.per_vector) + len(report.spanning_witnesses)
    for issue in issues:
        print(f"FAIL {issue}")
    if issues:
        return EXIT_FALSE
    print(f"ok: {checked} witnesses re-verified, verdicts consistent")
    if args.cross_check:
        predicate = doc.get("predicate", "basis")
        xc = cross_check(report, predicate)
        if not xc["agree"]:
            print("error: oracle disagrees: " + "; ".join(xc["disagreements"]), file=sys.stderr)
            return EXIT_DISAGREE
        print("ok: Fourier-Motzkin cross-check agrees")
    return EXIT_TRUE


def _fmt(x) -> str:
    return "(" + ", ".join(f"{c:.6g}" for c in x) + ")"


def cmd_poll(args) -> int:
    try:
        f = dsdemo.OBJECTIVES[args.objective]
    except KeyError:
        raise UsageError(f"unknown objective {args.objective!r}; choose from {', '.join(dsdemo.OBJECTIVES)}")
    try:
        x0 = tuple(float(tok) for tok in args.x0.split(","))
    except ValueError as exc:
        raise UsageError(f"bad --x0: {args.x0!r}") from exc
    if args.pattern:
        pattern = parse_vecset(_read(args.pattern))
    else:
        pattern = generators.gen_maximal_basis(len(x0))
    if pattern.dim != len(x0):
        raise UsageError(f"x0 has {len(x0)} coordinates, pattern has dimension {pattern.dim}")
    if len(pattern) == 0:
        raise UsageError("pattern file holds no vectors")
    if not is_positively_spanning(pattern)[0]:
        print("warning: pattern is not positively spanning; descent is not guaranteed", file=sys.stderr)

    rounds = [0]

    def log(s, outcome):
        rounds[0] += 1
        what = (f"improved dir {outcome.at_direction_index}"
                if isinstance(outcome, dsdemo.Improved) else "no improvement")
        print(f"round {rounds[0]} x={_fmt(s.incumbent)} f={s.value:.6g} step={s.step:.6g} {what}")

    s0 = dsdemo.PollState(x0, args.step0, pattern)
    try:
        s = dsdemo.search(f, s0, args.shrink, args.step_min, args.budget, log=log)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(f"final x={_fmt(s.incumbent)} f={s.value:.6g} step={s.step:.6g} evals={s.evals}")
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="posbasis", description="Exact positive-basis tooling.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="decide pli / spanning / basis for a VecSet file")
    c.add_argument("path")
    c.add_argument("--predicate", choices=("pli", "spanning", "basis"), default="basis")
    c.add_argument("--cross-check", action="store_true")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("generate", help="write a vector family as a VecSet file")
    g.add_argument("--family", choices=generators.FAMILIES, required=True)
    g.add_argument("-n", type=int)
    g.add_argument("-m", type=int)
    g.add_argument("--params", help="comma-separated circle parameters t >= 0")
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("certify", help="re-verify every witness in a report")
    r.add_argument("path")
    r.add_argument("--cross-check", action="store_true")
    r.set_defaults(func=cmd_certify)

    q = sub.add_parser("poll", help="run the pattern-search demo")
    q.add_argument("--objective", default="sphere")
    q.add_argument("--x0", default="1,1")
    q.add_argument("--pattern")
    q.add_argument("--step0", type=float, default=1.0)
    q.add_argument("--shrink", type=float, default=0.5)
    q.add_argument("--step-min", type=float, default=1e-6)
    q.add_argument("--budget", type=int, default=500)
    q.set_defaults(func=cmd_poll)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PosBasisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # keep the exit-code contract closed
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
