"""VecSet text files and JSON report documents.

VecSet grammar: the first meaningful line is ``dim N``; every following
nonempty line holds N whitespace-separated rationals (``p/q`` or an
integer); ``#`` starts a comment running to end of line.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from . import __version__
from .cone import CheckReport, pli_verdict, spanning_problem, pli_problem
from .errors import DimensionMismatch, ParseError
from .lp import Coefficients, FarkasCertificate, Inside, Outside, verify
from .numerics import Vec, VecSet

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")
_HEADER = re.compile(r"dim\s+(\S+)\Z")


def parse_rational(token: str, line: int | None = None, column: int | None = None) -> Fraction:
    if not _RATIONAL.match(token):
        raise ParseError(f"not a rational literal: {token!r}", line, column)
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {token!r}", line, column)
    return Fraction(int(num), int(den) if den else 1)


def parse_vecset(text: str) -> VecSet:
    dim = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        if dim is None:
            m = _HEADER.match(content.strip())
            if not m:
                raise ParseError("expected header 'dim N'", lineno, 1)
            try:
                dim = int(m.group(1))
            except ValueError:
                dim = 0
            if dim < 1:
                raise ParseError(f"dimension must be a positive integer, got {m.group(1)!r}",
                                 lineno, content.index(m.group(1)) + 1)
            continue
        coords = []
        for tok in re.finditer(r"\S+", content):
            coords.append(parse_rational(tok.group(), lineno, tok.start() + 1))
        if len(coords) != dim:
            raise DimensionMismatch(f"line {lineno}: {len(coords)} entries, header says dim {dim}")
        rows.append(Vec(tuple(coords)))
    if dim is None:
        raise ParseError("missing 'dim N' header", 1, 1)
    return VecSet(dim, tuple(rows))


def serialize_vecset(vs: VecSet) -> str:
    lines = [f"dim {vs.dim}", f"# count {len(vs)}"]
    lines += [" ".join(str(c) for c in v) for v in vs]
    return "\n".join(lines) + "\n"


def _rats(xs) -> list[str]:
    return [str(x) for x in xs]


def _result_doc(res) -> dict:
    if isinstance(res, Inside):
        return {"result": "inside", "coefficients": _rats(res.coefficients.alphas)}
    return {"result": "outside", "normal": _rats(res.certificate.normal)}


def _result_from_doc(doc: dict):
    kind = doc.get("result")
    if kind == "inside":
        return Inside(Coefficients(tuple(parse_rational(x) for x in doc["coefficients"])))
    if kind == "outside":
        return Outside(FarkasCertificate(Vec(tuple(parse_rational(x) for x in doc["normal"]))))
    raise ParseError(f"unknown result kind {kind!r}")


def direction_name(k: int) -> str:
    return f"{'-' if k % 2 else '+'}e{k // 2 + 1}"


def report_document(report: CheckReport, predicate: str, cross_check: dict | None = None) -> dict:
    vs = report.set
    doc = {
        "tool": "posbasis",
        "version": __version__,
        "predicate": predicate,
        "dim": vs.dim,
        "count": len(vs),
        "vectors": [_rats(v) for v in vs],
        "verdicts": {
            "pli": report.verdict_pli,
            "spanning": report.verdict_spanning,
            "basis": report.verdict_basis,
        },
        "notes": list(report.notes),
        "per_vector": [
            {"index": i, "label": vs.label(i), **_result_doc(r)} for i, r in report.per_vector
        ],
        "spanning_witnesses": [
            {"direction": direction_name(k), **_result_doc(r)}
            for k, r in enumerate(report.spanning_witnesses)
        ],
    }
    if cross_check is not None:
        doc["cross_check"] = cross_check
    return doc


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def report_from_document(doc: dict) -> CheckReport:
    try:
        dim = doc["dim"]
        vectors = tuple(Vec(tuple(parse_rational(x) for x in row)) for row in doc["vectors"])
        vs = VecSet(dim, vectors)
        verdicts = doc["verdicts"]
        return CheckReport(
            set=vs,
            per_vector=[(item["index"], _result_from_doc(item)) for item in doc["per_vector"]],
            spanning_witnesses=[_result_from_doc(item) for item in doc["spanning_witnesses"]],
            verdict_pli=verdicts.get("pli"),
            verdict_spanning=verdicts.get("spanning"),
            notes=list(doc.get("notes", [])),
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed report document: {exc!r}") from exc


def certify_report(report: CheckReport, stored_basis: bool | None = None) -> list[str]:
    """Re-verify every witness and re-derive the verdicts; return a list of problems found."""
    vs = report.set
    issues = []
    indices = [i for i, _ in report.per_vector]
    for i, res in report.per_vector:
        if not 0 <= i < len(vs):
            issues.append(f"per-vector index {i} out of range")
            continue
        if not verify(pli_problem(vs, i), res):
            issues.append(f"witness for {vs.label(i)} does not verify")
    for k, res in enumerate(report.spanning_witnesses):
        if k >= 2 * vs.dim:
            issues.append(f"extra spanning witness #{k}")
            continue
        if not verify(spanning_problem(vs, k), res):
            issues.append(f"spanning witness {direction_name(k)} does not verify")

    if report.verdict_pli is not None:
        if sorted(indices) != list(range(len(vs))):
            issues.append("per-vector witnesses do not cover the set exactly once")
        elif pli_verdict(vs, report.per_vector) != report.verdict_pli:
            issues.append("stored pli verdict disagrees with its witnesses")
    if report.verdict_spanning is not None:
        if len(report.spanning_witnesses) != 2 * vs.dim:
            issues.append(f"expected {2 * vs.dim} spanning witnesses, found {len(report.spanning_witnesses)}")
        elif all(isinstance(r, Inside) for r in report.spanning_witnesses) != report.verdict_spanning:
            issues.append("stored spanning verdict disagrees with its witnesses")
    if stored_basis is not None and stored_basis != report.verdict_basis:
        issues.append("stored basis verdict is not pli AND spanning")
    return issues
