"""Positive spanning, positive linear independence and positive bases.

Every verdict is backed by per-problem witnesses from the LP engine, so a
report can be re-checked without trusting the solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionViolated
from .lp import (
    FeasibilityProblem,
    Inside,
    MembershipResult,
    Outside,
    solve_feasibility,
    verify,
)
from .numerics import Matrix, VecSet, rank, unit

NOTE_EMPTY = "empty set: positively linearly independent vacuously"
NOTE_SINGLETON = "single vector: positively linearly independent by convention"


@dataclass
class CheckReport:
    """Witnesses and verdicts for one VecSet.

    ``None`` verdicts mean that predicate was not evaluated.
    ``per_vector`` holds ``(i, result)`` for target ``v_i`` against the other
    members; ``spanning_witnesses`` holds results for ``+e_1, -e_1, ..., -e_n``.
    """

    set: VecSet
    per_vector: list[tuple[int, MembershipResult]] = field(default_factory=list)
    spanning_witnesses: list[MembershipResult] = field(default_factory=list)
    verdict_pli: bool | None = None
    verdict_spanning: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def verdict_basis(self) -> bool | None:
        if self.verdict_pli is None or self.verdict_spanning is None:
            return None
        return self.verdict_pli and self.verdict_spanning

    def problems(self):
        """Yield ``(problem, result)`` for every stored witness."""
        for i, res in self.per_vector:
            yield pli_problem(self.set, i), res
        for k, res in enumerate(self.spanning_witnesses):
            yield spanning_problem(self.set, k), res

    def all_witnesses_verify(self) -> bool:
        return all(verify(p, r) for p, r in self.problems())


def pli_problem(vs: VecSet, i: int) -> FeasibilityProblem:
    return FeasibilityProblem(vs.without(i), vs[i])


def spanning_problem(vs: VecSet, k: int) -> FeasibilityProblem:
    """Problem ``k`` targets ``+e_{k//2}`` for even ``k`` and ``-e_{k//2}`` for odd ``k``."""
    return FeasibilityProblem(vs, unit(vs.dim, k // 2, -1 if k % 2 else 1))


def pli_verdict(vs: VecSet, per_vector) -> bool:
    if len(vs) <= 1:
        return True
    return all(isinstance(r, Outside) for _, r in per_vector)


def _fill_pli(vs: VecSet, report: CheckReport) -> None:
    report.per_vector = [(i, solve_feasibility(pli_problem(vs, i))) for i in range(len(vs))]
    if len(vs) == 0:
        report.notes.append(NOTE_EMPTY)
    elif len(vs) == 1:
        report.notes.append(NOTE_SINGLETON)
    report.verdict_pli = pli_verdict(vs, report.per_vector)


def _fill_spanning(vs: VecSet, report: CheckReport) -> None:
    report.spanning_witnesses = [solve_feasibility(spanning_problem(vs, k)) for k in range(2 * vs.dim)]
    report.verdict_spanning = all(isinstance(r, Inside) for r in report.spanning_witnesses)


def is_pli(vs: VecSet) -> tuple[bool, CheckReport]:
    report = CheckReport(vs)
    _fill_pli(vs, report)
    return report.verdict_pli, report


def is_positively_spanning(vs: VecSet) -> tuple[bool, CheckReport]:
    # Spanning all +-e_i suffices: any x is sum of |x_i| (sign x_i) e_i.
    report = CheckReport(vs)
    _fill_spanning(vs, report)
    return report.verdict_spanning, report


def is_positive_basis(vs: VecSet) -> tuple[bool, CheckReport]:
    report = CheckReport(vs)
    _fill_pli(vs, report)
    _fill_spanning(vs, report)
    return report.verdict_basis, report


def remove_one_still_spans(vs: VecSet) -> bool:
    """Whether dropping any single member still leaves a linear spanning set."""
    ok, _ = is_positively_spanning(vs)
    if not ok:
        raise PreconditionViolated("set is not positively spanning")
    return all(rank(Matrix.from_vecset(vs.without(i))) == vs.dim for i in range(len(vs)))


def check(vs: VecSet, predicate: str) -> tuple[bool, CheckReport]:
    funcs = {"pli": is_pli, "spanning": is_positively_spanning, "basis": is_positive_basis}
    try:
        fn = funcs[predicate]
    except KeyError:
        raise ValueError(f"unknown predicate {predicate!r}; expected one of {sorted(funcs)}") from None
    return fn(vs)
