"""A minimal opportunistic pattern search in floating point.

Illustrative only: the exact core certifies the pattern, this module just
walks it.  The step is never expanded; it shrinks on a failed poll.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence, Union

from .errors import ObjectiveFailure
from .numerics import VecSet

Point = tuple[float, ...]
Objective = Callable[[Sequence[float]], float]


@dataclass(frozen=True)
class PollState:
    incumbent: Point
    step: float
    pattern: VecSet
    evals: int = 0
    value: float | None = None  # cached f(incumbent); None until evaluated


@dataclass(frozen=True)
class Improved:
    new_incumbent: Point
    at_direction_index: int
    value: float


@dataclass(frozen=True)
class NoImprovement:
    truncated: bool = False  # the eval cap stopped the poll before the last direction


PollOutcome = Union[Improved, NoImprovement]


def _directions(pattern: VecSet) -> list[Point]:
    return [tuple(float(c) for c in v) for v in pattern]


def _eval(f: Objective, x: Point) -> float:
    y = float(f(x))
    if not math.isfinite(y):
        raise ObjectiveFailure(f"objective returned {y} at {x}")
    return y


def _ensure_value(f: Objective, s: PollState) -> PollState:
    if s.value is not None:
        return s
    return replace(s, value=_eval(f, s.incumbent), evals=s.evals + 1)


def poll(f: Objective, s: PollState, max_evals: int | None = None) -> tuple[PollOutcome, PollState]:
    """Evaluate ``x + step * v`` in pattern order and stop at the first strict decrease.

    Returns the outcome and the state with ``evals`` updated (the incumbent
    itself is not moved).  ``max_evals`` caps the total counter.
    """
    if len(s.pattern) == 0:
        raise ValueError("pattern is empty")
    if not s.step > 0:
        raise ValueError(f"step must be positive, got {s.step}")
    s = _ensure_value(f, s)
    evals = s.evals
    for i, d in enumerate(_directions(s.pattern)):
        if max_evals is not None and evals >= max_evals:
            return NoImprovement(truncated=True), replace(s, evals=evals)
        trial = tuple(x + s.step * di for x, di in zip(s.incumbent, d))
        y = _eval(f, trial)
        evals += 1
        if y < s.value:
            return Improved(trial, i, y), replace(s, evals=evals)
    return NoImprovement(), replace(s, evals=evals)


def search(
    f: Objective,
    s0: PollState,
    shrink: float = 0.5,
    step_min: float = 1e-6,
    eval_budget: int = 1000,
    log: Callable[[PollState, PollOutcome], None] | None = None,
) -> PollState:
    if not 0 < shrink < 1:
        raise ValueError(f"shrink must lie in (0, 1), got {shrink}")
    if not 0 < step_min < s0.step:
        raise ValueError(f"need 0 < step_min < step0, got {step_min} and {s0.step}")
    if eval_budget < 1:
        raise ValueError("eval budget must be positive")
    s = s0
    if s.value is None:
        s = _ensure_value(f, s)
    while s.step >= step_min and s.evals < eval_budget:
        outcome, s = poll(f, s, max_evals=eval_budget)
        if isinstance(outcome, Improved):
            s = replace(s, incumbent=outcome.new_incumbent, value=outcome.value)
        elif not outcome.truncated:
            s = replace(s, step=s.step * shrink)
        if log is not None:
            log(s, outcome)
    return s


def directional_derivatives(grad: Sequence[float], pattern: VecSet) -> list[float]:
    return [sum(g * di for g, di in zip(grad, d)) for d in _directions(pattern)]


def sphere(x):
    return sum(xi * xi for xi in x)


def shifted_quadratic(x):
    return sum((xi - 1.0) ** 2 for xi in x)


def abs_sum(x):
    return sum(abs(xi) for xi in x)


def constant(x):
    return 1.0


OBJECTIVES: dict[str, Objective] = {
    "sphere": sphere,
    "shifted-quadratic": shifted_quadratic,
    "abs-sum": abs_sum,
    "constant": constant,
}
