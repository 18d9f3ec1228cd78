"""Vector families: minimal/maximal positive bases, the 0/1 middle layer,
and lifted rational points of the unit circle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DimensionTooSmall, DuplicateParameter, InvalidScalar
from .numerics import Vec, VecSet, as_rational, unit


@dataclass(frozen=True)
class CircleParam:
    t: Fraction

    def __post_init__(self):
        t = as_rational(self.t)
        if t < 0:
            raise InvalidScalar(f"circle parameter must be >= 0, got {t}")
        object.__setattr__(self, "t", t)


def gen_minimal_basis(n: int) -> VecSet:
    """``{e_1, ..., e_n, -(e_1 + ... + e_n)}``."""
    _need(n, 1)
    vs = [unit(n, i) for i in range(n)]
    vs.append(Vec((Fraction(-1),) * n))
    return VecSet(n, tuple(vs))


def gen_maximal_basis(n: int) -> VecSet:
    """``{e_1, ..., e_n, -e_1, ..., -e_n}``."""
    _need(n, 1)
    vs = [unit(n, i) for i in range(n)] + [unit(n, i, -1) for i in range(n)]
    return VecSet(n, tuple(vs))


def gen_binomial(n: int) -> VecSet:
    """All 0/1 vectors of length ``n`` with exactly ``n // 2`` ones.

    Ordered lexicographically, largest first (``n=4`` starts with ``1 1 0 0``).
    """
    _need(n, 2)
    k = n // 2
    vs = []
    for ones in combinations(range(n), k):
        s = set(ones)
        vs.append(Vec(tuple(Fraction(1 if i in s else 0) for i in range(n))))
    return VecSet(n, tuple(vs))


def rational_circle_point(p: CircleParam) -> Vec:
    """``((1 - t^2) / (1 + t^2), 2t / (1 + t^2))``, exactly on the unit circle."""
    t = p.t
    d = 1 + t * t
    return Vec(((1 - t * t) / d, 2 * t / d))


def gen_circle_lift(m: int, n: int = 3, params: Sequence | None = None) -> VecSet:
    """``m`` distinct circle points lifted to ``(x, y, 1, 0, ..., 0)`` in R^n.

    ``params`` defaults to ``t = 0, 1, ..., m-1``.
    """
    if n < 3:
        raise DimensionTooSmall(f"the circle lift needs n >= 3, got {n}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if params is None:
        params = range(m)
    params = [p if isinstance(p, CircleParam) else CircleParam(p) for p in params]
    if len(params) != m:
        raise ValueError(f"expected {m} parameters, got {len(params)}")
    seen = set()
    for p in params:
        if p.t in seen:
            raise DuplicateParameter(f"circle parameter {p.t} repeats")
        seen.add(p.t)
    pad = (Fraction(0),) * (n - 3)
    vs = []
    for p in params:
        x, y = rational_circle_point(p).coords
        vs.append(Vec((x, y, Fraction(1)) + pad))
    return VecSet(n, tuple(vs))


def _need(n, lo):
    if not isinstance(n, int) or n < lo:
        raise DimensionTooSmall(f"n must be an integer >= {lo}, got {n!r}")


FAMILIES = ("minimal", "maximal", "binomial", "circle-lift")
