"""Exact cone-membership LP: is ``t`` a nonnegative combination of the ``w_i``?

The engine runs phase-1 simplex with Bland's rule on

    minimize  sum(a)   s.t.  D W alpha + a = D t,  alpha, a >= 0

where ``W`` has the generators as columns and ``D`` flips rows so the
right-hand side is nonnegative.  A zero optimum gives the coefficients.
A positive optimum gives the phase-1 dual ``y``; then ``h = D y``
satisfies ``h.w_i <= 0`` for every generator and ``h.t > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DimensionMismatch
from .numerics import Vec, VecSet, linear_combination, primitive_integer

_ZERO = Fraction(0)


@dataclass(frozen=True)
class FeasibilityProblem:
    generators: VecSet
    target: Vec

    def __post_init__(self):
        if self.target.dim != self.generators.dim:
            raise DimensionMismatch(
                f"target has dimension {self.target.dim}, generators have {self.generators.dim}"
            )

    @property
    def dim(self) -> int:
        return self.generators.dim


@dataclass(frozen=True)
class Coefficients:
    alphas: tuple[Fraction, ...]


@dataclass(frozen=True)
class FarkasCertificate:
    normal: Vec


@dataclass(frozen=True)
class Inside:
    coefficients: Coefficients

    inside = True


@dataclass(frozen=True)
class Outside:
    certificate: FarkasCertificate

    inside = False


MembershipResult = Union[Inside, Outside]


def verify_inside(p: FeasibilityProblem, c: Coefficients) -> bool:
    if len(c.alphas) != len(p.generators):
        return False
    if any(a < 0 for a in c.alphas):
        return False
    return linear_combination(c.alphas, p.generators.vectors, p.dim) == p.target


def verify_certificate(p: FeasibilityProblem, cert: FarkasCertificate) -> bool:
    h = cert.normal
    if h.dim != p.dim:
        return False
    if any(h.dot(w) > 0 for w in p.generators):
        return False
    return h.dot(p.target) > 0


def verify(p: FeasibilityProblem, result: MembershipResult) -> bool:
    if isinstance(result, Inside):
        return verify_inside(p, result.coefficients)
    return verify_certificate(p, result.certificate)


def solve_feasibility(p: FeasibilityProblem) -> MembershipResult:
    n, m = p.dim, len(p.generators)
    t = p.target.coords

    if m == 0:
        if p.target.is_zero():
            return Inside(Coefficients(()))
        return Outside(FarkasCertificate(primitive_integer(p.target)))

    flip = [-1 if ti < 0 else 1 for ti in t]
    ncols = m + n
    # Row layout: [generator columns | artificial columns | rhs].
    tab = []
    for i in range(n):
        row = [flip[i] * w.coords[i] for w in p.generators]
        row += [Fraction(1) if k == i else _ZERO for k in range(n)]
        row.append(flip[i] * t[i])
        tab.append(row)
    basis = [m + i for i in range(n)]
    # Reduced costs, last entry holds minus the objective value.
    obj = [-sum((tab[i][j] for i in range(n)), _ZERO) for j in range(m)]
    obj += [_ZERO] * n
    obj.append(-sum((tab[i][-1] for i in range(n)), _ZERO))

    while True:
        entering = next((j for j in range(ncols) if obj[j] < 0), None)
        if entering is None:
            break
        leave, best = None, None
        for i in range(n):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        # Phase 1 is bounded below by zero, so some row always qualifies.
        assert leave is not None
        _pivot(tab, obj, leave, entering)
        basis[leave] = entering

    if obj[-1] == 0:
        alphas = [_ZERO] * m
        for i, b in enumerate(basis):
            if b < m:
                alphas[b] = tab[i][-1]
        return Inside(Coefficients(tuple(alphas)))

    # Reduced cost of artificial i is 1 - y_i.
    y = [1 - obj[m + i] for i in range(n)]
    h = Vec(tuple(flip[i] * y[i] for i in range(n)))
    return Outside(FarkasCertificate(primitive_integer(h)))


def _pivot(tab, obj, r, c):
    prow = tab[r]
    pv = prow[c]
    if pv != 1:
        prow[:] = [x / pv for x in prow]
    for i, row in enumerate(tab):
        if i != r:
            f = row[c]
            if f:
                row[:] = [x - f * y for x, y in zip(row, prow)]
    f = obj[c]
    if f:
        obj[:] = [x - f * y for x, y in zip(obj, prow)]


def membership(target: Vec, generators: VecSet) -> MembershipResult:
    """Convenience wrapper around :func:`solve_feasibility`."""
    return solve_feasibility(FeasibilityProblem(generators, target))
