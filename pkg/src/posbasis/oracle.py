"""Fourier-Motzkin feasibility oracle.

Deliberately shares nothing with :mod:`posbasis.lp` beyond the vector
types: equalities are removed by substitution, then variables are
eliminated one by one by pairing rows of opposite sign.  The cost grows
doubly exponentially, so inputs are guarded by hard size limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, SizeExceeded
from .lp import FeasibilityProblem
from .numerics import Matrix, Vec, VecSet, as_rational, rank

LE, LT, EQ = "<=", "<", "="
RELATIONS = (LE, LT, EQ)

MAX_UNKNOWNS = 10
MAX_ROWS = 64
MAX_GENERATORS = 8
MAX_DIM = 4


@dataclass(frozen=True)
class Row:
    coeffs: tuple[Fraction, ...]
    relation: str
    bound: Fraction


@dataclass(frozen=True)
class InequalitySystem:
    dim: int
    rows: tuple[Row, ...]

    def __post_init__(self):
        rows = []
        for r in self.rows:
            if not isinstance(r, Row):
                coeffs, rel, bound = r
                coeffs = coeffs.coords if isinstance(coeffs, Vec) else coeffs
                r = Row(tuple(as_rational(c) for c in coeffs), rel, as_rational(bound))
            if len(r.coeffs) != self.dim:
                raise DimensionMismatch(f"row has {len(r.coeffs)} coefficients, system has {self.dim} unknowns")
            if r.relation not in RELATIONS:
                raise ValueError(f"unknown relation {r.relation!r}")
            rows.append(r)
        object.__setattr__(self, "rows", tuple(rows))


def _normalize(coeffs, rel, bound):
    # Positive rescaling so duplicate rows collapse when deduplicated.
    lead = next((abs(c) for c in coeffs if c != 0), None)
    if lead is None or lead == 1:
        return (tuple(coeffs), rel, bound)
    return (tuple(c / lead for c in coeffs), rel, bound / lead)


def _trivially_ok(rel, bound):
    if rel == LE:
        return bound >= 0
    if rel == LT:
        return bound > 0
    return bound == 0


def fm_feasible(sys: InequalitySystem) -> bool:
    """Exact feasibility of ``{x : row.coeffs . x  rel  row.bound}``."""
    if sys.dim > MAX_UNKNOWNS or len(sys.rows) > MAX_ROWS:
        raise SizeExceeded(
            f"{sys.dim} unknowns / {len(sys.rows)} rows exceeds the "
            f"{MAX_UNKNOWNS} / {MAX_ROWS} guard"
        )
    eqs = [(list(r.coeffs), r.bound) for r in sys.rows if r.relation == EQ]
    ineqs = [(list(r.coeffs), r.relation, r.bound) for r in sys.rows if r.relation != EQ]
    live = list(range(sys.dim))

    while eqs:
        coeffs, b = eqs.pop()
        j = next((k for k in live if coeffs[k] != 0), None)
        if j is None:
            if b != 0:
                return False
            continue
        # x_j = (b - sum_{k != j} coeffs[k] x_k) / coeffs[j]
        piv = coeffs[j]

        def substitute(row, rb):
            f = row[j] / piv
            if f == 0:
                return row, rb
            return [a - f * c for a, c in zip(row, coeffs)], rb - f * b

        eqs = [substitute(r, rb) for r, rb in eqs]
        new_ineqs = []
        for r, rel, rb in ineqs:
            r2, rb2 = substitute(r, rb)
            new_ineqs.append((r2, rel, rb2))
        ineqs = new_ineqs
        live.remove(j)

    rows = set()
    for r, rel, b in ineqs:
        coeffs = tuple(r[k] for k in live)
        if all(c == 0 for c in coeffs):
            if not _trivially_ok(rel, b):
                return False
            continue
        rows.add(_normalize(coeffs, rel, b))

    nvars = len(live)
    for j in range(nvars):
        pos, neg, rest = [], [], set()
        for row in rows:
            c = row[0][j]
            if c > 0:
                pos.append(row)
            elif c < 0:
                neg.append(row)
            else:
                rest.add(row)
        for pc, prel, pb in pos:
            for nc, nrel, nb in neg:
                lp_, ln = -nc[j], pc[j]
                coeffs = tuple(lp_ * a + ln * c for a, c in zip(pc, nc))
                bound = lp_ * pb + ln * nb
                rel = LT if LT in (prel, nrel) else LE
                if all(c == 0 for c in coeffs):
                    if not _trivially_ok(rel, bound):
                        return False
                    continue
                rest.add(_normalize(coeffs, rel, bound))
        rows = rest
    return True


def _guard(p_gens: int, dim: int) -> None:
    if p_gens > MAX_GENERATORS or dim > MAX_DIM:
        raise SizeExceeded(
            f"{p_gens} generators in R^{dim} exceeds the oracle guard "
            f"({MAX_GENERATORS} generators, dimension {MAX_DIM})"
        )


def membership_system(p: FeasibilityProblem) -> InequalitySystem:
    m, n = len(p.generators), p.dim
    rows = []
    for i in range(n):
        rows.append(Row(tuple(w.coords[i] for w in p.generators), EQ, p.target.coords[i]))
    for j in range(m):
        rows.append(Row(tuple(Fraction(-1 if k == j else 0) for k in range(m)), LE, Fraction(0)))
    return InequalitySystem(m, tuple(rows))


def oracle_membership(p: FeasibilityProblem) -> bool:
    _guard(len(p.generators), p.dim)
    if len(p.generators) == 0:
        return p.target.is_zero()
    return fm_feasible(membership_system(p))


def oracle_positive_spanning(vs: VecSet) -> bool:
    """Positive spanning iff full rank and some ``sum lam_i v_i = 0`` with all ``lam_i >= 1``."""
    m, n = len(vs), vs.dim
    _guard(m, n)
    if m == 0 or rank(Matrix.from_vecset(vs)) != n:
        return False
    rows = []
    for i in range(n):
        rows.append(Row(tuple(v.coords[i] for v in vs), EQ, Fraction(0)))
    for j in range(m):
        rows.append(Row(tuple(Fraction(-1 if k == j else 0) for k in range(m)), LE, Fraction(-1)))
    return fm_feasible(InequalitySystem(m, tuple(rows)))


def system(dim: int, rows: Sequence) -> InequalitySystem:
    """Build a system from ``(coeffs, relation, bound)`` triples; ``">="`` is flipped to ``"<="``."""
    out = []
    for coeffs, rel, bound in rows:
        coeffs = [as_rational(c) for c in (coeffs.coords if isinstance(coeffs, Vec) else coeffs)]
        bound = as_rational(bound)
        if rel == ">=":
            coeffs, rel, bound = [-c for c in coeffs], LE, -bound
        elif rel == ">":
            coeffs, rel, bound = [-c for c in coeffs], LT, -bound
        out.append(Row(tuple(coeffs), rel, bound))
    return InequalitySystem(dim, tuple(out))
