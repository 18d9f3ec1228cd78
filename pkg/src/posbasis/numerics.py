"""Exact rational scalars, vectors, vector sets and dense rank.

Every scalar in the core is a :class:`fractions.Fraction`, which keeps
numerator and denominator as Python integers (arbitrary precision) and
normalizes to lowest terms with a positive denominator after every
operation.  Floats are rejected at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, InvalidScalar

Rational = Fraction


def rat(num: int, den: int = 1) -> Fraction:
    """Canonical rational ``num/den``; the sign lives on the numerator."""
    if den == 0:
        raise InvalidScalar(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would smuggle rounding into the exact core.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InvalidScalar(f"refusing bool as a scalar: {x!r}")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidScalar(f"not a rational literal: {x!r}") from exc
    raise InvalidScalar(f"not an exact scalar: {x!r} ({type(x).__name__})")


@dataclass(frozen=True)
class Vec:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(as_rational(c) for c in self.coords)
        if not coords:
            raise DimensionMismatch("a vector needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: Vec) -> None:
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")

    def __add__(self, other: Vec) -> Vec:
        self._check(other)
        return Vec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Vec) -> Vec:
        self._check(other)
        return Vec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Vec:
        return Vec(tuple(-a for a in self.coords))

    def dot(self, other: Vec) -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def vec(*coords) -> Vec:
    """Shorthand: ``vec(1, 0, "3/5")``."""
    return Vec(tuple(coords))


def zeros(n: int) -> Vec:
    return Vec((Fraction(0),) * n)


def unit(n: int, i: int, sign: int = 1) -> Vec:
    """The coordinate vector ``sign * e_i`` in R^n (0-based ``i``)."""
    return Vec(tuple(Fraction(sign if j == i else 0) for j in range(n)))


def scale(v: Vec, c) -> Vec:
    c = as_rational(c)
    return Vec(tuple(c * a for a in v.coords))


def linear_combination(coeffs: Sequence, vectors: Sequence[Vec], dim: int) -> Vec:
    acc = [Fraction(0)] * dim
    for c, v in zip(coeffs, vectors, strict=True):
        if c:
            for j, a in enumerate(v.coords):
                acc[j] += c * a
    return Vec(tuple(acc))


def primitive_integer(v: Vec) -> Vec:
    """Positive multiple of ``v`` with coprime integer coordinates.

    The zero vector is returned unchanged.
    """
    if v.is_zero():
        return v
    lcm = 1
    for c in v.coords:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in v.coords]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return Vec(tuple(Fraction(a // g) for a in ints))


@dataclass(frozen=True)
class VecSet:
    """Ordered collection of same-dimension vectors; duplicates allowed."""

    dim: int
    vectors: tuple[Vec, ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DimensionMismatch(f"dimension must be a positive integer, got {self.dim!r}")
        vectors = tuple(v if isinstance(v, Vec) else Vec(tuple(v)) for v in self.vectors)
        for i, v in enumerate(vectors):
            if v.dim != self.dim:
                raise DimensionMismatch(
                    f"vector {i} has dimension {v.dim}, set has dimension {self.dim}"
                )
        object.__setattr__(self, "vectors", vectors)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != len(vectors):
                raise ValueError("one label per vector is required")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], dim: int | None = None) -> VecSet:
        vectors = tuple(Vec(tuple(r)) for r in rows)
        if dim is None:
            if not vectors:
                raise DimensionMismatch("an empty set needs an explicit dimension")
            dim = vectors[0].dim
        return cls(dim, vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[Vec]:
        return iter(self.vectors)

    def __getitem__(self, i) -> Vec:
        return self.vectors[i]

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return f"v{i + 1}"

    def without(self, i: int) -> VecSet:
        return VecSet(self.dim, self.vectors[:i] + self.vectors[i + 1:])

    def rescaled(self, factors: Sequence) -> VecSet:
        return VecSet(self.dim, tuple(scale(v, c) for v, c in zip(self.vectors, factors, strict=True)))

    def permuted(self, order: Sequence[int]) -> VecSet:
        return VecSet(self.dim, tuple(self.vectors[i] for i in order))


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(as_rational(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def from_vecset(cls, vs: VecSet) -> Matrix:
        """One row per member vector."""
        return cls.from_rows([v.coords for v in vs], cols=vs.dim)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]


def rank(m: Matrix) -> int:
    """Rank by rational Gaussian elimination."""
    a = m.to_lists()
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pr = a[r]
        for i in range(r + 1, m.rows):
            if a[i][c] != 0:
                f = a[i][c] / pr[c]
                row = a[i]
                for j in range(c, m.cols):
                    row[j] -= f * pr[j]
        r += 1
        if r == m.rows:
            break
    return r
