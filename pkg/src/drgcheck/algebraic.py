"""Real algebraic numbers: exact rationals or (minimal polynomial, isolating interval)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from . import poly
from .arith import Interval, Number, as_fraction, fmt


@dataclass(frozen=True, eq=False)
class AlgebraicNumber:
    """A real algebraic number.

    Rational values carry ``value``.  Irrational ones carry an irreducible,
    primitive integer ``minpoly`` (constant term first) and an open interval
    ``(lo, hi)`` with rational endpoints containing exactly one of its roots.
    Endpoints are never roots because the minimal polynomial has degree >= 2.
    """

    value: Optional[Fraction] = None
    minpoly: Tuple[int, ...] = ()
    lo: Fraction = Fraction(0)
    hi: Fraction = Fraction(0)
    _sturm: tuple = field(default=(), repr=False, compare=False)

    @classmethod
    def rational(cls, x: Number) -> "AlgebraicNumber":
        x = as_fraction(x)
        return cls(value=x, minpoly=tuple(poly.primitive([-x, 1])), lo=x, hi=x)

    @classmethod
    def root_of(cls, minpoly, lo: Number, hi: Number) -> "AlgebraicNumber":
        mp = tuple(poly.primitive(minpoly))
        if poly.degree(mp) < 2:
            raise ValueError("use AlgebraicNumber.rational for degree-1 minimal polynomials")
        seq = tuple(tuple(q) for q in poly.sturm_sequence(list(mp)))
        lo, hi = as_fraction(lo), as_fraction(hi)
        if poly.count_roots(seq, lo, hi) != 1:
            raise ValueError(f"interval ({lo}, {hi}] does not isolate a single root")
        return cls(value=None, minpoly=mp, lo=lo, hi=hi, _sturm=seq)

    @property
    def is_rational(self) -> bool:
        return self.value is not None

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def interval(self, width: Number = 0) -> Interval:
        """Enclosing interval refined by bisection to at most ``width``."""
        if self.is_rational:
            return Interval.point(self.value)
        lo, hi = self.lo, self.hi
        shi = poly.sign_at(self.minpoly, hi)
        while hi - lo > width:
            mid = (lo + hi) / 2
            if poly.sign_at(self.minpoly, mid) == shi:
                hi = mid
            else:
                lo = mid
        return Interval(lo, hi)

    def enclosure(self, bits: int) -> Interval:
        return self.interval(Fraction(1, 1 << bits))

    def __float__(self) -> float:
        if self.is_rational:
            return float(self.value)
        return float(self.interval(Fraction(1, 1 << 60)).mid)

    def _excludes(self, x: Fraction) -> Interval:
        """Refine until ``x`` lies strictly outside; valid only for irrational self."""
        width = self.hi - self.lo
        iv = Interval(self.lo, self.hi)
        while iv.lo <= x <= iv.hi:
            width /= 2
            iv = self.interval(width)
        return iv

    def compare(self, other: "AlgebraicNumber | Number") -> int:
        """Exact three-way comparison (-1, 0, 1)."""
        if not isinstance(other, AlgebraicNumber):
            other = AlgebraicNumber.rational(other)
        if self.is_rational and other.is_rational:
            return _sign(self.value - other.value)
        if self.is_rational:
            return -other.compare(self)
        if other.is_rational:
            iv = self._excludes(other.value)
            return 1 if iv.lo > other.value else -1
        if self.minpoly == other.minpoly:
            lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
            seq = self._sturm or poly.sturm_sequence(list(self.minpoly))
            if poly.count_roots(seq, lo, hi) == 1:
                return 0
        a, b = Interval(self.lo, self.hi), Interval(other.lo, other.hi)
        width = max(a.width, b.width)
        while not (a.hi < b.lo or b.hi < a.lo):
            width /= 2
            a, b = self.interval(width), other.interval(width)
        return 1 if a.lo > b.hi else -1

    def __eq__(self, other):
        if not isinstance(other, (AlgebraicNumber, int, Fraction)):
            return NotImplemented
        return self.compare(other) == 0

    def __hash__(self):
        return hash(self.value) if self.is_rational else hash(self.minpoly)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def floor(self) -> int:
        if self.is_rational:
            return math.floor(self.value)
        width = self.hi - self.lo
        iv = Interval(self.lo, self.hi)
        while math.floor(iv.lo) != math.floor(iv.hi):
            width /= 2
            iv = self.interval(width)
        return math.floor(iv.lo)

    def mobius(self, a: Number, b: Number, c: Number, d: Number) -> "AlgebraicNumber":
        """Image under ``x -> (a x + b) / (c x + d)`` (requires ``ad - bc != 0``)."""
        a, b, c, d = map(as_fraction, (a, b, c, d))
        if a * d - b * c == 0:
            raise ValueError("degenerate Mobius map")
        if self.is_rational:
            den = c * self.value + d
            if den == 0:
                raise ZeroDivisionError("Mobius pole at this value")
            return AlgebraicNumber.rational((a * self.value + b) / den)
        # x = (d y - b) / (a - c y); clear denominators in minpoly(x).
        num, den = [-b, d], [a, -c]
        deg = self.degree
        q: List = []
        for j, coef in enumerate(self.minpoly):
            term = poly.mul(_power(num, j), _power(den, deg - j))
            q = poly.add(q, poly.scale(term, coef))
        iv = Interval(self.lo, self.hi)
        if c != 0:
            pole = -d / c
            if iv.lo <= pole <= iv.hi:
                iv = self._excludes(pole)
        ends = sorted((a * x + b) / (c * x + d) for x in (iv.lo, iv.hi))
        return AlgebraicNumber.root_of(q, ends[0], ends[1])

    def __neg__(self):
        return self.mobius(-1, 0, 0, 1)

    def to_json(self):
        if self.is_rational:
            return fmt(self.value)
        return {
            "minpoly": [str(x) for x in reversed(self.minpoly)],
            "interval": [fmt(self.lo), fmt(self.hi)],
        }

    def __str__(self):
        if self.is_rational:
            return fmt(self.value)
        return f"root({poly.render(self.minpoly)} in [{fmt(self.lo)}, {fmt(self.hi)}])"

    __repr__ = __str__


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _power(p, e: int):
    out = [1]
    for _ in range(e):
        out = poly.mul(out, p)
    return out


def real_roots(p) -> List[AlgebraicNumber]:
    """Distinct real roots of a nonzero polynomial, ascending.

    Rational roots are extracted exactly; the rational-root-free cofactor is
    split into irreducible factors whose roots get Sturm isolating intervals.
    """
    p = poly.primitive(p)
    if poly.degree(p) < 1:
        return []
    sqf = poly.primitive(poly.exact_div(p, poly.gcd(p, poly.derivative(p))))
    rats = poly.rational_roots(sqf)
    roots = [AlgebraicNumber.rational(r) for r in rats]
    rest: list = sqf
    for r in rats:
        rest = poly.exact_div(rest, [-r, 1])
    if poly.degree(rest) >= 2:
        for f in poly.irreducible_factors(rest):
            for lo, hi in poly.isolate_real_roots(f):
                roots.append(AlgebraicNumber.root_of(f, lo, hi))
    return sorted(roots)
