"""Dense univariate polynomials over Q and exact real-root machinery.

Polynomials are coefficient lists ordered from the constant term upward
(``[c0, c1, ..., cd]``); entries are ``int`` or ``Fraction``.  The zero
polynomial is ``[]``.  Serialized forms (``minpoly`` in reports) use the
reverse, highest-degree-first order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import List, Sequence, Tuple

from .arith import Number, as_fraction

Poly = List[Number]


def trim(p: Sequence[Number]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence[Number]) -> int:
    return len(trim(p)) - 1


def add(p, q) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q) -> Poly:
    return add(p, scale(q, -1))


def scale(p, c) -> Poly:
    return trim([c * a for a in p])


def mul(p, q) -> Poly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def evaluate(p, x):
    """Horner evaluation; ``x`` may be a number or an :class:`Interval`."""
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def derivative(p) -> Poly:
    return trim([i * p[i] for i in range(1, len(p))])


def divmod_poly(p, q) -> Tuple[Poly, Poly]:
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [as_fraction(a) for a in trim(p)]
    lead = as_fraction(q[-1])
    dq = len(q) - 1
    quot = [Fraction(0)] * max(len(r) - dq, 0)
    while len(r) - 1 >= dq and r:
        shift = len(r) - 1 - dq
        c = r[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            r[i + shift] -= c * b
        r = trim(r)
    return trim(quot), r


def exact_div(p, q) -> Poly:
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ArithmeticError("polynomial division is not exact")
    return quot


def monic(p) -> Poly:
    p = trim(p)
    return [as_fraction(a) / p[-1] for a in p] if p else []


def gcd(p, q) -> Poly:
    """Monic gcd over Q."""
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def primitive(p) -> List[int]:
    """Scale to coprime integer coefficients with positive leading term."""
    p = [as_fraction(a) for a in trim(p)]
    if not p:
        return []
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (a.denominator for a in p), 1)
    ints = [int(a * den) for a in p]
    g = reduce(math.gcd, (abs(a) for a in ints))
    ints = [a // g for a in ints]
    if ints[-1] < 0:
        ints = [-a for a in ints]
    return ints


def squarefree_decomposition(p) -> List[Tuple[List[int], int]]:
    """Yun's algorithm: ``p = lc * prod f_i**i`` with each ``f_i`` squarefree.

    Returns ``[(f_i, i), ...]`` for the non-constant factors, each ``f_i``
    primitive with integer coefficients.
    """
    p = trim(p)
    if degree(p) < 1:
        return []
    out = []
    dp = derivative(p)
    a = gcd(p, dp)
    b = exact_div(p, a)
    c = exact_div(dp, a)
    d = sub(c, derivative(b))
    i = 1
    while degree(b) > 0:
        a = gcd(b, d)
        if degree(a) > 0:
            out.append((primitive(a), i))
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = sub(c, derivative(b))
        i += 1
    return out


def is_squarefree(p) -> bool:
    return degree(gcd(p, derivative(p))) == 0


def root_bound(p) -> Fraction:
    """Cauchy bound: every complex root has modulus below the returned value."""
    p = [as_fraction(a) for a in trim(p)]
    lead = abs(p[-1])
    return 1 + max((abs(a) / lead for a in p[:-1]), default=Fraction(0))


def _integral(p) -> List[int]:
    """Positive multiple of ``p`` with coprime integer coefficients (signs kept)."""
    p = [as_fraction(a) for a in trim(p)]
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (a.denominator for a in p), 1)
    ints = [int(a * den) for a in p]
    g = reduce(math.gcd, (abs(a) for a in ints), 0) or 1
    return [a // g for a in ints]


def sturm_sequence(p) -> List[List[int]]:
    """Sturm chain, each term rescaled by a positive constant to integers."""
    seq = [_integral(p), _integral(derivative(p))]
    while degree(seq[-1]) > 0:
        r = divmod_poly(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(_integral(scale(r, -1)))
    return seq


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_at(p: Sequence[int], x: Number) -> int:
    """Sign of an integer polynomial at a rational point, in integer arithmetic.

    Evaluates ``q^d p(r/q) = sum a_i r^i q^(d-i)`` by Horner with ``q > 0``.
    """
    x = as_fraction(x)
    r, q = x.numerator, x.denominator
    acc, qp = 0, 1
    for a in reversed(p):
        acc = acc * r + a * qp
        qp *= q
    return _sign(acc)


def sign_variations(seq: Sequence[Poly], x: Number) -> int:
    signs = [s for s in (sign_at(q, x) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: Sequence[Poly], lo: Number, hi: Number) -> int:
    """Distinct real roots in the half-open interval ``(lo, hi]``."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def isolate_real_roots(p) -> List[Tuple[Fraction, Fraction]]:
    """Isolating half-open intervals ``(lo, hi]`` for the real roots of squarefree ``p``.

    Returned in ascending order; each interval holds exactly one root.
    """
    p = trim(p)
    if degree(p) < 1:
        return []
    seq = sturm_sequence(p)
    bound = root_bound(p)
    stack = [(-bound, bound)]
    found = []
    while stack:
        lo, hi = stack.pop()
        n = count_roots(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(found)


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p) -> List[Fraction]:
    """All rational roots of ``p``, ascending, without multiplicity.

    Candidates ``r/q`` need ``q`` dividing the leading coefficient (rational
    root test); real roots are first isolated with Sturm sequences so only
    the few candidates inside each isolating interval are evaluated.
    """
    p = primitive(p)
    if degree(p) < 1:
        return []
    if p[0] == 0:
        k = next(i for i, a in enumerate(p) if a != 0)
        rest = rational_roots(p[k:])
        return sorted(set(rest) | {Fraction(0)})
    sqf = primitive(exact_div(p, gcd(p, derivative(p))))
    dens = _divisors(sqf[-1])
    roots = []
    for lo, hi in isolate_real_roots(sqf):
        if sign_at(sqf, hi) == 0:
            roots.append(hi)
            continue
        lo, hi = _refine(sqf, lo, hi, Fraction(1, dens[-1] + 1))
        if isinstance(lo, Fraction) and lo == hi:
            roots.append(lo)
            continue
        for q in dens:
            for num in range(math.floor(lo * q), math.ceil(hi * q) + 1):
                cand = Fraction(num, q)
                if lo < cand < hi and sign_at(sqf, cand) == 0:
                    roots.append(cand)
    return sorted(set(roots))


def _refine(p, lo: Fraction, hi: Fraction, width: Fraction):
    """Bisect ``(lo, hi]`` (one simple root, ``p(hi) != 0``) down to ``width``.

    If a midpoint hits the root exactly, returns the degenerate ``(r, r)``.
    """
    shi = sign_at(p, hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = sign_at(p, mid)
        if s == 0:
            return mid, mid
        if s == shi:
            hi = mid
        else:
            lo = mid
    return lo, hi


def irreducible_factors(p) -> List[List[int]]:
    """Irreducible factors over Z of a squarefree integer polynomial."""
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(primitive(p))), x, domain="ZZ")
    _, factors = poly.factor_list()
    out = []
    for f, _mult in factors:
        coeffs = [int(a) for a in reversed(f.all_coeffs())]
        if degree(coeffs) >= 1:
            out.append(primitive(coeffs))
    return out


def render(p, var: str = "x") -> str:
    """Human-readable form, e.g. ``x^2 + x - 1``."""
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        a = as_fraction(p[i])
        if a == 0:
            continue
        mag = abs(a)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        coef = str(mag) if (mag != 1 or not mono) else ""
        term = coef + mono
        if not parts:
            parts.append(("-" if a < 0 else "") + term)
        else:
            parts.append(("- " if a < 0 else "+ ") + term)
    return " ".join(parts)

