"""Polynomial toolkit and real algebraic numbers, checked against sympy."""

import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from drgcheck import poly
from drgcheck.algebraic import AlgebraicNumber, real_roots

x = sympy.Symbol("x")


def to_sympy(p):
    return sum(sympy.Rational(c) * x**i for i, c in enumerate(p))


def sympy_real_roots(p):
    return sorted(sympy.Poly(to_sympy(p), x).real_roots())


int_polys = st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda p: poly.trim(p) and poly.degree(p) >= 1)


def test_arithmetic_basics():
    p = [-1, 0, 1]  # x^2 - 1
    q = [1, 1]
    assert poly.mul(q, [-1, 1]) == p
    quo, rem = poly.divmod_poly(p, q)
    assert quo == [-1, 1] and rem == []
    assert poly.gcd([-1, 0, 1], [1, 2, 1]) == [1, 1]
    assert poly.derivative([5, 3, 2]) == [3, 4]
    assert poly.render([-1, 1, 1]) == "x^2 + x - 1"
    assert poly.evaluate([-1, 1, 1], Fraction(1, 2)) == Fraction(-1, 4)


@settings(max_examples=150, deadline=None)
@given(int_polys)
def test_root_count_matches_sympy(p):
    expected = len(set(sympy_real_roots(p)))
    squarefree = poly.primitive(poly.monic(poly.exact_div(p, poly.gcd(p, poly.derivative(p)))))
    seq = poly.sturm_sequence(squarefree)
    B = poly.root_bound(squarefree)
    assert poly.count_roots(seq, -B, B) == expected
    assert len(poly.isolate_real_roots(squarefree)) == expected


@settings(max_examples=150, deadline=None)
@given(int_polys)
def test_rational_roots_match_sympy(p):
    ours = sorted(set(poly.rational_roots(p)))
    theirs = sorted({Fraction(int(r.p), int(r.q)) for r in sympy_real_roots(p) if r.is_Rational})
    assert ours == theirs


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.lists(st.integers(-5, 5), min_size=2, max_size=3), st.integers(1, 3)),
                min_size=1, max_size=3))
def test_squarefree_decomposition_reassembles(factors):
    p = [1]
    for f, e in factors:
        if poly.degree(f) < 1:
            continue
        for _ in range(e):
            p = poly.mul(p, f)
    if poly.degree(p) < 1:
        return
    parts = poly.squarefree_decomposition(p)
    prod = [1]
    for f, e in parts:
        assert poly.is_squarefree(f)
        for _ in range(e):
            prod = poly.mul(prod, f)
    # equal up to a constant factor
    assert poly.monic(prod) == poly.monic(p)
    theirs = sympy.sqf_list(to_sympy(p))[1]
    assert sorted(e for _, e in parts) == sorted(e for _, e in theirs)


def test_irreducible_factors_against_sympy():
    p = poly.mul(poly.mul([-1, 1, 1], [-2, 0, 1]), [3, 1])
    ours = sorted(tuple(f) for f in poly.irreducible_factors(p))
    theirs = sorted(tuple(int(c) for c in reversed(sympy.Poly(f, x).all_coeffs()))
                    for f, _ in sympy.factor_list(to_sympy(p))[1])
    assert ours == theirs


@settings(max_examples=80, deadline=None)
@given(int_polys)
def test_real_roots_agree_with_sympy(p):
    ours = real_roots(p)
    theirs = sorted(set(sympy_real_roots(p)))
    assert len(ours) == len(theirs)
    for a, r in zip(ours, theirs):
        enc = a.enclosure(60)
        val = sympy.Rational(enc.lo)
        assert abs(float(r.evalf(30)) - float(val)) < 1e-9
        assert a.floor() == int(sympy.floor(r))
    assert ours == sorted(ours)


def test_golden_ratio_root():
    phi = AlgebraicNumber.root_of([-1, -1, 1], 1, 2)
    assert str(phi) == "root(x^2 - x - 1 in [1, 2])"
    assert phi > Fraction(161, 100) and phi < Fraction(1619, 1000)
    assert phi.floor() == 1
    assert (-phi).floor() == -2
    assert phi.to_json() == {"minpoly": ["1", "-1", "-1"], "interval": ["1", "2"]}
    with pytest.raises(ValueError):
        AlgebraicNumber.root_of([-1, -1, 1], -1, 2)  # two roots inside


def test_mobius_images_are_exact():
    r5 = AlgebraicNumber.root_of([-5, 0, 1], 2, 3)  # sqrt(5)
    img = r5.mobius(1, 1, 0, 2)  # (sqrt5 + 1) / 2
    phi = AlgebraicNumber.root_of([-1, -1, 1], 1, 2)
    assert img == phi
    # 1 - k/theta with theta = -sqrt5, k = 2
    neg = -r5
    d = neg.mobius(1, -2, 1, 0)
    assert abs(float(d) - (1 + 2 / math.sqrt(5))) < 1e-12
    assert AlgebraicNumber.rational(Fraction(3, 2)).mobius(2, 0, 0, 1) == 3


def test_compare_rational_against_irrational():
    r2 = AlgebraicNumber.root_of([-2, 0, 1], 1, 2)
    assert r2 > Fraction(14142, 10000) and r2 < Fraction(14143, 10000)
    assert r2 != Fraction(3, 2)
    assert AlgebraicNumber.rational(2) == 2
    assert sorted([r2, AlgebraicNumber.rational(1), AlgebraicNumber.rational(2)])[1] is r2
