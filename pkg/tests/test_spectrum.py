import importlib
from fractions import Fraction

import numpy as np
import pytest
import sympy

from drgcheck.arith import Interval
from drgcheck.params import Status, derive_parameters, parse_array
from drgcheck.spectrum import (
    SpectrumError,
    build_intersection_matrix,
    characteristic_polynomial,
    isolate_eigenvalues,
    multiplicity,
    spectrum,
    standard_sequence,
    terminal_residual,
    trace_check,
    trace_identities,
)

from conftest import random_arrays

spec_mod = importlib.import_module("drgcheck.spectrum")
lam = sympy.Symbol("lam")
PINNED = derive_parameters(parse_array("80,54,12;1,6,60"))


def expand(roots):
    p = sympy.Poly(sympy.prod([lam - r for r in roots]), lam)
    return [int(c) for c in reversed(p.all_coeffs())]


def test_intersection_matrix_rows_sum_to_k():
    M = build_intersection_matrix(PINNED)
    assert M.dense() == [[0, 80, 0, 0], [1, 25, 54, 0], [0, 6, 62, 12], [0, 0, 60, 20]]
    assert M.row_sums() == [80] * 4


def test_pinned_charpoly_is_product_of_linear_factors():
    p = characteristic_polynomial(build_intersection_matrix(PINNED))
    assert p == expand([80, 26, 5, -4])
    assert p == [-41600, 40, 2166, -107, 1]


@pytest.mark.parametrize("text", ["3,2;1,1", "10,6,4;1,2,5", "7,6,4,4;1,1,1,6", "4,2,2,2;1,1,1,2", "5;1"])
def test_charpoly_matches_sympy_determinant(text):
    d = derive_parameters(parse_array(text))
    M = build_intersection_matrix(d)
    p = sympy.Matrix(M.dense()).charpoly(lam)
    assert characteristic_polynomial(M) == [int(c) for c in reversed(p.all_coeffs())]


def test_standard_sequences_of_pinned_array():
    assert standard_sequence(PINNED, Fraction(-4)) == [1, Fraction(-1, 20), Fraction(1, 120), Fraction(-1, 48)]
    assert standard_sequence(PINNED, Fraction(26)) == [1, Fraction(13, 40), Fraction(-1, 80), Fraction(-1, 8)]
    for theta, weight in ((-4, Fraction(21, 16)), (26, Fraction(189, 16))):
        u = standard_sequence(PINNED, Fraction(theta))
        assert sum(k * x * x for k, x in zip(PINNED.k_dist, u)) == weight
        assert terminal_residual(PINNED, Fraction(theta)) == 0
    assert terminal_residual(PINNED, Fraction(3)) != 0


def test_pinned_spectrum():
    s = spectrum(PINNED)
    assert s.as_dict() == {80: 1, 26: 80, 5: 144, -4: 720}
    assert [int(t.value) for t in s.eigenvalues] == [80, 26, 5, -4]
    assert s.theta_1 == 26 and s.theta_min == -4
    assert str(s) == "{80:1, 26:80, 5:144, -4:720}"


def test_pentagon_has_irrational_spectrum():
    s = spectrum(derive_parameters(parse_array("2,1;1,1")))
    assert s.multiplicities == [1, 2, 2]
    assert not s.theta_1.is_rational
    assert s.theta_1.minpoly == (-1, 1, 1)
    assert abs(float(s.theta_1) - (5 ** 0.5 - 1) / 2) < 1e-12
    assert abs(float(s.theta_min) + (5 ** 0.5 + 1) / 2) < 1e-12


def test_eigenvalues_match_numpy():
    for arr in random_arrays(60, seed=11, max_k=15):
        d = derive_parameters(arr)
        ours = [float(t) for t in isolate_eigenvalues(characteristic_polynomial(build_intersection_matrix(d)))]
        theirs = sorted(np.linalg.eigvals(np.array(build_intersection_matrix(d).dense(), dtype=float)).real,
                        reverse=True)
        assert np.allclose(ours, theirs, atol=1e-7)


def test_non_integral_multiplicities_fail():
    with pytest.raises(SpectrumError) as info:
        spectrum(derive_parameters(parse_array("13,4;1,13")))
    assert {c.status for c in info.value.checks} == {Status.FAIL}
    with pytest.raises(SpectrumError) as info:
        spectrum(derive_parameters(parse_array("22,6;1,3")))
    assert any("root(" in c.witnesses.get("theta", "") for c in info.value.checks)


def test_precision_cap_gives_inconclusive(monkeypatch):
    d = derive_parameters(parse_array("2,1;1,1"))
    theta = isolate_eigenvalues(characteristic_polynomial(build_intersection_matrix(d)))[1]
    monkeypatch.setattr(spec_mod, "formal_multiplicity", lambda *a: Interval(Fraction(3, 2), Fraction(7, 2)))
    with pytest.raises(SpectrumError) as info:
        multiplicity(d, theta, precision_bits=64)
    (chk,) = info.value.checks
    assert chk.status is Status.INCONCLUSIVE and chk.witnesses["bits"] == "64"


def test_trace_identities_exact_on_pinned_array():
    res = trace_identities(PINNED)
    assert res["sum_m"] == (Interval.point(945), 945)
    assert res["sum_m_theta"] == (Interval.point(0), 0)
    assert res["sum_m_theta2"] == (Interval.point(945 * 80), 945 * 80)
    assert trace_check(PINNED, spectrum(PINNED)).status is Status.PASS


def test_trace_identities_with_formal_multiplicities():
    # holds even when multiplicities are not integers
    d = derive_parameters(parse_array("22,6;1,3"))
    for enc, target in trace_identities(d).values():
        assert enc.contains(target)
