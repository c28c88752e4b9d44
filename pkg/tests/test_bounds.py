import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from drgcheck.algebraic import AlgebraicNumber
from drgcheck.bounds import (
    claw_bound,
    claw_lhs,
    clique_intersection_interlacing,
    coclique_mu_sum_lower_bound,
    delsarte_clique_bound,
    eq_case_check,
    equality_case_nonneighbor_count,
    global_claw_check,
    local_claw_bound,
    local_claw_scan,
    local_min_eigenvalue_bound,
    quotient_matrix,
    quotient_scan,
)
from drgcheck.params import Scope, Status, derive_parameters, parse_array

PINNED = derive_parameters(parse_array("80,54,12;1,6,60"))


@pytest.mark.parametrize("k, theta, value, floor", [
    (80, -4, 21, 21),
    (3, -3, 2, 2),
    (3, -2, Fraction(5, 2), 2),
])
def test_delsarte_examples(k, theta, value, floor):
    res = delsarte_clique_bound(k, theta)
    assert res.value == value and res.floor == floor and res.local_floor == floor - 1


def test_delsarte_irrational_and_errors():
    # pentagon: theta_min = -(1 + sqrt5)/2, so the bound is 1 + 4/(1 + sqrt5)
    theta = AlgebraicNumber.root_of([-1, 1, 1], -2, -1)
    res = delsarte_clique_bound(2, theta)
    assert res.floor == 2
    assert abs(float(res.value) - (1 + 4 / (1 + 5 ** 0.5))) < 1e-12
    with pytest.raises(ValueError):
        delsarte_clique_bound(5, -1)


@pytest.mark.parametrize("n, k, c, s, status, lhs", [
    (80, 25, 5, 5, Status.EQUALITY, Fraction(5)),
    (80, 25, 5, 6, Status.FAIL, Fraction(76, 15)),
    (10, 3, 1, 4, Status.EQUALITY, Fraction(1)),
])
def test_claw_examples(n, k, c, s, status, lhs):
    res = claw_bound(n, k, c, s)
    assert res.status is status
    assert Fraction(res.witnesses["lhs"]) == lhs
    assert res.witnesses["c"] == str(c)


def test_local_claw_examples():
    eq = local_claw_bound(PINNED, 5)
    assert eq.status is Status.EQUALITY and eq.witnesses == {"s": "5", "lhs": "5", "c_minus_1": "5"}
    # forced range is s <= ceil(80/26) = 4
    assert eq.scope is Scope.INFORMATIONAL
    assert local_claw_bound(PINNED, 4).scope is Scope.UNCONDITIONAL
    fail = local_claw_bound(PINNED, 6)
    assert fail.status is Status.FAIL and fail.witnesses["lhs"] == "76/15"
    cube = derive_parameters(parse_array("3,2,1;1,2,3"))
    assert local_claw_bound(cube, 3).status is Status.PASS


def test_local_claw_scan_on_pinned_array():
    rows = local_claw_scan(PINNED)
    # scan stops at the first FAIL
    assert [int(r.witnesses["s"]) for r in rows] == [2, 3, 4, 5, 6]
    assert [r.status for r in rows][-2:] == [Status.EQUALITY, Status.FAIL]
    assert rows[-1].scope is Scope.INFORMATIONAL


def test_global_claw_on_pinned_array():
    res = global_claw_check(PINNED)
    assert res.witnesses["s"] == "12" and res.witnesses["lhs"] == "9/22"
    assert res.status is Status.PASS


@given(st.integers(2, 50), st.integers(1, 9_999), st.integers(2, 10_000), st.integers(0, 200))
def test_integer_status_equals_rational_status(s, k, n, c):
    if not k < n:
        return
    lhs = claw_lhs(n, k, s)
    assert lhs == Fraction((k + 1) * s - n, s * (s - 1) // 2)
    expected = Status.PASS if lhs < c else Status.EQUALITY if lhs == c else Status.FAIL
    assert claw_bound(n, k, c, s).status is expected


def test_mu_sum_examples():
    assert coclique_mu_sum_lower_bound(80, 25, 4) == 24
    assert coclique_mu_sum_lower_bound(80, 25, 5) == 50 == math.comb(5, 2) * 5
    assert coclique_mu_sum_lower_bound(80, 25, 3) == 0


def test_local_min_eigenvalue_examples():
    assert local_min_eigenvalue_bound(26, 54) == -3
    assert local_min_eigenvalue_bound(1, 2) == -2  # cube and Petersen both have theta_1 = 1, b_1 = 2
    with pytest.raises(ValueError):
        local_min_eigenvalue_bound(-1, 3)


def test_quotient_examples():
    Q = quotient_matrix(11, 11, 5)
    assert (Q.trace, Q.det, Q.charpoly_at(-3)) == (9, -40, -4)
    assert clique_intersection_interlacing(11, 11, 5, -3).status is Status.FAIL
    Q = quotient_matrix(20, 20, 5)
    assert (Q.trace, Q.det) == (18, -94)
    assert clique_intersection_interlacing(20, 20, 5, -3).status is Status.FAIL
    assert quotient_matrix(6, 6, 5).rows() == [[4, 2], [5, 0]]
    assert clique_intersection_interlacing(6, 6, 5, -3).status is Status.PASS
    with pytest.raises(ValueError):
        quotient_matrix(5, 7, 5)


def _float_lambda_min(Q):
    t, d = float(Q.trace), float(Q.det)
    return t / 2 - math.sqrt(t * t / 4 - d)


def test_small_quotient_scan_against_numpy():
    rows = quotient_scan(1, 3, 4, -2)
    assert [(r.witnesses["v1"], r.witnesses["v2"]) for r in rows[:-1]] == [("3", "3"), ("3", "4"), ("4", "4")]
    # the stated formula gives [[0,4],[1,1]] for two triangles sharing a vertex
    assert quotient_matrix(3, 3, 1).rows() == [[0, 4], [1, 1]]
    for row in rows[:-1]:
        Q = quotient_matrix(int(row.witnesses["v1"]), int(row.witnesses["v2"]), 1)
        lam_min = min(np.linalg.eigvals(np.array(Q.rows(), dtype=float)).real)
        assert row.status is (Status.FAIL if lam_min < -2 else Status.PASS)
    assert rows[-1].check_id == "interlace_scan"


def test_interlacing_matches_float_quadratic_formula():
    rng = random.Random(4242)
    checked = 0
    for _ in range(1000):
        m = rng.randint(1, 48)
        v1 = rng.randint(m + 1, 50)
        v2 = rng.randint(v1, 50)
        thr = Fraction(rng.randint(-400, 100), rng.randint(1, 20))
        diff = _float_lambda_min(quotient_matrix(v1, v2, m)) - float(thr)
        if abs(diff) <= 1e-6:
            continue
        checked += 1
        status = clique_intersection_interlacing(v1, v2, m, thr).status
        assert status is (Status.FAIL if diff < 0 else Status.PASS), (v1, v2, m, thr)
    assert checked > 900


def test_pinned_scan_and_empty_range():
    rows = quotient_scan(5, 11, 20, -3)
    assert len(rows) == 56
    assert all(r.status is Status.FAIL for r in rows)
    assert rows[-1].witnesses["failed"] == "55"
    assert quotient_scan(5, 11, 10, -3) == []
    with pytest.raises(ValueError):
        quotient_scan(5, 5, 10, -3)


@pytest.mark.parametrize("s, count", [(1, 54), (2, 33), (3, 17), (4, 6)])
def test_equality_case_counts(s, count):
    assert equality_case_nonneighbor_count(80, 25, 5, s) == count


def test_equality_case_negative_is_fail():
    # s = 6 would need 80 - 156 + 75 = -1 vertices
    assert equality_case_nonneighbor_count(80, 25, 5, 6) == -1
    assert eq_case_check(80, 25, 5, 6).status is Status.FAIL


@given(st.integers(1, 10_000), st.integers(1, 500), st.integers(0, 100), st.integers(1, 60))
def test_equality_case_telescopes(n, k, c, s):
    diff = equality_case_nonneighbor_count(n, k, c, s) - equality_case_nonneighbor_count(n, k, c, s + 1)
    assert diff == (k + 1) - s * c
