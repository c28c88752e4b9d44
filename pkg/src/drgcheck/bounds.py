"""Inequality battery: claw bounds, clique bounds and quotient-matrix interlacing.

Every comparison is exact.  Irrational quantities (for instance a Delsarte
bound built from an irrational smallest eigenvalue) are carried as
:class:`~drgcheck.algebraic.AlgebraicNumber` values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from .algebraic import AlgebraicNumber
from .arith import Number, ceil, fmt
from .params import CheckResult, DerivedParameters, Scope, Status, witness

Exact = Union[Fraction, AlgebraicNumber]


def _alg(x) -> AlgebraicNumber:
    return x if isinstance(x, AlgebraicNumber) else AlgebraicNumber.rational(x)


def _exact(x: AlgebraicNumber) -> Exact:
    return x.value if x.is_rational else x


def _render(x: Exact) -> str:
    return fmt(x) if isinstance(x, (int, Fraction)) else str(x)


@dataclass(frozen=True)
class DelsarteBound:
    value: Exact
    floor: int
    local_floor: int


def delsarte_clique_bound(k: int, theta_min: Exact | Number) -> DelsarteBound:
    """Clique size bound ``1 - k/theta_min``, its floor, and the floor minus one
    that bounds cliques inside a local graph."""
    theta = _alg(theta_min)
    if theta >= -1:
        raise ValueError(f"smallest eigenvalue {theta} must be below -1")
    # 1 - k/x = (x - k) / x
    bound = theta.mobius(1, -k, 1, 0)
    fl = bound.floor()
    return DelsarteBound(_exact(bound), fl, fl - 1)


def delsarte_check(k: int, theta_min) -> CheckResult:
    try:
        res = delsarte_clique_bound(k, theta_min)
    except ValueError as err:
        return CheckResult("delsarte_clique", Status.NOT_APPLICABLE, {}, str(err), Scope.INFORMATIONAL)
    return CheckResult(
        "delsarte_clique", Status.PASS,
        {"bound": _render(res.value), "floor": str(res.floor), "local_floor": str(res.local_floor)},
        f"cliques have at most {res.floor} vertices; local cliques at most {res.local_floor}",
        Scope.INFORMATIONAL)


def claw_lhs(n: int, k: int, s: int) -> Fraction:
    """``((k+1)s - n) / C(s,2)``."""
    return Fraction((k + 1) * s - n, math.comb(s, 2))


def _claw_status(n: int, k: int, c: int, s: int) -> Status:
    # integer-only form: 2((k+1)s - n) vs c s (s-1)
    lhs, rhs = 2 * ((k + 1) * s - n), c * s * (s - 1)
    return Status.PASS if lhs < rhs else Status.EQUALITY if lhs == rhs else Status.FAIL


def claw_bound(n: int, k: int, c: int, s: int, *, check_id: str = "claw_global",
               c_name: str = "c", scope: Scope = Scope.UNCONDITIONAL) -> CheckResult:
    """Claw bound for an ``s``-coclique in a ``k``-regular graph on ``n`` vertices
    whose non-adjacent pairs have at most ``c`` common neighbours.

    FAIL means no coclique of size ``s`` (hence none larger) can exist.
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    lhs = claw_lhs(n, k, s)
    status = _claw_status(n, k, c, s)
    rel = {Status.PASS: "<", Status.EQUALITY: "=", Status.FAIL: ">"}[status]
    msg = f"s={s}: ((k+1)s-n)/C(s,2) = {fmt(lhs)} {rel} {c_name} = {c}"
    if status is Status.FAIL:
        msg += f"; no {s}-coclique"
    return CheckResult(check_id, status, {"s": str(s), "lhs": fmt(lhs), c_name: str(c)}, msg, scope)


def min_maximal_local_coclique(derived: DerivedParameters) -> int:
    """Every maximal coclique of a local graph has at least ``ceil(k/(a_1+1))`` vertices."""
    return ceil(Fraction(derived.k, derived.a[1] + 1))


def local_claw_bound(derived: DerivedParameters, s: int) -> CheckResult:
    """Claw bound inside a local graph: ``(n, k, c) := (k, a_1, c_2 - 1)``.

    A FAIL at ``s <= ceil(k/(a_1+1))`` is an obstruction, because every
    maximal local coclique has at least that many vertices; larger FAILs only
    bound the local independence number.
    """
    if derived.diameter < 2:
        return CheckResult("claw_local", Status.NOT_APPLICABLE, {"s": str(s)}, "requires diameter >= 2",
                           Scope.INFORMATIONAL)
    forced = s <= min_maximal_local_coclique(derived)
    return claw_bound(derived.k, derived.a[1], derived.c(2) - 1, s, check_id="claw_local",
                      c_name="c_minus_1", scope=Scope.UNCONDITIONAL if forced else Scope.INFORMATIONAL)


def local_claw_scan(derived: DerivedParameters, max_s: int | None = None) -> List[CheckResult]:
    """Scan ``s = 2..max_s``; keeps every EQUALITY row, the first FAIL, and
    every row in the forced range ``s <= ceil(k/(a_1+1))``."""
    if derived.diameter < 2:
        return [local_claw_bound(derived, 2)]
    forced = min_maximal_local_coclique(derived)
    if max_s is None:
        max_s = max(derived.a[1] + 2, forced)
    rows = []
    for s in range(2, max_s + 1):
        row = local_claw_bound(derived, s)
        if row.status is Status.FAIL:
            rows.append(row)
            break
        if row.status is Status.EQUALITY or s <= forced:
            rows.append(row)
    return rows


def global_claw_check(derived: DerivedParameters) -> CheckResult:
    """Claw bound in the whole graph at the forced size ``ceil(n/(k+1))``
    (every maximal coclique is at least that large); ``c := c_2``."""
    if derived.diameter < 2:
        return CheckResult("claw_global", Status.NOT_APPLICABLE, {}, "requires diameter >= 2",
                           Scope.INFORMATIONAL)
    n = int(derived.n)
    s = max(2, ceil(Fraction(n, derived.k + 1)))
    return claw_bound(n, derived.k, derived.c(2), s)


def coclique_mu_sum_lower_bound(n: int, k: int, s: int) -> int:
    """Lower bound ``max(0, s(k+1) - n)`` on the sum of pairwise common-neighbour
    counts over an ``s``-coclique of a ``k``-regular graph on ``n`` vertices."""
    if s < 2:
        raise ValueError("s must be at least 2")
    return max(0, s * (k + 1) - n)


def mu_sum_check(n: int, k: int, s: int) -> CheckResult:
    val = coclique_mu_sum_lower_bound(n, k, s)
    return CheckResult("mu_sum", Status.PASS, {"s": str(s), "bound": str(val)},
                       f"pairwise mu over a coclique of size {s} sums to at least {val}", Scope.INFORMATIONAL)


def local_min_eigenvalue_bound(theta_1: Exact | Number, b_1: int) -> Exact:
    """Lower bound ``-1 - b_1/(theta_1 + 1)`` on the smallest local eigenvalue."""
    theta = _alg(theta_1)
    if theta == -1:
        raise ValueError("theta_1 = -1 (division by zero)")
    if theta < -1:
        raise ValueError("theta_1 must exceed -1")
    # -1 - b/(x+1) = (-x - 1 - b) / (x + 1)
    return _exact(theta.mobius(-1, -1 - b_1, 1, 1))


def local_min_eig_check(derived: DerivedParameters, theta_1) -> CheckResult:
    if derived.diameter < 2:
        return CheckResult("local_min_eig", Status.NOT_APPLICABLE, {}, "requires diameter >= 2",
                           Scope.INFORMATIONAL)
    val = local_min_eigenvalue_bound(theta_1, derived.b(1))
    return CheckResult("local_min_eig", Status.PASS, {"theta_1": _render(_exact(_alg(theta_1))),
                                                       "b_1": str(derived.b(1)), "bound": _render(val)},
                       f"local graphs have smallest eigenvalue >= {_render(val)}", Scope.INFORMATIONAL)


@dataclass(frozen=True)
class QuotientMatrix:
    """Two-cell quotient for cliques of sizes ``v1``, ``v2`` meeting in ``m`` vertices.

    Row/column 1 is the intersection ``I``; row/column 2 is ``(C1 u C2) \\ I``.
    """

    q11: Fraction
    q12: Fraction
    q21: Fraction
    q22: Fraction

    @property
    def trace(self) -> Fraction:
        return self.q11 + self.q22

    @property
    def det(self) -> Fraction:
        return self.q11 * self.q22 - self.q12 * self.q21

    def charpoly_at(self, x: Fraction) -> Fraction:
        return x * x - self.trace * x + self.det

    def rows(self):
        return [[self.q11, self.q12], [self.q21, self.q22]]


def quotient_matrix(v1: int, v2: int, m: int) -> QuotientMatrix:
    if m < 1 or v1 <= m or v2 <= m:
        raise ValueError(f"degenerate partition: need v1, v2 > m >= 1 (got {v1}, {v2}, {m})")
    rest = v1 + v2 - 2 * m
    q22 = Fraction((v1 - m) * (v1 - m - 1) + (v2 - m) * (v2 - m - 1), rest)
    return QuotientMatrix(Fraction(m - 1), Fraction(rest), Fraction(m), q22)


def clique_intersection_interlacing(v1: int, v2: int, m: int, threshold: Number) -> CheckResult:
    """FAIL when the smallest quotient eigenvalue is below ``threshold``.

    Decided by the sign of ``p(threshold)`` for ``p(x) = x^2 - t x + d`` and a
    comparison of ``t/2`` with the threshold; no square roots are taken.
    """
    Q = quotient_matrix(v1, v2, m)
    thr = Fraction(threshold)
    p = Q.charpoly_at(thr)
    half = Q.trace / 2
    if p < 0 or (p >= 0 and half < thr):
        status = Status.FAIL
    elif p == 0:
        status = Status.EQUALITY
    else:
        status = Status.PASS
    wit = witness(v1=v1, v2=v2, m=m, threshold=thr, trace=Q.trace, det=Q.det, p_at_threshold=p)
    rel = {Status.FAIL: "<", Status.EQUALITY: "=", Status.PASS: ">"}[status]
    return CheckResult("interlace_pair", status, wit,
                       f"({v1},{v2}) sharing {m}: lambda_min(Q) {rel} {fmt(thr)}", Scope.INFORMATIONAL)


def quotient_scan(m: int, v_lo: int, v_hi: int, threshold: Number) -> List[CheckResult]:
    """All pairs ``v_lo <= v1 <= v2 <= v_hi``, ordered by ``(v1, v2)``, then a
    summary ``interlace_scan`` row (FAIL iff every pair FAILs)."""
    if v_lo <= m:
        raise ValueError("v_lo must exceed m")
    rows = [clique_intersection_interlacing(v1, v2, m, threshold)
            for v1 in range(v_lo, v_hi + 1) for v2 in range(v1, v_hi + 1)]
    if not rows:
        return []
    failed = sum(r.status is Status.FAIL for r in rows)
    all_fail = failed == len(rows)
    rows.append(CheckResult(
        "interlace_scan", Status.FAIL if all_fail else Status.PASS,
        witness(m=m, v_lo=v_lo, v_hi=v_hi, threshold=Fraction(threshold), pairs=len(rows), failed=failed),
        f"{failed}/{len(rows)} clique pairs in [{v_lo},{v_hi}] sharing {m} vertices violate interlacing",
        Scope.INFORMATIONAL))
    return rows


def equality_case_nonneighbor_count(n: int, k: int, c: int, s: int) -> int:
    """Vertices adjacent to none of ``s`` coclique vertices under claw-bound equality.

    In the equality case every pair of the coclique has exactly ``c`` common
    neighbours and no vertex sees three of them, so inclusion-exclusion stops
    at pairs: ``n - s(k+1) + C(s,2) c``.  A negative count is returned as is;
    :func:`eq_case_check` turns it into a FAIL.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    return n - s * (k + 1) + math.comb(s, 2) * c


def eq_case_check(n: int, k: int, c: int, s: int) -> CheckResult:
    N = equality_case_nonneighbor_count(n, k, c, s)
    status = Status.FAIL if N < 0 else Status.PASS
    return CheckResult("eq_case_count", status, {"s": str(s), "count": str(N)},
                       f"{N} vertices non-adjacent to all {s} coclique vertices", Scope.INFORMATIONAL)
