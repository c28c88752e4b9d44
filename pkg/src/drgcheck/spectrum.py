"""Exact eigenvalues and multiplicities of the intersection matrix."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from . import poly
from .algebraic import AlgebraicNumber, real_roots
from .arith import Interval, fmt, is_integral
from .params import CheckResult, DerivedParameters, Status, witness

DEFAULT_PRECISION_BITS = 512


@dataclass(frozen=True)
class IntersectionMatrix:
    """Tridiagonal matrix whose row ``i`` is ``(c_i, a_i, b_i)``."""

    rows: Tuple[Tuple[Optional[int], int, Optional[int]], ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    def dense(self) -> List[List[int]]:
        n = self.order
        out = [[0] * n for _ in range(n)]
        for i, (c, a, b) in enumerate(self.rows):
            out[i][i] = a
            if c is not None:
                out[i][i - 1] = c
            if b is not None:
                out[i][i + 1] = b
        return out

    def row_sums(self) -> List[int]:
        return [sum(x for x in row if x is not None) for row in self.rows]


def build_intersection_matrix(derived: DerivedParameters) -> IntersectionMatrix:
    D = derived.diameter
    rows = []
    for i in range(D + 1):
        rows.append((derived.c(i) if i > 0 else None, derived.a[i], derived.b(i) if i < D else None))
    return IntersectionMatrix(tuple(rows))


def characteristic_polynomial(M: IntersectionMatrix) -> List[int]:
    """``det(x I - M)`` via the tridiagonal three-term recurrence (constant term first)."""
    prev, cur = [1], [1]
    for i, (c, a, _b) in enumerate(M.rows):
        nxt = poly.mul([-a, 1], cur)
        if i > 0:
            b_prev = M.rows[i - 1][2]
            nxt = poly.sub(nxt, poly.scale(prev, b_prev * c))
        prev, cur = cur, nxt
    return [int(x) for x in cur]


class SpectrumError(Exception):
    """Raised when a spectrum cannot be certified; ``checks`` explain why."""

    def __init__(self, checks: List[CheckResult]):
        super().__init__("; ".join(ch.message for ch in checks))
        self.checks = checks


def isolate_eigenvalues(p: Sequence[int]) -> List[AlgebraicNumber]:
    """Distinct real roots of a squarefree characteristic polynomial, descending."""
    if not poly.is_squarefree(p):
        raise SpectrumError([CheckResult(
            "spectrum", Status.INCONCLUSIVE, {"charpoly": poly.render(p)},
            "characteristic polynomial is not squarefree")])
    roots = real_roots(p)
    if len(roots) != poly.degree(p):
        raise SpectrumError([CheckResult(
            "spectrum", Status.INCONCLUSIVE, {"charpoly": poly.render(p)},
            "characteristic polynomial has non-real roots")])
    return roots[::-1]


def standard_sequence(derived: DerivedParameters, theta) -> list:
    """``u_0..u_D`` for ``theta`` (a number, an :class:`Interval` or a polynomial).

    Polynomials (coefficient lists) give ``u_i`` as polynomials in ``x``.
    """
    D = derived.diameter
    is_poly = isinstance(theta, list)
    if is_poly:
        one, x = [Fraction(1)], theta
        u = [one, poly.scale(x, Fraction(1, derived.k))]
    else:
        u = [Fraction(1), theta / derived.k]
    for i in range(1, D):
        a, b, c = derived.a[i], derived.b(i), derived.c(i)
        if is_poly:
            nxt = poly.sub(poly.mul(poly.add(x, [-a]), u[i]), poly.scale(u[i - 1], c))
            u.append(poly.scale(nxt, Fraction(1, b)))
        else:
            u.append(((theta - a) * u[i] - c * u[i - 1]) / b)
    return u[: D + 1]


def terminal_residual(derived: DerivedParameters, theta: Fraction) -> Fraction:
    """``c_D u_{D-1} + a_D u_D - theta u_D``; zero exactly when theta is an eigenvalue."""
    D = derived.diameter
    u = standard_sequence(derived, theta)
    prev = u[D - 1] if D >= 1 else 0
    return derived.c(D) * prev + derived.a[D] * u[D] - theta * u[D]


def _weight_sum(derived: DerivedParameters, u) -> object:
    total = 0
    for kd, ui in zip(derived.k_dist, u):
        sq = ui.square() if isinstance(ui, Interval) else ui * ui
        total = total + kd * sq
    return total


def formal_multiplicity(derived: DerivedParameters, theta: AlgebraicNumber, bits: int = 64) -> Union[Fraction, Interval]:
    """``n / sum k_i u_i^2``: exact for rational theta, an enclosure otherwise."""
    if theta.is_rational:
        u = standard_sequence(derived, theta.value)
        return derived.n / _weight_sum(derived, u)
    iv = theta.enclosure(bits)
    s = _weight_sum(derived, standard_sequence(derived, iv))
    return derived.n / s


def _certify(derived: DerivedParameters, theta: AlgebraicNumber, m: int) -> bool:
    """Exact test of ``m * sum k_i u_i(theta)^2 == n`` in ``Q[x]/(minpoly)``."""
    u = standard_sequence(derived, [Fraction(0), Fraction(1)])
    s: list = []
    for kd, ui in zip(derived.k_dist, u):
        s = poly.add(s, poly.scale(poly.mul(ui, ui), kd))
    expr = poly.sub(poly.scale(s, m), [derived.n])
    return not poly.divmod_poly(expr, list(theta.minpoly))[1]


def multiplicity(derived: DerivedParameters, theta: AlgebraicNumber,
                 precision_bits: int = DEFAULT_PRECISION_BITS) -> int:
    """Multiplicity of eigenvalue ``theta``: ``n / sum_i k_i u_i(theta)^2``.

    Irrational eigenvalues are handled by refining the isolating interval
    until the enclosure of the multiplicity holds at most one integer; that
    candidate is then confirmed exactly modulo the minimal polynomial.

    Raises :class:`SpectrumError` carrying a FAIL check when the value is
    provably non-integral, or an INCONCLUSIVE one when ``precision_bits`` is
    exhausted.
    """
    label = str(theta)
    if theta.is_rational:
        m = formal_multiplicity(derived, theta)
        if not is_integral(m) or m <= 0:
            raise SpectrumError([CheckResult(
                "multiplicity", Status.FAIL, witness(theta=theta.value, m=m),
                f"multiplicity of {label} is {fmt(m)}, not a positive integer")])
        return int(m)
    bits = 16
    while True:
        enc = formal_multiplicity(derived, theta, bits)
        ints = list(enc.integers())
        if not ints or ints[-1] <= 0:
            raise SpectrumError([CheckResult(
                "multiplicity", Status.FAIL, {"theta": label, "enclosure": str(enc)},
                f"multiplicity of {label} is provably not a positive integer")])
        if len(ints) == 1:
            m = ints[0]
            if _certify(derived, theta, m):
                return m
            raise SpectrumError([CheckResult(
                "multiplicity", Status.FAIL, {"theta": label, "enclosure": str(enc), "candidate": str(m)},
                f"multiplicity of {label} is not an integer (only candidate {m} refuted exactly)")])
        if bits >= precision_bits:
            raise SpectrumError([CheckResult(
                "multiplicity", Status.INCONCLUSIVE, {"theta": label, "enclosure": str(enc), "bits": str(bits)},
                f"multiplicity of {label} unresolved at {bits} bits")])
        bits = min(bits * 2, precision_bits)


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues (strictly descending) with integer multiplicities."""

    entries: Tuple[Tuple[AlgebraicNumber, int], ...]

    @property
    def eigenvalues(self) -> List[AlgebraicNumber]:
        return [t for t, _ in self.entries]

    @property
    def multiplicities(self) -> List[int]:
        return [m for _, m in self.entries]

    @property
    def theta_1(self) -> AlgebraicNumber:
        """Second-largest eigenvalue."""
        return self.entries[1][0]

    @property
    def theta_min(self) -> AlgebraicNumber:
        return self.entries[-1][0]

    def as_dict(self) -> dict:
        """``{eigenvalue: multiplicity}``; keys are Fractions or AlgebraicNumbers."""
        return {(t.value if t.is_rational else t): m for t, m in self.entries}

    def to_json(self) -> list:
        return [{"value": t.to_json(), "multiplicity": m} for t, m in self.entries]

    def __str__(self):
        return "{" + ", ".join(f"{t}:{m}" for t, m in self.entries) + "}"


def spectrum(derived: DerivedParameters, precision_bits: int = DEFAULT_PRECISION_BITS) -> Spectrum:
    """Full spectrum of a distance-regular array (raises :class:`SpectrumError`)."""
    M = build_intersection_matrix(derived)
    eigs = isolate_eigenvalues(characteristic_polynomial(M))
    entries, failures = [], []
    for theta in eigs:
        try:
            entries.append((theta, multiplicity(derived, theta, precision_bits)))
        except SpectrumError as err:
            failures.extend(err.checks)
    if failures:
        raise SpectrumError(failures)
    return Spectrum(tuple(entries))


def trace_identities(derived: DerivedParameters, eigs: Sequence[AlgebraicNumber] | None = None,
                     tolerance: Fraction | None = None) -> dict:
    """Check ``sum m = n``, ``sum m theta = 0`` and ``sum m theta^2 = n k``.

    Uses the formal (possibly non-integral) multiplicities, so it applies to
    any array with positive entries.  Sums involving irrational eigenvalues
    are interval enclosures refined until narrower than ``tolerance``
    (default ``1e-12 * max(1, n k)``).  Returns ``{name: (enclosure, target)}``;
    each enclosure must contain its target.
    """
    if eigs is None:
        eigs = isolate_eigenvalues(characteristic_polynomial(build_intersection_matrix(derived)))
    nk = derived.n * derived.k
    if tolerance is None:
        tolerance = Fraction(1, 10**12) * max(1, nk)
    targets = {"sum_m": derived.n, "sum_m_theta": Fraction(0), "sum_m_theta2": nk}
    bits = 64
    while True:
        sums = {key: Interval.point(0) for key in targets}
        for theta in eigs:
            m = formal_multiplicity(derived, theta, bits)
            t = Interval.point(theta.value) if theta.is_rational else theta.enclosure(bits)
            sums["sum_m"] = sums["sum_m"] + m
            sums["sum_m_theta"] = sums["sum_m_theta"] + m * t
            sums["sum_m_theta2"] = sums["sum_m_theta2"] + m * t.square()
        if all(s.width < tolerance for s in sums.values()) or bits > 4096:
            return {key: (sums[key], targets[key]) for key in targets}
        bits *= 2


def trace_check(derived: DerivedParameters, spec: Spectrum) -> CheckResult:
    res = trace_identities(derived, spec.eigenvalues)
    ok = all(enc.contains(target) for enc, target in res.values())
    wit = {key: (fmt(enc.lo) if enc.width == 0 else str(enc)) for key, (enc, _) in res.items()}
    return CheckResult("trace_identities", Status.PASS if ok else Status.FAIL, wit,
                       "sum m = n, sum m*theta = 0, sum m*theta^2 = n*k" + ("" if ok else " violated"))
