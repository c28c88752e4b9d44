"""Parameter ladder of geometric distance-regular graphs.

For a geometric graph with smallest eigenvalue ``theta_D`` and Delsarte
clique size ``zeta = 1 - k/theta_D`` the array satisfies

    b_i = -(theta_D + tau_i) (zeta - psi_i)      (1 <= i <= D-1)
    c_i = tau_i * psi_{i-1}                      (1 <= i <= D)

so ``tau`` and ``psi`` can be solved forward from ``psi_0 = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple, Union

from .algebraic import AlgebraicNumber
from .arith import fmt
from .params import CheckResult, DerivedParameters, Scope, Status, witness

REASONS = (
    "clique size non-integral",
    "ladder_integrality",
    "ladder_range",
    "degenerate: τ_i = −θ_D",
    "irrational smallest eigenvalue",
)


@dataclass(frozen=True)
class GeometricParameters:
    theta_min: int
    clique_size: int
    tau: Tuple[int, ...]  # tau_1..tau_D
    psi: Tuple[int, ...]  # psi_0..psi_{D-1}

    def reconstruct(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Rebuild ``(b_1..b_{D-1}, c_1..c_D)`` from the ladder."""
        D = len(self.tau)
        b = tuple(-(self.theta_min + self.tau[i - 1]) * (self.clique_size - self.psi[i]) for i in range(1, D))
        c = tuple(self.tau[i - 1] * self.psi[i - 1] for i in range(1, D + 1))
        return b, c


@dataclass(frozen=True)
class NotGeometric:
    reason: str
    detail: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.reason not in REASONS:
            raise ValueError(f"unknown reason code {self.reason!r}")


def solve_geometric_parameters(derived: DerivedParameters,
                               theta_min: Union[AlgebraicNumber, Fraction, int]
                               ) -> Union[GeometricParameters, NotGeometric]:
    if isinstance(theta_min, AlgebraicNumber):
        if not theta_min.is_rational:
            return NotGeometric("irrational smallest eigenvalue", {"theta_D": str(theta_min)})
        theta_min = theta_min.value
    theta = Fraction(theta_min)
    k, D = derived.k, derived.diameter
    zeta = 1 - k / theta
    if theta.denominator != 1 or theta >= 0 or zeta.denominator != 1 or zeta < 2:
        return NotGeometric("clique size non-integral", witness(theta_D=theta, clique_size=zeta))
    theta_i, zeta_i = int(theta), int(zeta)
    psi = [Fraction(1)]
    tau = [Fraction(derived.c(1)) / psi[0]]
    for i in range(1, D):
        denom = -theta_i - tau[i - 1]
        if denom == 0:
            return NotGeometric("degenerate: τ_i = −θ_D", witness(i=i, tau_i=tau[i - 1]))
        p = zeta_i - Fraction(derived.b(i)) / denom
        if p.denominator != 1:
            return NotGeometric("ladder_integrality", witness(i=i, psi_i=p))
        if not 1 <= p <= zeta_i - 1:
            return NotGeometric("ladder_range", witness(i=i, psi_i=p, clique_size=zeta_i))
        psi.append(p)
        t = Fraction(derived.c(i + 1)) / p
        if t.denominator != 1:
            return NotGeometric("ladder_integrality", witness(i=i + 1, tau_i=t))
        tau.append(t)
    if any(t < 1 for t in tau):
        i = next(j for j, t in enumerate(tau) if t < 1) + 1
        return NotGeometric("ladder_range", witness(i=i, tau_i=tau[i - 1]))
    return GeometricParameters(theta_i, zeta_i, tuple(int(t) for t in tau), tuple(int(p) for p in psi))


def tau_psi_check(params: GeometricParameters, c_2: int) -> CheckResult:
    """A geometric graph with ``c_2 >= 2`` needs ``tau_2 >= psi_1``."""
    if len(params.tau) < 2:
        return CheckResult("geom_kb", Status.NOT_APPLICABLE, {}, "requires diameter >= 2", Scope.GEOMETRIC)
    if c_2 < 2:
        return CheckResult("geom_kb", Status.NOT_APPLICABLE, {"c_2": str(c_2)}, "requires c_2 >= 2",
                           Scope.GEOMETRIC)
    tau2, psi1 = params.tau[1], params.psi[1]
    wit = {"tau_2": str(tau2), "psi_1": str(psi1), "c_2": str(c_2)}
    if tau2 >= psi1:
        return CheckResult("geom_kb", Status.PASS, wit, f"tau_2 = {tau2} >= psi_1 = {psi1}", Scope.GEOMETRIC)
    return CheckResult("geom_kb", Status.FAIL, wit,
                       f"tau_2 = {tau2} < psi_1 = {psi1}: no geometric graph with this array", Scope.GEOMETRIC)


def geometric_checks(derived: DerivedParameters, theta_min) -> list:
    """``geom_solve`` row plus ``geom_kb`` when the ladder solves."""
    if derived.diameter < 2:
        return [CheckResult("geom_solve", Status.NOT_APPLICABLE, {}, "requires diameter >= 2", Scope.GEOMETRIC)]
    res = solve_geometric_parameters(derived, theta_min)
    if isinstance(res, NotGeometric):
        return [CheckResult("geom_solve", Status.NOT_APPLICABLE, {"reason": res.reason, **res.detail},
                            f"not geometric: {res.reason}", Scope.GEOMETRIC)]
    solved = CheckResult(
        "geom_solve", Status.PASS,
        {"theta_D": fmt(res.theta_min), "clique_size": str(res.clique_size),
         "tau": "(" + ",".join(map(str, res.tau)) + ")", "psi": "(" + ",".join(map(str, res.psi)) + ")"},
        f"clique size {res.clique_size}, tau = {res.tau}, psi = {res.psi}", Scope.GEOMETRIC)
    return [solved, tau_psi_check(res, derived.c(2))]
