"""Intersection arrays, derived parameters and the basic feasibility battery."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .arith import fmt, is_integral


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    EQUALITY = "EQUALITY"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    INCONCLUSIVE = "INCONCLUSIVE"


class Scope(str, enum.Enum):
    """How a check's FAIL feeds the verdict.

    ``UNCONDITIONAL`` FAILs prove the array infeasible; ``GEOMETRIC`` FAILs
    hold only under the premise that the graph is geometric;
    ``INFORMATIONAL`` rows record bounds and never affect the verdict.
    """

    UNCONDITIONAL = "unconditional"
    GEOMETRIC = "geometric"
    INFORMATIONAL = "informational"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: Status
    witnesses: Dict[str, str] = field(default_factory=dict)
    message: str = ""
    scope: Scope = Scope.UNCONDITIONAL

    def to_json(self) -> dict:
        return {
            "id": self.check_id,
            "status": self.status.value,
            "scope": self.scope.value,
            "witnesses": dict(self.witnesses),
            "message": self.message,
        }


def witness(**values) -> Dict[str, str]:
    """Render witness values canonically (rationals as ``p/q``, others via ``str``)."""
    out = {}
    for key, val in values.items():
        if isinstance(val, (int, Fraction)) and not isinstance(val, bool):
            out[key] = fmt(val)
        elif isinstance(val, (list, tuple)):
            out[key] = "(" + ",".join(fmt(v) if isinstance(v, (int, Fraction)) else str(v) for v in val) + ")"
        else:
            out[key] = str(val)
    return out


class ArrayParseError(ValueError):
    """Malformed intersection-array text; ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at column {position})")
        self.position = position


@dataclass(frozen=True)
class IntersectionArray:
    b: Tuple[int, ...]
    c: Tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != len(self.c):
            raise ValueError(f"length mismatch: {len(self.b)} b's vs {len(self.c)} c's")
        if not self.b:
            raise ValueError("diameter must be at least 1")
        if any(x <= 0 for x in self.b + self.c):
            raise ValueError("all entries must be positive")
        if self.c[0] != 1:
            raise ValueError("c_1 must equal 1")

    @property
    def diameter(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def __str__(self):
        return render_array(self)


_INT = re.compile(r"\s*([+-]?\d+)\s*")


def _parse_side(text: str, offset: int) -> List[Tuple[int, int]]:
    values = []
    pos = 0
    for chunk in text.split(","):
        m = _INT.fullmatch(chunk)
        if not m:
            raise ArrayParseError(f"expected an integer, got {chunk.strip()!r}", offset + pos)
        values.append((int(m.group(1)), offset + pos + m.start(1)))
        pos += len(chunk) + 1
    return values


def parse_array(text: str) -> IntersectionArray:
    """Parse ``"b0,...,b_{D-1};c1,...,cD"``; braces around the array are tolerated."""
    body = text.strip()
    shift = len(text) - len(text.lstrip())
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
        shift += 1
    if body.count(";") != 1:
        raise ArrayParseError("expected exactly one ';' separating b's from c's", shift)
    left, right = body.split(";")
    bs = _parse_side(left, shift)
    cs = _parse_side(right, shift + len(left) + 1)
    if len(bs) != len(cs):
        raise ArrayParseError(f"length mismatch: {len(bs)} b's vs {len(cs)} c's", shift + len(left))
    for value, pos in bs + cs:
        if value <= 0:
            raise ArrayParseError(f"entry {value} is not positive", pos)
    if cs[0][0] != 1:
        raise ArrayParseError(f"c_1 must be 1, got {cs[0][0]}", cs[0][1])
    return IntersectionArray(tuple(v for v, _ in bs), tuple(v for v, _ in cs))


def render_array(arr: IntersectionArray) -> str:
    return ",".join(map(str, arr.b)) + ";" + ",".join(map(str, arr.c))


@dataclass(frozen=True)
class DerivedParameters:
    """``a_0..a_D``, distance degrees ``k_0..k_D`` and ``n`` for an array.

    ``k_dist`` and ``n`` are exact rationals; non-integral values are legal
    here and surface as FAIL rows in :func:`basic_feasibility`.
    """

    array: IntersectionArray
    k: int
    a: Tuple[int, ...]
    k_dist: Tuple[Fraction, ...]
    n: Fraction

    @property
    def diameter(self) -> int:
        return self.array.diameter

    def b(self, i: int) -> int:
        """``b_i`` with ``b_D = 0``."""
        return self.array.b[i] if i < self.diameter else 0

    def c(self, i: int) -> int:
        """``c_i`` with ``c_0 = 0``."""
        return self.array.c[i - 1] if i >= 1 else 0

    @property
    def integral(self) -> bool:
        return all(is_integral(x) for x in self.k_dist) and all(x >= 0 for x in self.a)


def derive_parameters(arr: IntersectionArray) -> DerivedParameters:
    D = arr.diameter
    k = arr.k
    b = list(arr.b) + [0]
    c = [0] + list(arr.c)
    a = tuple(k - b[i] - c[i] for i in range(D + 1))
    kd = [Fraction(1)]
    for i in range(1, D + 1):
        kd.append(kd[-1] * b[i - 1] / c[i])
    return DerivedParameters(arr, k, a, tuple(kd), sum(kd, Fraction(0)))


def basic_feasibility(derived: DerivedParameters) -> List[CheckResult]:
    """Standard sanity conditions: nonnegative ``a_i``, integral ``k_i``,
    handshake parity and monotone ``b``/``c``."""
    D = derived.diameter
    out = []

    neg = [i for i, x in enumerate(derived.a) if x < 0]
    if neg:
        i = neg[0]
        out.append(CheckResult("basic_a_nonneg", Status.FAIL, witness(i=i, a_i=derived.a[i]),
                               f"a_{i} = {derived.a[i]} is negative"))
    else:
        out.append(CheckResult("basic_a_nonneg", Status.PASS, witness(a=derived.a), "all a_i >= 0"))

    bad = [i for i, x in enumerate(derived.k_dist) if not is_integral(x) or x <= 0]
    if bad:
        i = bad[0]
        out.append(CheckResult("basic_k_integral", Status.FAIL, witness(i=i, k_i=derived.k_dist[i]),
                               f"k_{i} = {fmt(derived.k_dist[i])} is not a positive integer"))
    else:
        out.append(CheckResult("basic_k_integral", Status.PASS, witness(k_dist=derived.k_dist, n=derived.n),
                               f"all k_i integral, n = {fmt(derived.n)}"))

    if bad:
        out.append(CheckResult("basic_handshake", Status.NOT_APPLICABLE, {}, "requires integral k_i"))
    else:
        n = derived.n
        odd = None
        if (n * derived.k) % 2:
            odd = ("n*k", n * derived.k)
        else:
            for i in range(D + 1):
                val = n * derived.k_dist[i] * derived.a[i]
                if val % 2:
                    odd = (f"n*k_{i}*a_{i}", val)
                    break
        if odd:
            out.append(CheckResult("basic_handshake", Status.FAIL, {"product": odd[0], "value": fmt(odd[1])},
                                   f"{odd[0]} = {fmt(odd[1])} is odd"))
        else:
            out.append(CheckResult("basic_handshake", Status.PASS, {}, "n*k and all n*k_i*a_i even"))

    c = [derived.c(i) for i in range(1, D + 1)]
    b = [derived.b(i) for i in range(D)]
    viol = next((f"c_{i + 1} > c_{i + 2}" for i in range(D - 1) if c[i] > c[i + 1]), None)
    viol = viol or next((f"b_{i} < b_{i + 1}" for i in range(D - 1) if b[i] < b[i + 1]), None)
    if viol:
        out.append(CheckResult("basic_monotone", Status.FAIL, {"violation": viol}, f"monotonicity fails: {viol}"))
    else:
        out.append(CheckResult("basic_monotone", Status.PASS, {}, "c nondecreasing, b nonincreasing"))
    return out


def passes(checks: List[CheckResult]) -> bool:
    return all(ch.status is not Status.FAIL for ch in checks)
