"""Composed check pipeline, verdicts and deterministic report rendering."""

from __future__ import annotations

import enum
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from . import bounds, geometric
from .arith import fmt
from .params import (
    ArrayParseError,
    CheckResult,
    DerivedParameters,
    IntersectionArray,
    Scope,
    Status,
    basic_feasibility,
    derive_parameters,
    parse_array,
    render_array,
)
from .spectrum import DEFAULT_PRECISION_BITS, Spectrum, SpectrumError, spectrum, trace_check


class Verdict(str, enum.Enum):
    NO_OBSTRUCTION = "NO_OBSTRUCTION"
    INFEASIBLE = "INFEASIBLE"
    INFEASIBLE_IF_GEOMETRIC = "INFEASIBLE_IF_GEOMETRIC"
    ERROR = "ERROR"


@dataclass(frozen=True)
class FeasibilityReport:
    array: Optional[IntersectionArray]
    derived: Optional[DerivedParameters]
    spectrum: Optional[Spectrum]
    checks: Tuple[CheckResult, ...]
    verdict: Verdict
    source: str = ""
    error: str = ""
    replay: Tuple[dict, ...] = field(default=())

    def check(self, check_id: str) -> List[CheckResult]:
        return [c for c in self.checks if c.check_id == check_id]

    def to_json(self) -> dict:
        """Report as a dict with a fixed key order (see README for the schema)."""
        out: dict = {}
        if self.array is None:
            out["input"] = self.source
            out["error"] = self.error
            out["verdict"] = self.verdict.value
            return out
        d = self.derived
        out["array"] = {"b": list(self.array.b), "c": list(self.array.c)}
        out["n"] = fmt(d.n)
        out["derived"] = {"k": str(d.k), "a": [str(x) for x in d.a], "k_dist": [fmt(x) for x in d.k_dist]}
        out["spectrum"] = self.spectrum.to_json() if self.spectrum else None
        out["checks"] = [c.to_json() for c in self.checks]
        if self.replay:
            out["replay"] = list(self.replay)
        out["verdict"] = self.verdict.value
        return out


def decide_verdict(checks: Sequence[CheckResult]) -> Verdict:
    fails = [c for c in checks if c.status is Status.FAIL]
    if any(c.scope is Scope.UNCONDITIONAL for c in fails):
        return Verdict.INFEASIBLE
    if any(c.scope is Scope.GEOMETRIC for c in fails):
        return Verdict.INFEASIBLE_IF_GEOMETRIC
    return Verdict.NO_OBSTRUCTION


def run_all_checks(arr: Union[IntersectionArray, str], *, max_s: Optional[int] = None,
                   precision_bits: int = DEFAULT_PRECISION_BITS) -> FeasibilityReport:
    """Basic conditions, spectrum, Delsarte and local eigenvalue bounds,
    claw scans, then the geometric ladder."""
    source = arr if isinstance(arr, str) else render_array(arr)
    if isinstance(arr, str):
        try:
            arr = parse_array(arr)
        except ArrayParseError as err:
            return FeasibilityReport(None, None, None, (), Verdict.ERROR, source=source.strip(), error=str(err))

    derived = derive_parameters(arr)
    checks: List[CheckResult] = list(basic_feasibility(derived))
    spec = None
    if derived.integral:
        try:
            spec = spectrum(derived, precision_bits)
        except SpectrumError as err:
            checks.extend(err.checks)
        else:
            checks.append(CheckResult("multiplicity", Status.PASS,
                                      {"multiplicities": "(" + ",".join(map(str, spec.multiplicities)) + ")"},
                                      "all multiplicities are positive integers"))
            checks.append(trace_check(derived, spec))

    if spec is not None:
        checks.append(bounds.delsarte_check(derived.k, spec.theta_min))
        if derived.diameter >= 2:
            checks.append(bounds.local_min_eig_check(derived, spec.theta_1))
        else:
            checks.append(CheckResult("local_min_eig", Status.NOT_APPLICABLE, {}, "requires diameter >= 2",
                                      Scope.INFORMATIONAL))
        checks.extend(bounds.local_claw_scan(derived, max_s))
        checks.append(bounds.global_claw_check(derived))
        checks.extend(geometric.geometric_checks(derived, spec.theta_min))

    return FeasibilityReport(arr, derived, spec, tuple(checks), decide_verdict(checks), source=source)


def _worker(args):
    line, max_s, bits = args
    return run_all_checks(line, max_s=max_s, precision_bits=bits)


def read_batch(path: Union[str, Path]) -> List[str]:
    lines = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        text = raw.split("#", 1)[0].strip()
        if text:
            lines.append(text)
    return lines


def batch_run(path: Union[str, Path], *, workers: int = 1, max_s: Optional[int] = None,
              precision_bits: int = DEFAULT_PRECISION_BITS) -> List[FeasibilityReport]:
    """One report per non-comment line, in input order."""
    jobs = [(line, max_s, precision_bits) for line in read_batch(path)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_worker, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [_worker(j) for j in jobs]


def summarize(reports: Sequence[FeasibilityReport]) -> dict:
    counts = Counter(r.verdict for r in reports)
    return {v.value: counts.get(v, 0) for v in Verdict}


def dumps(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def report_json(report: FeasibilityReport) -> str:
    return dumps(report.to_json())


def batch_json(reports: Sequence[FeasibilityReport]) -> str:
    return dumps({"reports": [r.to_json() for r in reports], "summary": summarize(reports)})


def report_text(report: FeasibilityReport) -> str:
    if report.array is None:
        return f"input:   {report.source}\nerror:   {report.error}\nverdict: {report.verdict.value}\n"
    d = report.derived
    lines = [
        f"array:   {{{render_array(report.array)}}}",
        f"n = {fmt(d.n)}, k = {d.k}, a = ({','.join(map(str, d.a))}), "
        f"k_i = ({','.join(fmt(x) for x in d.k_dist)})",
    ]
    if report.spectrum:
        lines.append(f"spectrum: {report.spectrum}")
    for c in report.checks:
        lines.append(f"  [{c.status.value:<14}] {c.check_id:<17} {c.scope.value:<13} {c.message}")
    for step in report.replay:
        lines.append(f"  step {step['step']:>2} {step['status']:<4} {step['name']}: {step['observed']}")
    lines.append(f"verdict: {report.verdict.value}")
    return "\n".join(lines) + "\n"


def batch_text(reports: Sequence[FeasibilityReport]) -> str:
    body = "\n".join(report_text(r) for r in reports)
    summary = ", ".join(f"{k}={v}" for k, v in summarize(reports).items())
    return body + ("\n" if body else "") + f"summary: {len(reports)} arrays; {summary}\n"


def with_checks(report: FeasibilityReport, checks: Sequence[CheckResult], verdict: Verdict,
                replay: Sequence[dict]) -> FeasibilityReport:
    return replace(report, checks=tuple(checks), verdict=verdict, replay=tuple(replay))
