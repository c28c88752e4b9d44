"""Exact feasibility checks for distance-regular graph intersection arrays."""

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
from .report import FeasibilityReport, Verdict, batch_run, run_all_checks
from .spectrum import Spectrum, SpectrumError, spectrum

__all__ = [
    "ArrayParseError",
    "CheckResult",
    "DerivedParameters",
    "FeasibilityReport",
    "IntersectionArray",
    "Scope",
    "Spectrum",
    "SpectrumError",
    "Status",
    "Verdict",
    "basic_feasibility",
    "batch_run",
    "derive_parameters",
    "parse_array",
    "render_array",
    "run_all_checks",
    "spectrum",
]
