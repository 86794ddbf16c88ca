"""
Human-readable rendering of results and reports.

Matrices are printed to 6 significant digits; JSON output keeps full precision.
"""

from typing import Any, Dict, List, Optional

import numpy as np

from ..algebra import AlgebraElement
from ..reports import CATEGORIES, VerificationReport

SIGNIFICANT = 6


def format_scalar(z: complex, digits: int = SIGNIFICANT) -> str:
    re, im = z.real + 0.0, z.imag + 0.0
    if abs(im) <= 1e-15 * max(1.0, abs(re)):
        return f"{re:.{digits}g}"
    if abs(re) <= 1e-15 * max(1.0, abs(im)):
        return f"{im:.{digits}g}j"
    return f"{re:.{digits}g}{im:+.{digits}g}j"


def format_matrix(m: np.ndarray, indent: str = "  ") -> str:
    cells = [[format_scalar(complex(z)) for z in row] for row in m]
    width = max((len(c) for row in cells for c in row), default=1)
    rows = ("  ".join(c.rjust(width) for c in row) for row in cells)
    return "\n".join(f"{indent}[ {row} ]" for row in rows)


def format_element(x: AlgebraElement, indent: str = "  ") -> str:
    return format_matrix(x.matrix, indent)


def _status(passed: bool) -> str:
    return "ok" if passed else "FAIL"


def render_compute(
    name: str, data: Dict[str, Any], elements: Dict[str, AlgebraElement]
) -> str:
    lines = [
        f"{name} in {data['context']}",
        f"  drazin_index:  {data['drazin_index']}",
        f"  radical_index: {data['radical_index']}",
        "inverse:",
        format_element(elements["inverse"]),
        "spectral idempotent:",
        format_element(elements["spectral_idempotent"]),
        "axiom residuals:",
    ]
    for key, value in data["axiom_residuals"].items():
        lines.append(f"  {key:<16} {value:.3e}")
    q = data["quasinilpotence"]
    roots = ", ".join(f"{r:.3g}" for r in q["root_sequence"])
    lines.append(
        f"quasinilpotent part a*a^Pi: {'yes' if q['is_quasinilpotent'] else 'no'} "
        f"(||x^k||^(1/k): {roots})"
    )
    return "\n".join(lines)


def render_report(report: VerificationReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{report.identity} on {report.context}: {status}"]
    for category in CATEGORIES:
        entries = report.checks[category]
        if not entries:
            continue
        lines.append(f"{category} residuals:")
        width = max(len(name) for name in entries)
        for name, check in entries.items():
            lines.append(
                f"  {name:<{width}}  {check.residual:.3e} {check.relation} "
                f"{check.tolerance:.1e}  {_status(check.passed)}"
            )
    if report.series_terms:
        terms = ", ".join(f"{k}={v}" for k, v in report.series_terms.items())
        lines.append(f"series terms: {terms}")
    for name, value in report.documentation.items():
        lines.append(f"note: {name} = {value:.6g}")
    if report.marginal_hypotheses:
        lines.append(f"marginal hypotheses: {', '.join(report.marginal_hypotheses)}")
    if report.skipped:
        lines.append(f"skipped: {', '.join(report.skipped)}")
    return "\n".join(lines)


def _fmt(value: Optional[float]) -> str:
    return "n/a" if value is None else f"{value:.3e}"


def render_fuzz(summary: Dict[str, Any]) -> str:
    lines: List[str] = [
        f"fuzz {summary['identity']} ({summary['context']}, dims "
        f"{summary['dims'][0]}..{summary['dims'][1]}, seed {summary['seed']}): "
        f"{summary['passed']}/{summary['count']} passed",
        f"  formula residual: max {_fmt(summary['max_formula_residual'])}, "
        f"median {_fmt(summary['median_formula_residual'])}",
    ]
    if summary["max_series_terms"]:
        terms = ", ".join(f"{k}={v}" for k, v in summary["max_series_terms"].items())
        lines.append(f"  max series terms: {terms}")
    for failure in summary["failures"]:
        reason = failure["error"] or ", ".join(failure["failures"])
        lines.append(f"  #{failure['ordinal']} ({failure['context']}): {reason}")
        if failure["counterexample"]:
            replay = f"pdrazin verify {failure['counterexample']} {summary['identity']}"
            lines.append(f"    replay: {replay}")
    return "\n".join(lines)
