"""
Report assembly and rendering.

Every float leaves through ``clean`` and is rounded to
``SIGNIFICANT_DIGITS`` significant digits, so the json and csv renderings
of one run carry the same numbers.
"""
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from ..exceptions import ReportWriteError

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12
RATIONAL_ATOL = 1e-12
RATIONAL_MAX_DENOMINATOR = 64


def round_sig(value):
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}")


def clean(obj):
    """Recursively turn numpy scalars, complex numbers and floats into rounded json-ready values."""
    if isinstance(obj, dict):
        return {str(key): clean(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(value) for value in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [round_sig(obj.real), round_sig(obj.imag)]
    if isinstance(obj, (float, np.floating)):
        return round_sig(float(obj))
    return obj


def rational(value):
    """
    "1/2", "1/4", "0", "1" ... when ``value`` sits within ``RATIONAL_ATOL``
    of a fraction with a small denominator, else None.
    """
    fraction = Fraction(float(value)).limit_denominator(RATIONAL_MAX_DENOMINATOR)
    if abs(float(fraction) - value) > RATIONAL_ATOL:
        return None
    return str(fraction)


@dataclass
class Report:
    """
    Outcome of a ``run``: exact and sampled ancilla statistics, verdict
    counts, fidelities and the comparison against the closed-form states.
    """

    config: Dict
    exact_distribution: Dict[str, float]
    empirical_distribution: Dict[str, int]
    verdict_counts: Dict[str, int]
    mean_fidelity_before_correction: float
    mean_fidelity_after_correction: float
    half_claim_max_deviation: float
    paper_comparison: List = field(default_factory=list)
    wall_time_ms: float = 0.0

    def __post_init__(self):
        total = sum(self.empirical_distribution.values())
        if total != self.config["trials"]:
            raise ValueError(f"Empirical counts sum to {total}, not {self.config['trials']} trials.")

    def to_dict(self):
        trials = self.config["trials"]
        return clean({
            "config": self.config,
            "exact_distribution": {
                outcome: {"probability": p, "rational": rational(p)}
                for outcome, p in self.exact_distribution.items()
            },
            "empirical_distribution": {
                outcome: {"count": count, "frequency": count / trials}
                for outcome, count in self.empirical_distribution.items()
            },
            "verdict_counts": self.verdict_counts,
            "mean_fidelity_before_correction": self.mean_fidelity_before_correction,
            "mean_fidelity_after_correction": self.mean_fidelity_after_correction,
            "half_claim_max_deviation": self.half_claim_max_deviation,
            "paper_comparison": [report.as_dict() for report in self.paper_comparison],
            "wall_time_ms": self.wall_time_ms,
        })

    def to_frame(self):
        """One row per ancilla outcome; run-level scalars repeat on every row."""
        payload = self.to_dict()
        rows = []
        for outcome, exact in payload["exact_distribution"].items():
            empirical = payload["empirical_distribution"][outcome]
            rows.append({
                "outcome": outcome,
                "exact_probability": exact["probability"],
                "exact_rational": exact["rational"] or "",
                "count": empirical["count"],
                "frequency": empirical["frequency"],
                "mean_fidelity_before_correction": payload["mean_fidelity_before_correction"],
                "mean_fidelity_after_correction": payload["mean_fidelity_after_correction"],
                "half_claim_max_deviation": payload["half_claim_max_deviation"],
            })
        return pd.DataFrame(rows)

    def render(self, fmt):
        if fmt == "json":
            return json.dumps(self.to_dict(), indent=2) + "\n"
        if fmt == "csv":
            return self.to_frame().to_csv(index=False)
        payload = self.to_dict()
        lines = [
            f"cheat: {payload['config']['cheat']}    trials: {payload['config']['trials']}"
            f"    seed: {payload['config']['seed']}",
            "",
            self.to_frame()[["outcome", "exact_probability", "exact_rational", "count", "frequency"]]
            .to_string(index=False),
            "",
            "verdicts: " + ", ".join(f"{name}={count}" for name, count in payload["verdict_counts"].items()),
            f"mean fidelity before correction: {payload['mean_fidelity_before_correction']}",
            f"mean fidelity after correction:  {payload['mean_fidelity_after_correction']}",
            f"max deviation from the 1/2 claims: {payload['half_claim_max_deviation']}",
        ]
        if self.paper_comparison:
            comparison = pd.DataFrame(payload["paper_comparison"])
            lines += ["", comparison.to_string(index=False)]
        return "\n".join(lines) + "\n"


@dataclass
class TabularReport:
    """
    A report that is a single table: oracle comparisons, sweep rows or
    Shor trials, plus a few summary values.
    """

    kind: str
    config: Dict
    rows: List[Dict]
    summary: Dict = field(default_factory=dict)
    wall_time_ms: float = 0.0

    def to_dict(self):
        return clean({
            "kind": self.kind,
            "config": self.config,
            "summary": self.summary,
            "rows": self.rows,
            "wall_time_ms": self.wall_time_ms,
        })

    def to_frame(self):
        return pd.DataFrame(clean(self.rows))

    def render(self, fmt):
        if fmt == "json":
            return json.dumps(self.to_dict(), indent=2) + "\n"
        if fmt == "csv":
            return self.to_frame().to_csv(index=False)
        summary = clean(self.summary)
        lines = [self.to_frame().to_string(index=False)]
        if summary:
            lines += [""] + [f"{key}: {value}" for key, value in summary.items()]
        return "\n".join(lines) + "\n"


def write_report(text, output_path: Optional[str] = None):
    """
    Write rendered text to ``output_path`` or to stdout.

    Raises
    ------
    ReportWriteError
        If the file cannot be written.
    """
    if output_path is None:
        sys.stdout.write(text)
        return
    try:
        with open(output_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise ReportWriteError(f"Cannot write report to {output_path}: {exc}") from exc
    logger.info("Report written to %s", output_path)
