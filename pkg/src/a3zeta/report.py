"""Report documents and their JSON encoding.

Numbers are written as decimal strings; exact rationals as "num/den".
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import mpmath

from .series.scalar import NumericValue

__all__ = ["ReportDocument", "numeric_to_json", "decimal_string", "export_json", "to_json_text"]

DIGITS = 30


def decimal_string(x, digits: int = DIGITS) -> str:
    return mpmath.nstr(mpmath.mpf(x), digits, min_fixed=-6, max_fixed=12)


def bound_string(x: float) -> str:
    return f"{float(x):.3e}"


def numeric_to_json(v: NumericValue, digits: int = DIGITS) -> dict:
    return {
        "re": decimal_string(v.real, digits),
        "im": decimal_string(v.imag, digits),
        "tail_bound": bound_string(v.tail_bound),
        "rounding_slack": bound_string(v.rounding_slack),
    }


@dataclass(frozen=True)
class ReportDocument:
    version: str
    command: str
    inputs: dict
    result: dict
    error_bound: str | None = None
    duration_ms: float = 0.0
    provenance: tuple = field(default=())

    def to_dict(self) -> dict:
        result = dict(self.result)
        if self.provenance:
            result["provenance"] = list(self.provenance)
        return {
            "version": self.version,
            "command": self.command,
            "inputs": self.inputs,
            "result": result,
            "error_bound": self.error_bound,
            "duration_ms": f"{self.duration_ms:.3f}",
        }


def to_json_text(report: ReportDocument) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"


def export_json(report: ReportDocument, path) -> None:
    path = Path(path)
    try:
        path.write_text(to_json_text(report), encoding="utf-8")
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write report to {path}: {exc.strerror}") from exc
