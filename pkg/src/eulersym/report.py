"""Report records and their JSON / CSV / text encodings."""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .dirichlet import DirichletCharacter
from .exactnum import CycNumber, render
from .symmetry import SymmetryReport

VERIFY_FIELDS = (
    "theorem", "d", "char_index", "char_order", "conductor", "primitive",
    "n", "w", "grid_size", "verdict", "skip_reason", "discrepancy",
)


def character_fields(chi: DirichletCharacter) -> dict[str, Any]:
    return {
        "d": chi.modulus,
        "char_index": chi.index,
        "char_order": chi.order,
        "conductor": chi.conductor,
        "primitive": chi.is_primitive,
    }


def verify_record(report: SymmetryReport, chi: DirichletCharacter) -> dict[str, Any]:
    rec: dict[str, Any] = {"theorem": report.theorem_id}
    rec.update(character_fields(chi))
    rec.update({
        "n": report.degree,
        "w": list(report.weights),
        "grid_size": report.grid_size,
        "verdict": report.verdict,
    })
    if report.first_discrepancy is not None:
        rec["discrepancy"] = report.first_discrepancy
    return rec


def skip_record(theorem_id: int, chi: DirichletCharacter, n: int, w: Sequence[int],
                reason: str) -> dict[str, Any]:
    rec: dict[str, Any] = {"theorem": theorem_id}
    rec.update(character_fields(chi))
    rec.update({"n": n, "w": list(w), "grid_size": 0, "verdict": "skip", "skip_reason": reason})
    return rec


def encode_value(x: Any) -> Any:
    """JSON-friendly form of exact values: rationals and cyclotomics become strings."""
    if isinstance(x, CycNumber):
        return render(x)
    if isinstance(x, Fraction):
        return render(x)
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def dumps(record: dict[str, Any]) -> str:
    return json.dumps(record, separators=(", ", ": "), ensure_ascii=False)


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


class RecordWriter:
    """Writes records one at a time in json (lines), csv, or text format."""

    def __init__(self, stream, fmt: str, fields: Sequence[str] | None = None):
        self.stream = stream
        self.fmt = fmt
        self.fields = list(fields) if fields else None
        self._header_done = False

    def _fields_for(self, record: dict) -> list[str]:
        if self.fields is None:
            self.fields = list(record)
        return self.fields

    def write(self, record: dict[str, Any]) -> None:
        if self.fmt == "json":
            self.stream.write(dumps(record) + "\n")
            return
        fields = self._fields_for(record)
        if self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            if not self._header_done:
                w.writerow(fields)
            w.writerow([_csv_cell(record.get(f)) for f in fields])
            self.stream.write(buf.getvalue())
        else:
            if not self._header_done:
                self.stream.write("  ".join(f"{f:>12}" for f in fields) + "\n")
            self.stream.write(
                "  ".join(f"{_csv_cell(record.get(f)):>12}" for f in fields) + "\n"
            )
        self._header_done = True

    def write_all(self, records: Iterable[dict[str, Any]]) -> None:
        for r in records:
            self.write(r)
