"""Machine-readable output records (JSON and CSV) for the command line."""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass, field

SIG_DIGITS = 9


def round_sig(x: float, digits: int = SIG_DIGITS) -> float:
    if not math.isfinite(x) or x == 0:
        return float(x)
    return float(f"{x:.{digits}g}")


def normalize(value):
    """Coerce numpy scalars, enums and floats into plain JSON values,
    rounding floats to 9 significant digits."""
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if hasattr(value, "item") and not isinstance(value, (list, dict)):
        value = value.item()
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return round_sig(value)
    if isinstance(value, dict):
        return {str(k): normalize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [normalize(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass
class OutputRecord:
    command: str
    parameters: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.parameters = normalize(dict(self.parameters))
        self.rows = [normalize(dict(row)) for row in self.rows]
        self.metadata = normalize(dict(self.metadata))
        if self.rows:
            keys = list(self.rows[0])
            for row in self.rows[1:]:
                if list(row) != keys:
                    raise ValueError("rows must share the same fields in the same order")

    @property
    def columns(self):
        return list(self.rows[0]) if self.rows else []

    def to_dict(self):
        return {"command": self.command, "parameters": self.parameters,
                "rows": self.rows, "metadata": self.metadata}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        d = json.loads(text)
        return cls(d["command"], d.get("parameters", {}), d.get("rows", []),
                   d.get("metadata", {}))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_csv_cell(v) for v in row.values()])
        return buf.getvalue()

    def dumps(self, fmt: str = "json") -> str:
        return self.to_csv() if fmt == "csv" else self.to_json()


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _parse_cell(s: str):
    if s == "":
        return None
    if s in ("true", "false"):
        return s == "true"
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        return s


def rows_from_csv(text: str) -> list:
    """Parse the CSV produced by :meth:`OutputRecord.to_csv` back into rows."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        return []
    return [dict(zip(header, (_parse_cell(c) for c in line))) for line in reader]
