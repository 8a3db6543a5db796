"""Machine-readable reports: JSON, CSV and fixed-width tables.

Exact rationals are written as ``"p/q"`` strings and floats with 17
significant digits, so that identical reports give identical bytes and a
JSON round trip restores the report structurally.
"""
from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import UnsupportedPayloadForCsv
from .polynomial import Polynomial
from .scalar import GaussianRational, format_exact


@dataclass
class Report:
    command: str
    inputs: dict
    payload: dict
    mode: str = "exact"

    def to_dict(self) -> dict:
        return {"command": self.command, "inputs": jsonable(self.inputs),
                "payload": jsonable(self.payload), "mode": self.mode}


def jsonable(x: Any) -> Any:
    """Convert library values into plain JSON-ready data."""
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, GaussianRational):
        return format_exact(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return x
    if isinstance(x, complex):
        return x.real if x.imag == 0 else [x.real, x.imag]
    if isinstance(x, Polynomial):
        return [jsonable(c) for c in x.coeffs]
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        return {f.name: jsonable(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _float_text(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError("non-finite float in report")
    text = format(x, ".17g")
    if all(ch not in text for ch in ".en"):
        text += ".0"
    return text


def _dump(x: Any, out: list) -> None:
    if isinstance(x, float):
        out.append(_float_text(x))
    elif isinstance(x, dict):
        out.append("{")
        for i, (k, v) in enumerate(x.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(k) + ": ")
            _dump(v, out)
        out.append("}")
    elif isinstance(x, list):
        out.append("[")
        for i, v in enumerate(x):
            if i:
                out.append(", ")
            _dump(v, out)
        out.append("]")
    else:
        out.append(json.dumps(x))


def to_json(report: Report) -> str:
    out: list = []
    _dump(report.to_dict(), out)
    return "".join(out) + "\n"


def _cell(v: Any) -> str:
    if isinstance(v, float):
        return _float_text(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return " ".join(_cell(x) for x in v)
    if v is None:
        return ""
    return str(v)


def to_csv(report: Report) -> str:
    payload = report.to_dict()["payload"]
    if "columns" not in payload or "rows" not in payload:
        raise UnsupportedPayloadForCsv(f"'{report.command}' payload is not tabular")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(payload["columns"])
    for row in payload["rows"]:
        w.writerow([_cell(row.get(c)) for c in payload["columns"]])
    return buf.getvalue()


def _kv_lines(d: dict, indent: int = 0) -> list[str]:
    lines = []
    pad = "  " * indent
    for k, v in d.items():
        if k in ("columns", "rows"):
            continue
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines += _kv_lines(v, indent + 1)
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines += _kv_lines(item, indent + 1)
                lines.append("")
        else:
            lines.append(f"{pad}{k}: {_cell(v)}")
    return lines


def to_table(report: Report) -> str:
    d = report.to_dict()
    lines = [f"command: {d['command']}", f"mode: {d['mode']}"]
    lines += [f"{k}: {_cell(v)}" for k, v in d["inputs"].items()]
    lines += _kv_lines(d["payload"])
    payload = d["payload"]
    if "columns" in payload and "rows" in payload:
        cols = payload["columns"]
        cells = [[_cell(r.get(c)) for c in cols] for r in payload["rows"]]
        widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
        lines.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
        lines.append("  ".join("-" * w for w in widths))
        lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines).rstrip("\n") + "\n"


def emit(report: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        text = to_json(report)
    elif fmt == "csv":
        text = to_csv(report)
    elif fmt == "table":
        text = to_table(report)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return text.encode("utf-8")
