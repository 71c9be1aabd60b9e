"""Deterministic CSV and JSON emission.

All tabular output is comma-separated UTF-8 with LF line endings, a header
row, '.' as the decimal separator, and floats printed with 17 significant
digits so every value round-trips exactly.  JSON reports are single
top-level objects; floats use the shortest round-trip representation.
Identical inputs therefore produce byte-identical files.
"""

import dataclasses
import enum
import json
import sys

import numpy as np

__all__ = [
    "csv_text",
    "format_float",
    "json_text",
    "scan_table",
    "sweep_table",
    "to_jsonable",
    "write_text",
]


def format_float(x):
    """Round-trip decimal rendering of a float (17 significant digits)."""
    return f"{float(x):.17g}"


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format_float(v)
    return str(v)


def csv_text(header, rows):
    """Render a header and value rows as deterministic CSV text."""
    lines = [",".join(str(h) for h in header)]
    for row in rows:
        lines.append(",".join(_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def to_jsonable(x):
    """Recursively convert dataclasses, enums and numpy types for JSON."""
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        return {
            f.name: to_jsonable(getattr(x, f.name))
            for f in dataclasses.fields(x)
        }
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return [to_jsonable(v) for v in x]
    if isinstance(x, (np.bool_, bool)):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    return x


def json_text(obj):
    """Render an object as an indented JSON document with trailing newline."""
    return json.dumps(to_jsonable(obj), indent=2) + "\n"


def sweep_table(sweep):
    """Header and rows for a 1-D sweep: param[, fixed param], k_1..k_N."""
    kcols = [f"k_{j + 1}" for j in range(sweep.dim)]
    if sweep.family == "l":
        header = ["lambda", "mu"] + kcols
        lam = sweep.fixed["lambda"]
        rows = [[lam, r.value] + list(r.eigenvalues) for r in sweep.records]
    else:
        header = ["lambda"] + kcols
        rows = [[r.value] + list(r.eigenvalues) for r in sweep.records]
    return header, rows


def scan_table(scan):
    """Header and rows for a 2-D scan: lambda, mu, n_negative, min_eig."""
    header = ["lambda", "mu", "n_negative", "min_eig"]
    rows = [[r.lam, r.mu, r.n_negative, r.min_eig] for r in scan.records]
    return header, rows


def write_text(path, text):
    """Write text to a file (UTF-8, LF preserved) or stdout when path is None."""
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
