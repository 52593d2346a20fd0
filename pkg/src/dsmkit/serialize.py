"""CSV / JSON serialization for matrices, vectors, and reports.

Numeric CSV output uses '.'-decimal with 17 significant digits so values
round-trip exactly through float64.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import numpy as np

from .graph import atomic_write_text


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def matrix_to_csv(m: np.ndarray) -> str:
    m = np.atleast_2d(np.asarray(m, dtype=np.float64))
    return "".join(",".join(format_float(v) for v in row) + "\n" for row in m)


def write_matrix_csv(m: np.ndarray, path: str) -> None:
    atomic_write_text(path, matrix_to_csv(m))


def read_matrix_csv(path: str) -> np.ndarray:
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            cells = line.split(",")
            try:
                rows.append([float(c) for c in cells])
            except ValueError:
                if not rows:  # tolerate a single header row
                    continue
                raise
    return np.array(rows, dtype=np.float64)


def write_residual_mass_csv(m: np.ndarray, path: str) -> None:
    lines = ["m\n"] + [format_float(v) + "\n" for v in np.asarray(m)]
    atomic_write_text(path, "".join(lines))


def write_csv_rows(path: str, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    """Write tabular CSV with a header; floats rendered at full precision,
    None rendered as an empty cell."""
    def cell(v) -> str:
        if v is None:
            return ""
        if isinstance(v, float):
            return format_float(v)
        return str(v)

    lines = [",".join(header) + "\n"]
    lines.extend(",".join(cell(v) for v in row) + "\n" for row in rows)
    atomic_write_text(path, "".join(lines))


def write_json(obj: dict, path: str) -> None:
    atomic_write_text(path, json.dumps(obj, indent=2, sort_keys=True) + "\n")
