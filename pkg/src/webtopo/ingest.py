"""Edge-list input and curve / summary output.

Formats
-------
Edge list
    One edge per line, two tokens separated by whitespace (or by a tab when
    ``delimiter="\\t"``).  Blank lines and lines starting with ``#`` are
    skipped.  Tokens are opaque labels.
Curve CSV (format version 1)
    Header ``x,y`` then one row per point, x ascending.  Integral values are
    written without a fractional part, everything else with ``repr`` so the
    file reads back to the identical floats.
Summary JSON (format version 1)
    ``node_count``, ``link_count``, ``average_degree``,
    ``assortative_coefficient`` (``null`` when undefined),
    ``mean_triangle_coefficient`` and a ``metadata`` object with
    ``dataset``, ``timestamp``, ``tool_version`` and ``format_version``.

All writers go through a temporary file and an atomic rename.
"""

from __future__ import annotations

import csv
import json
import logging
import os
import tempfile
from contextlib import contextmanager
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterator

from . import __version__
from .connectivity import NetworkSummary
from .curve import MetricCurve
from .errors import EdgeListFormatError, TopologyError

__all__ = [
    "EdgeListFormat",
    "iter_edge_list",
    "read_edge_list",
    "write_edge_list",
    "format_number",
    "write_curve",
    "read_curve",
    "write_summary",
    "read_summary",
    "atomic_write",
]

log = logging.getLogger(__name__)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class EdgeListFormat:
    delimiter: str | None = None  # None: any run of whitespace
    comment_prefix: str = "#"
    directed: bool = False


def iter_edge_list(path, fmt: EdgeListFormat = EdgeListFormat()) -> Iterator[tuple[str, str]]:
    """Yield raw ``(label, label)`` pairs in file order without buffering the file."""
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            stripped = line.strip()
            if not stripped or stripped.startswith(fmt.comment_prefix):
                continue
            tokens = stripped.split(fmt.delimiter)
            if len(tokens) != 2:
                raise EdgeListFormatError(path, lineno, stripped)
            yield tokens[0].strip(), tokens[1].strip()


def read_edge_list(path, fmt: EdgeListFormat = EdgeListFormat()) -> list[tuple[str, str]]:
    return list(iter_edge_list(path, fmt))


@contextmanager
def atomic_write(path, mode="w"):
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, mode, encoding="utf-8", newline="") as fh:
            yield fh
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def write_edge_list(edges, path) -> int:
    """Write ``(u, v)`` pairs one per line; returns the number of lines."""
    n = 0
    with atomic_write(path) as fh:
        for u, v in edges:
            fh.write(f"{u} {v}\n")
            n += 1
    return n


def format_number(value: float) -> str:
    value = float(value)
    if value.is_integer() and abs(value) < 2**53:
        return str(int(value))
    return repr(value)


def write_curve(curve: MetricCurve, path, metric_name: str = "") -> None:
    with atomic_write(path) as fh:
        fh.write("x,y\n")
        for x, y in curve.points():
            fh.write(f"{format_number(x)},{format_number(y)}\n")
    log.debug("wrote %s curve (%d points) to %s", metric_name or "metric", len(curve), path)


def read_curve(path) -> MetricCurve:
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or [c.strip() for c in rows[0]] != ["x", "y"]:
        raise TopologyError(f"{path}: expected header 'x,y'")
    points = []
    for lineno, row in enumerate(rows[1:], 2):
        if not row:
            continue
        if len(row) != 2:
            raise TopologyError(f"{path}:{lineno}: expected 2 columns")
        points.append((float(row[0]), float(row[1])))
    return MetricCurve.from_points(points)


def write_summary(summary: NetworkSummary, path, dataset: str = "",
                  timestamp: str | None = None) -> None:
    doc = summary.to_dict()
    doc["metadata"] = {
        "dataset": dataset,
        "timestamp": timestamp or datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "tool_version": __version__,
        "format_version": FORMAT_VERSION,
    }
    with atomic_write(path) as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def read_summary(path) -> tuple[NetworkSummary, dict]:
    """Return the summary and its metadata block."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    meta = doc.pop("metadata", {})
    return NetworkSummary(**doc), meta
