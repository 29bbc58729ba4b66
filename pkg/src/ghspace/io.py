"""Reading and writing finite metric spaces.

JSON format::

    {"labels": ["p1", "p2"], "dist": [["0", "3/2"], ["3/2", "0"]]}

Entries may be JSON numbers or strings holding integers, ``a/b`` ratios or
decimals; all are read exactly. ``labels`` is optional.

Matrix format: one row per line, entries separated by whitespace, ``#``
starts a comment, and an optional first line ``labels: p1 p2 ...``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .errors import ParseError
from .metric import FiniteMetricSpace, validate_metric
from .rational import format_rational

FORMATS = ("json", "matrix")


def space_to_json(X: FiniteMetricSpace) -> dict:
    return {"labels": list(X.labels), "dist": [[format_rational(v) for v in row] for row in X.dist]}


def _reject_constant(name):
    raise ParseError(f"{name} is not a finite rational")


def space_from_json(obj) -> FiniteMetricSpace:
    if not isinstance(obj, dict) or "dist" not in obj:
        raise ParseError('expected an object with a "dist" matrix')
    matrix = obj["dist"]
    if not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix):
        raise ParseError('"dist" must be a list of rows')
    return validate_metric(obj.get("labels"), matrix)


def parse_space_json(text: str) -> FiniteMetricSpace:
    try:
        obj = json.loads(text, parse_float=str, parse_int=str, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    return space_from_json(obj)


def parse_space_matrix(text: str) -> FiniteMetricSpace:
    labels = None
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("labels:"):
            if labels is not None or rows:
                raise ParseError("labels line must come first")
            labels = line[len("labels:"):].split()
            continue
        rows.append(line.split())
    if not rows:
        raise ParseError("no matrix rows found")
    return validate_metric(labels, rows)


def dump_space(X: FiniteMetricSpace, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(space_to_json(X), indent=2) + "\n"
    if fmt == "matrix":
        lines = ["labels: " + " ".join(X.labels)]
        lines += [" ".join(format_rational(v) for v in row) for row in X.dist]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def detect_format(text: str) -> str:
    return "json" if text.lstrip().startswith("{") else "matrix"


def load_space(path, fmt: Optional[str] = None) -> FiniteMetricSpace:
    text = Path(path).read_text()
    fmt = fmt or detect_format(text)
    if fmt == "json":
        return parse_space_json(text)
    if fmt == "matrix":
        return parse_space_matrix(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def save_space(X: FiniteMetricSpace, path, fmt: str = "json") -> None:
    Path(path).write_text(dump_space(X, fmt))
