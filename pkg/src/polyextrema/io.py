"""Polygon interchange format and deterministic JSON output.

The interchange format is ``{"vertices": [[x, y], ...]}`` in cyclic order.
Reports are written with every float at 17 significant digits so reruns
are byte-identical and values round-trip exactly.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from polyextrema.errors import PolyExtremaError, PolygonParseError
from polyextrema.geometry import Polygon


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        return "null"
    s = f"{x:.17g}"
    if "." not in s and "e" not in s and "n" not in s:
        s += ".0"
    return s


def dumps(obj, indent: int | None = 2) -> str:
    """JSON text with fixed 17-significant-digit floats; non-finite floats become null."""

    def enc(o, level):
        pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
        end = "" if indent is None else "\n" + " " * (indent * level)
        if o is None or isinstance(o, (bool, np.bool_)):
            return json.dumps(None if o is None else bool(o))
        if isinstance(o, (int, np.integer)):
            return str(int(o))
        if isinstance(o, (float, np.floating)):
            return format_float(o)
        if isinstance(o, str):
            return json.dumps(o)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [pad + json.dumps(str(k)) + ": " + enc(v, level + 1) for k, v in o.items()]
            return "{" + ",".join(items) + end + "}"
        if isinstance(o, (list, tuple, np.ndarray)):
            seq = list(o)
            if not seq:
                return "[]"
            if all(isinstance(v, (int, float, np.integer, np.floating)) and not isinstance(v, bool)
                   for v in seq):
                return "[" + ", ".join(enc(v, level + 1) for v in seq) + "]"
            return "[" + ",".join(pad + enc(v, level + 1) for v in seq) + end + "]"
        if hasattr(o, "to_json_obj"):
            return enc(o.to_json_obj(), level)
        if hasattr(o, "to_dict"):
            return enc(o.to_dict(), level)
        raise TypeError(f"cannot serialize {type(o).__name__}")

    return enc(obj, 0) + "\n"


def write_json(obj, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def parse_polygon(text: str) -> Polygon:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolygonParseError(f"malformed JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise PolygonParseError('expected an object with a "vertices" key')
    verts = data["vertices"]
    if not isinstance(verts, list):
        raise PolygonParseError('"vertices" must be a list of [x, y] pairs')
    for k, v in enumerate(verts):
        ok = (isinstance(v, list) and len(v) == 2
              and all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v))
        if not ok:
            raise PolygonParseError(f"vertex {k} is not a pair of numbers: {v!r}")
    try:
        return Polygon(verts)
    except PolyExtremaError as exc:
        raise PolygonParseError(str(exc)) from None


def read_polygon(path) -> Polygon:
    return parse_polygon(Path(path).read_text(encoding="utf-8"))


def write_polygon(p: Polygon, path) -> None:
    write_json(p.to_json_obj(), path)
