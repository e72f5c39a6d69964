"""Polygon documents: JSON input files and JSON serialization helpers.

A polygon document is ``{"name": ..., "vertices": [[x, y], ...]}`` where
coordinates are numbers or exact fraction strings like ``"3/4"``.  In the
rational backend decimal literals are read exactly in base 10 (0.1 becomes
1/10), so document -> polygon -> document round-trips value-identically.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .backend import Backend, RATIONAL
from .core import ConvexPolygon, InputError, PairedPolygon, Vec2


def _parse_obj(data: Any) -> tuple[str | None, list]:
    if isinstance(data, list):
        return None, data
    if isinstance(data, dict):
        if "vertices" not in data:
            raise InputError("polygon document needs a 'vertices' field")
        return data.get("name"), data["vertices"]
    raise InputError("polygon document must be a list or an object")


def load_document(path: str, backend: Backend = RATIONAL):
    """Read a polygon document; returns (name, raw vertex list of Vec2)."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            if backend.exact:
                data = json.load(f, parse_float=Fraction)
            else:
                data = json.load(f)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON in {path}: {e}") from e
    name, raw = _parse_obj(data)
    pts = []
    for entry in raw:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise InputError("each vertex must be a [x, y] pair")
        try:
            pts.append(Vec2(backend.convert(entry[0]), backend.convert(entry[1])))
        except (ValueError, TypeError, ZeroDivisionError) as e:
            raise InputError(f"bad coordinate {entry!r}: {e}") from e
    if len(pts) < 3:
        raise InputError("polygon document needs at least 3 vertices")
    return name, pts


def load_polygon(path: str, backend: Backend = RATIONAL) -> ConvexPolygon:
    name, pts = load_document(path, backend)
    poly = ConvexPolygon.from_points(pts, backend)
    if name:
        poly.notes.insert(0, f"name: {name}")
    return poly


def load_paired(path: str, backend: Backend = RATIONAL) -> PairedPolygon:
    """Read a document whose vertices are already a 2n paired list.

    Only structural shape is enforced here; constant-width failures are
    diagnosed downstream so they can be reported as identity failures.
    """
    _, pts = load_document(path, backend)
    if len(pts) % 2 != 0:
        raise InputError("paired polygon document needs an even vertex count")
    return PairedPolygon(pts, len(pts) // 2, backend)


def scalar_json(x, backend: Backend):
    return backend.to_json(x)


def vec_json(p: Vec2, backend: Backend):
    return [backend.to_json(p.x), backend.to_json(p.y)]


def points_json(points, backend: Backend):
    return [vec_json(p, backend) for p in points]


def document_json(points, backend: Backend, name: str | None = None) -> dict:
    doc = {"vertices": points_json(points, backend)}
    if name is not None:
        doc["name"] = name
    return doc


def dump_json(obj, path: str | None = None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    return text
