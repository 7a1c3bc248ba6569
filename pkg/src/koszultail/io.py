"""JSON point files and ideal files."""

from __future__ import annotations

import json
from pathlib import Path

from .exactla import DEFAULT_PRIME, is_prime
from .geometry import PointSet
from .polyring import ParseError, Polynomial, default_names, parse_polynomial


class InputError(ValueError):
    """Malformed input file; the message says where."""


def _field(data: dict, source: str, override: int | None) -> int:
    p = data.get("field", override if override is not None else DEFAULT_PRIME)
    if not isinstance(p, int) or not is_prime(p):
        raise InputError(f"{source}: field must be a prime integer, got {p!r}")
    if override is not None and p != override:
        raise InputError(f"{source}: file declares field {p} but --field {override} was given")
    return p


def points_from_dict(data: dict, source: str = "<points>", field: int | None = None) -> PointSet:
    p = _field(data, source, field)
    n = data.get("ambient_dim")
    pts = data.get("points")
    if not isinstance(n, int) or n < 1:
        raise InputError(f"{source}: ambient_dim must be a positive integer")
    if not isinstance(pts, list) or not pts:
        raise InputError(f"{source}: points must be a non-empty list")
    for k, pt in enumerate(pts):
        if not isinstance(pt, list) or len(pt) != n + 1 or not all(isinstance(x, int) for x in pt):
            raise InputError(f"{source}: points[{k}] must be a list of {n + 1} integers")
        if all(x % p == 0 for x in pt):
            raise InputError(f"{source}: points[{k}] is zero mod {p}")
    try:
        return PointSet(n, tuple(tuple(x % p for x in pt) for pt in pts), p)
    except ValueError as exc:
        raise InputError(f"{source}: {exc}") from exc


def ideal_from_dict(data: dict, source: str = "<ideal>",
                    field: int | None = None) -> tuple[list[str], list[Polynomial]]:
    p = _field(data, source, field)
    names = data.get("variables")
    gens = data.get("generators")
    if not isinstance(names, list) or not names or not all(isinstance(v, str) for v in names):
        raise InputError(f"{source}: variables must be a non-empty list of names")
    if len(set(names)) != len(names):
        raise InputError(f"{source}: duplicate variable names")
    if not isinstance(gens, list):
        raise InputError(f"{source}: generators must be a list of strings")
    polys = []
    for k, text in enumerate(gens):
        if not isinstance(text, str):
            raise InputError(f"{source}: generators[{k}] is not a string")
        try:
            f = parse_polynomial(text, names, p)
        except ParseError as exc:
            raise InputError(f"{source}: generators[{k}]: {exc}") from exc
        if not f.is_homogeneous():
            raise InputError(f"{source}: generators[{k}] is not homogeneous")
        polys.append(f)
    return names, polys


def load(path: str | Path, field: int | None = None):
    """Read a point file or an ideal file, telling them apart by their keys."""
    source = str(path)
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"{source}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{source}: expected a JSON object")
    if "points" in data:
        return points_from_dict(data, source, field)
    if "generators" in data:
        return ideal_from_dict(data, source, field)
    raise InputError(f"{source}: neither a point file (points) nor an ideal file (generators)")


def points_to_dict(X: PointSet) -> dict:
    return {"field": X.p, "ambient_dim": X.ambient_dim, "points": [list(pt) for pt in X.points]}


def ideal_to_dict(names: list[str], gens: list[Polynomial]) -> dict:
    p = gens[0].p if gens else DEFAULT_PRIME
    return {"field": p, "variables": list(names), "generators": [g.format(names) for g in gens]}


def dump(obj: dict) -> str:
    """Points one per line; everything else in standard indented JSON."""
    if "points" in obj:
        rows = ",\n    ".join(json.dumps(pt) for pt in obj["points"])
        return (f'{{\n  "field": {obj["field"]},\n  "ambient_dim": {obj["ambient_dim"]},\n'
                f'  "points": [\n    {rows}\n  ]\n}}\n')
    return json.dumps(obj, indent=2) + "\n"


__all__ = [
    "InputError", "load", "dump", "points_from_dict", "ideal_from_dict",
    "points_to_dict", "ideal_to_dict", "default_names",
]
