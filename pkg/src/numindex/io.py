"""Space definition files, aliases, matrix inputs and JSON-ready reports."""
from __future__ import annotations

import json
import math
import re
from dataclasses import fields, is_dataclass
from fractions import Fraction
from pathlib import Path

import jsonschema
import numpy as np

from ._rational import fmt
from .errors import PreconditionError
from .space import LpSpace, PolytopeSpace, Space, l1, linf, lp, octagon, polytope

SPACE_SCHEMA = {
    "type": "object",
    "required": ["name", "dim", "kind"],
    "properties": {
        "name": {"type": "string"},
        "dim": {"type": "integer", "minimum": 1},
        "kind": {"enum": ["polytope", "lp"]},
        "vertices": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "items": {"type": ["string", "integer"]}},
        },
        "p": {"type": "number", "minimum": 1},
        "symmetrize": {"type": "boolean"},
    },
    "allOf": [
        {"if": {"properties": {"kind": {"const": "polytope"}}}, "then": {"required": ["vertices"]}},
        {"if": {"properties": {"kind": {"const": "lp"}}}, "then": {"required": ["p"]}},
    ],
}

_ALIAS = re.compile(r"^(linf|l1|l2):(\d+)$|^lp:(\d+):([0-9.]+|inf)$|^octagon$")


class SchemaError(PreconditionError):
    pass


def parse_alias(alias: str) -> Space | None:
    m = _ALIAS.match(alias.strip())
    if not m:
        return None
    if alias.strip() == "octagon":
        return octagon()
    kind, n, n2, p = m.groups()
    if kind == "linf":
        return linf(int(n))
    if kind == "l1":
        return l1(int(n))
    if kind == "l2":
        return lp(int(n), 2)
    p = math.inf if p == "inf" else float(p)
    if p == 1:
        return l1(int(n2))
    if math.isinf(p):
        return linf(int(n2))
    return lp(int(n2), p)


def space_from_dict(doc: dict, *, symmetrize: bool = False, source: str = "<space>") -> Space:
    try:
        jsonschema.validate(doc, SPACE_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"{source}: field {where}: {exc.message}") from exc
    if doc["kind"] == "lp":
        S = LpSpace(doc["dim"], float(doc["p"]), doc["name"])
        return S
    for i, v in enumerate(doc["vertices"]):
        if len(v) != doc["dim"]:
            raise SchemaError(f"{source}: field vertices/{i}: expected {doc['dim']} coordinates, got {len(v)}")
    try:
        return polytope(doc["vertices"], doc["name"], symmetrize=symmetrize or doc.get("symmetrize", False))
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"{source}: {exc}") from exc


def parse_space(ref: str, *, symmetrize: bool = False) -> Space:
    """Resolve an alias (linf:N, l1:N, l2:N, lp:N:P, octagon) or a JSON file path."""
    S = parse_alias(ref)
    if S is not None:
        return S
    path = Path(ref)
    if not path.exists():
        raise SchemaError(f"{ref}: neither a space alias nor an existing file")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{ref}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return space_from_dict(doc, symmetrize=symmetrize, source=ref)


def space_to_dict(S: Space) -> dict:
    if isinstance(S, PolytopeSpace):
        return {
            "name": S.name,
            "dim": S.dim,
            "kind": "polytope",
            "vertices": [[fmt(x) for x in v] for v in S.vertices],
        }
    return {"name": S.name, "dim": S.dim, "kind": "lp", "p": S.p}


def parse_matrix(arg: str) -> list[list]:
    """A JSON 2-D array given inline or as a file path. Floats stay floats."""
    text = arg
    if not arg.lstrip().startswith("["):
        path = Path(arg)
        if not path.exists():
            raise SchemaError(f"{arg}: not an inline matrix or an existing file")
        text = path.read_text(encoding="utf-8")
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"matrix: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError("matrix must be a 2-D JSON array")
    for r in rows:
        for v in r:
            if isinstance(v, bool) or not isinstance(v, (int, float, str)):
                raise SchemaError(f"matrix entry {v!r} is not int, float or 'p/q'")
            if isinstance(v, str):
                try:
                    Fraction(v)
                except (ValueError, ZeroDivisionError) as exc:
                    raise SchemaError(f"matrix entry {v!r} is not a rational literal") from exc
    return rows


def jsonable(obj):
    """Convert results to JSON-safe data; Fractions become "p/q" strings."""
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, np.generic):
        return jsonable(obj.item())
    if isinstance(obj, Space):
        return space_to_dict(obj)
    if hasattr(obj, "entries") and hasattr(obj, "space"):
        return jsonable(obj.entries if isinstance(obj.entries, tuple) else obj.entries.tolist())
    if hasattr(obj, "G") and hasattr(obj, "xstar"):
        return {"x": jsonable(obj.x), "xstar": jsonable(obj.xstar), "G": jsonable(obj.G)}
    if is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in fields(obj) if f.repr}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def report(command: str, space: Space, inputs: dict, result, certifications=(), provenance=None) -> dict:
    return {
        "command": command,
        "space": space_to_dict(space),
        "inputs": jsonable(inputs),
        "result": jsonable(result),
        "certifications": jsonable(list(certifications)),
        "provenance": jsonable(provenance or {"mode": "exact"}),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
