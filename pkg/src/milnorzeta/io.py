"""JSON file formats for polynomials and curve configurations."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import jsonschema

from .errors import InputError
from .newton import PolySupport
from .plumb import CurveConfig

POLY_SCHEMA = {
    "type": "object",
    "required": ["vars", "terms"],
    "properties": {
        "vars": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "terms": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["exp"],
                "properties": {
                    "exp": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "coef": {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

CONFIG_SCHEMA = {
    "type": "object",
    "required": ["components"],
    "properties": {
        "components": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["degree"],
                "properties": {
                    "degree": {"type": "integer", "minimum": 1},
                    "internal_nodes": {"type": "integer", "minimum": 0},
                },
                "additionalProperties": False,
            },
        },
        "intersections": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "j", "count"],
                "properties": {
                    "i": {"type": "integer", "minimum": 0},
                    "j": {"type": "integer", "minimum": 0},
                    "count": {"type": "integer", "minimum": 0},
                },
                "additionalProperties": False,
            },
        },
        "m": {"type": "integer", "minimum": 1},
    },
    "additionalProperties": False,
}


def _load(path: str | Path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _validate(data, schema):
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        raise InputError(f"schema violation: {exc.message}") from None


def poly_from_json(data: dict) -> tuple[PolySupport, list[str]]:
    _validate(data, POLY_SCHEMA)
    names = data["vars"]
    terms = []
    for t in data["terms"]:
        if len(t["exp"]) != len(names):
            raise InputError(f"exponent {t['exp']} does not match {len(names)} variables")
        terms.append((t["exp"], Fraction(t.get("coef", "1").replace(" ", ""))))
    f = PolySupport.from_terms(len(names), terms)
    if f.is_empty():
        raise InputError("polynomial is zero after summing duplicate terms")
    return f, names


def read_poly(path: str | Path) -> tuple[PolySupport, list[str]]:
    return poly_from_json(_load(path))


def config_from_json(data: dict) -> tuple[CurveConfig, int | None]:
    _validate(data, CONFIG_SCHEMA)
    comps = tuple((c["degree"], c.get("internal_nodes", 0)) for c in data["components"])
    inter = {}
    for item in data.get("intersections", []):
        i, j = item["i"], item["j"]
        if i == j or max(i, j) >= len(comps):
            raise InputError(f"bad intersection pair ({i}, {j})")
        inter[(min(i, j), max(i, j))] = item["count"]
    return CurveConfig(comps, inter), data.get("m")


def read_config(path: str | Path) -> tuple[CurveConfig, int | None]:
    return config_from_json(_load(path))


def config_to_json(cfg: CurveConfig, m: int | None = None) -> dict:
    out = {
        "components": [{"degree": e, "internal_nodes": delta} for e, delta in cfg.components],
        "intersections": [{"i": i, "j": j, "count": c} for (i, j), c in sorted(cfg.intersections.items())],
    }
    if m is not None:
        out["m"] = m
    return out


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2)
