"""JSON schemas, parsing and report emission."""

from __future__ import annotations

import json
import os
from typing import Any

import jsonschema

from .arcs import Arc, ArcDiagram, arc_of, module_of
from .quiver import Quiver
from .strings import StringModule, from_triple

SIGN = {"enum": ["+", "-"]}

QUIVER_SCHEMA = {
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 2},
        "epsilon": {"type": "array", "items": SIGN, "minItems": 2},
    },
    "required": ["n", "epsilon"],
    "additionalProperties": False,
}

MODULE_SCHEMA = {
    "type": "object",
    "properties": {
        "i": {"type": "integer", "minimum": 0},
        "j": {"type": "integer", "minimum": 0},
        "l": {"type": "integer", "minimum": 0},
        "lift": {"type": "array", "items": {"type": "integer"},
                 "minItems": 2, "maxItems": 2},
    },
    "anyOf": [{"required": ["i", "j", "l"]}, {"required": ["lift"]}],
    "additionalProperties": False,
}

ARC_SCHEMA = {
    "type": "object",
    "properties": {
        "i": {"type": "integer", "minimum": 0},
        "j": {"type": "integer", "minimum": 0},
        "lambda": {"type": "integer"},
    },
    "required": ["i", "j", "lambda"],
    "additionalProperties": False,
}

DIAGRAM_SCHEMA = {
    "oneOf": [
        {"type": "array", "items": MODULE_SCHEMA},
        {
            "type": "object",
            "properties": {
                "quiver": QUIVER_SCHEMA,
                "modules": {"type": "array", "items": MODULE_SCHEMA},
                "arcs": {"type": "array", "items": ARC_SCHEMA},
            },
            "oneOf": [{"required": ["modules"]}, {"required": ["arcs"]}],
        },
    ]
}


_VALIDATORS: dict[int, Any] = {}


def validate(obj, schema):
    v = _VALIDATORS.get(id(schema))
    if v is None:
        cls = jsonschema.validators.validator_for(schema)
        cls.check_schema(schema)
        v = _VALIDATORS[id(schema)] = cls(schema)
    err = jsonschema.exceptions.best_match(v.iter_errors(obj))
    if err is not None:
        raise err


def load_json(arg: str) -> Any:
    """Parse ``arg`` as JSON text, or as the path of a JSON file."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(arg)


def parse_quiver(obj) -> Quiver:
    validate(obj, QUIVER_SCHEMA)
    return Quiver.from_json(obj)


def parse_module(Q: Quiver, obj) -> StringModule:
    validate(obj, MODULE_SCHEMA)
    M = None
    if "i" in obj:
        M = from_triple(Q, obj["i"], obj["j"], obj["l"])
    if "lift" in obj:
        s, e = obj["lift"]
        L = StringModule.from_lift(Q, s, e)
        if M is not None and M != L:
            raise ValueError(f"lift {obj['lift']} does not match ({obj['i']},{obj['j']};{obj['l']})")
        M = L
    return M


def parse_arc(Q: Quiver, obj) -> StringModule:
    validate(obj, ARC_SCHEMA)
    if obj["i"] >= Q.n or obj["j"] >= Q.n:
        raise ValueError(f"arc endpoint out of range for n={Q.n}")
    return module_of(Arc(Q, obj["i"], obj["j"], obj["lambda"]))


def parse_modules(Q: Quiver, obj) -> list[StringModule]:
    """Modules from a bare list, a module-form diagram, or an arc-form diagram."""
    validate(obj, DIAGRAM_SCHEMA)
    if isinstance(obj, list):
        return [parse_module(Q, m) for m in obj]
    if "quiver" in obj and parse_quiver(obj["quiver"]) != Q:
        raise ValueError("diagram quiver differs from --quiver")
    if "modules" in obj:
        return [parse_module(Q, m) for m in obj["modules"]]
    return [parse_arc(Q, a) for a in obj["arcs"]]


def parse_diagram(obj, Q: Quiver | None = None) -> ArcDiagram:
    if Q is None:
        if not isinstance(obj, dict) or "quiver" not in obj:
            raise ValueError("diagram needs a quiver")
        Q = parse_quiver(obj["quiver"])
    return ArcDiagram(Q, tuple(parse_modules(Q, obj)))


def module_to_json(M: StringModule) -> dict:
    return {"i": M.i, "j": M.j, "l": M.l, "lift": [M.start, M.end]}


def arc_to_json(M: StringModule) -> dict:
    a = arc_of(M)
    return {"i": a.i, "j": a.j, "lambda": a.winding}


def diagram_to_json(D: ArcDiagram) -> dict:
    return {"quiver": D.quiver.to_json(),
            "modules": [module_to_json(M) for M in D.modules]}


def emit_report(result: dict) -> str:
    from . import __version__

    body = dict(result)
    body["version"] = __version__
    return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
