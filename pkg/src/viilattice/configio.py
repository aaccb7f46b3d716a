"""Reading and writing curve configurations as JSON documents.

The on-disk shape:

    {
      "b2": 3,
      "curves": [
        {"id": 0, "kind": "nodal_rational", "self_int": -2},
        {"id": 1, "kind": "smooth_rational", "self_int": -2}
      ],
      "intersections": [[0, 1, 1]]
    }

``intersections`` lists unordered pairs with their multiplicity; omitted
pairs are disjoint.  Parsing errors carry the JSON path of the offending
field.  Semantic problems (unknown curve ids, negative multiplicities,
too many elliptic curves and so on) surface as the usual configuration
errors, not as parse errors.
"""

from __future__ import annotations

import json
from typing import Any

from .curves import CURVE_KINDS, Curve, CurveConfig
from .errors import ConfigParseError


def config_from_text(text: str) -> CurveConfig:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigParseError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return config_from_doc(doc)


def load_config(path: str) -> CurveConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return config_from_text(fh.read())


def config_from_doc(doc: Any) -> CurveConfig:
    if not isinstance(doc, dict):
        raise ConfigParseError("document must be a JSON object")
    b2 = _expect_int(doc, "b2")
    curves = doc.get("curves")
    if not isinstance(curves, list):
        raise ConfigParseError("expected a list", "curves")
    parsed = []
    for i, entry in enumerate(curves):
        where = f"curves[{i}]"
        if not isinstance(entry, dict):
            raise ConfigParseError("expected an object", where)
        extra = set(entry) - {"id", "kind", "self_int"}
        if extra:
            raise ConfigParseError(f"unknown keys {sorted(extra)}", where)
        cid = _expect_int(entry, "id", where)
        kind = entry.get("kind")
        if kind not in CURVE_KINDS:
            raise ConfigParseError(
                f"kind must be one of {sorted(CURVE_KINDS)}, got {kind!r}",
                f"{where}.kind",
            )
        self_int = _expect_int(entry, "self_int", where)
        parsed.append(Curve(cid, kind, self_int))
    raw = doc.get("intersections", [])
    if not isinstance(raw, list):
        raise ConfigParseError("expected a list", "intersections")
    pairs = []
    for i, entry in enumerate(raw):
        where = f"intersections[{i}]"
        if (
            not isinstance(entry, list)
            or len(entry) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise ConfigParseError("expected [id, id, multiplicity]", where)
        pairs.append(tuple(entry))
    extra_top = set(doc) - {"b2", "curves", "intersections"}
    if extra_top:
        raise ConfigParseError(f"unknown keys {sorted(extra_top)}")
    return CurveConfig(b2, tuple(parsed), tuple(pairs))


def _expect_int(mapping: dict, key: str, prefix: str = "") -> int:
    where = f"{prefix}.{key}" if prefix else key
    if key not in mapping:
        raise ConfigParseError("missing", where)
    value = mapping[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigParseError(f"expected an integer, got {value!r}", where)
    return value


def config_to_doc(config: CurveConfig) -> dict:
    return {
        "b2": config.b2,
        "curves": [
            {"id": c.id, "kind": c.kind, "self_int": c.self_int}
            for c in config.curves
        ],
        "intersections": [list(t) for t in config.intersections],
    }


def config_to_text(config: CurveConfig) -> str:
    return json.dumps(config_to_doc(config), indent=2) + "\n"
