"""JSON file formats for orbifold presentations and bare diamonds.

Two document kinds, both a single top-level JSON object:

* orbifold file, either explicit inertia data::

      {"name": "...", "dim": 2,
       "sectors": [{"order": 2, "exponents": [1, 1],
                    "diamond": [{"p": 0, "q": 0, "h": 1}],
                    "count": 16, "label": "..."}, ...]}

  or a generator request::

      {"family": "kummer", "params": {"torus_dim_n": 2}, "name": "..."}
      {"family": "projective_quotient",
       "params": {"proj_dim_n": 2, "cyclic_orders": [3], "weights": [[0, 1, 2]]}}

* diamond file::

      {"name": "...", "dim": 2, "entries": [{"p": 0, "q": 0, "h": 1}, ...]}

Grades are JSON integers or exact strings "a/b" in lowest terms, never
decimals.  The optional sector field "count" repeats a sector that many
times and is expanded at parse time; the core types never see it.  The
parser is strict: unknown fields are errors.  Serialization is canonical
(sectors sorted by order, exponents, label; entries sorted by p, q), so
output re-parses and re-serializes to identical bytes.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .diamond import Grade, HodgeDiamond, format_grade
from .errors import ParseError
from .inertia import InertiaComponent, OrbifoldPresentation
from .quotient import KummerSpec, ProjectiveQuotientSpec, build_kummer, build_projective_quotient


def grade_to_json(g: Grade) -> int | str:
    return g.numerator if g.denominator == 1 else f"{g.numerator}/{g.denominator}"


_GRADE_RE = re.compile(r"-?\d+(/\d+)?$")


def grade_from_json(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"{where}: grade must be an integer or 'a/b' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseError(f"{where}: decimal grades are not exact; write e.g. \"3/2\"")
    if isinstance(value, str):
        if not _GRADE_RE.match(value):
            raise ParseError(f"{where}: grades must be written \"a/b\", got {value!r}")
        try:
            return Fraction(value)
        except ZeroDivisionError as exc:
            raise ParseError(f"{where}: zero denominator in grade {value!r}") from exc
    raise ParseError(f"{where}: grade must be an integer or 'a/b' string, got {value!r}")


def _require_int(value: Any, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    return value


def _require_str(value: Any, where: str) -> str:
    if not isinstance(value, str):
        raise ParseError(f"{where}: expected a string, got {value!r}")
    return value


def _require_keys(obj: dict, required: set[str], optional: set[str], where: str):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object, got {type(obj).__name__}")
    keys = set(obj)
    missing = required - keys
    if missing:
        raise ParseError(f"{where}: missing field(s) {sorted(missing)}")
    unknown = keys - required - optional
    if unknown:
        raise ParseError(f"{where}: unknown field(s) {sorted(unknown)}")


def _entries_from_json(raw: Any, where: str) -> dict[tuple[Fraction, Fraction], int]:
    if not isinstance(raw, list):
        raise ParseError(f"{where}: expected a list of {{p, q, h}} objects")
    entries: dict[tuple[Fraction, Fraction], int] = {}
    for k, item in enumerate(raw):
        spot = f"{where}[{k}]"
        _require_keys(item, {"p", "q", "h"}, set(), spot)
        p = grade_from_json(item["p"], spot)
        q = grade_from_json(item["q"], spot)
        h = _require_int(item["h"], spot)
        key = (p, q)
        if key in entries:
            raise ParseError(f"{spot}: duplicate entry at ({format_grade(p)},{format_grade(q)})")
        entries[key] = h
    return entries


def _entries_to_json(d: HodgeDiamond) -> list[dict]:
    return [
        {"p": grade_to_json(p), "q": grade_to_json(q), "h": h}
        for (p, q), h in d.items()
    ]


def presentation_from_obj(obj: Any) -> OrbifoldPresentation:
    """Read an orbifold file object (inertia data or generator request)."""
    if not isinstance(obj, dict):
        raise ParseError(f"orbifold file: expected a top-level object, got {type(obj).__name__}")
    if "family" in obj:
        return _presentation_from_generator(obj)
    _require_keys(obj, {"name", "dim", "sectors"}, set(), "orbifold file")
    name = _require_str(obj["name"], "name")
    dim = _require_int(obj["dim"], "dim")
    raw_sectors = obj["sectors"]
    if not isinstance(raw_sectors, list):
        raise ParseError("sectors: expected a list")
    components: list[InertiaComponent] = []
    for k, sector in enumerate(raw_sectors):
        where = f"sectors[{k}]"
        _require_keys(sector, {"order", "exponents", "diamond"}, {"count", "label"}, where)
        order = _require_int(sector["order"], f"{where}.order")
        raw_exps = sector["exponents"]
        if not isinstance(raw_exps, list):
            raise ParseError(f"{where}.exponents: expected a list of integers")
        exponents = [_require_int(a, f"{where}.exponents") for a in raw_exps]
        entries = _entries_from_json(sector["diamond"], f"{where}.diamond")
        count = _require_int(sector.get("count", 1), f"{where}.count")
        if count < 1:
            raise ParseError(f"{where}.count: must be >= 1, got {count}")
        label = _require_str(sector.get("label", ""), f"{where}.label")
        coarse_dim = sum(1 for a in exponents if a == 0)
        coarse = HodgeDiamond(coarse_dim, entries)
        component = InertiaComponent(order, exponents, coarse, label=label)
        components.extend([component] * count)
    return OrbifoldPresentation(dim, components, name=name)


def _presentation_from_generator(obj: dict) -> OrbifoldPresentation:
    _require_keys(obj, {"family", "params"}, {"name"}, "generator file")
    family = _require_str(obj["family"], "family")
    params = obj["params"]
    name = _require_str(obj["name"], "name") if "name" in obj else None
    if family == "kummer":
        _require_keys(params, {"torus_dim_n"}, set(), "params")
        spec = KummerSpec(_require_int(params["torus_dim_n"], "params.torus_dim_n"))
        return build_kummer(spec, name=name)
    if family == "projective_quotient":
        _require_keys(params, {"proj_dim_n", "cyclic_orders", "weights"}, set(), "params")
        orders = params["cyclic_orders"]
        weights = params["weights"]
        if not isinstance(orders, list):
            raise ParseError("params.cyclic_orders: expected a list of integers")
        if not isinstance(weights, list) or not all(isinstance(r, list) for r in weights):
            raise ParseError("params.weights: expected a list of integer rows")
        spec = ProjectiveQuotientSpec(
            _require_int(params["proj_dim_n"], "params.proj_dim_n"),
            tuple(_require_int(m, "params.cyclic_orders") for m in orders),
            tuple(tuple(_require_int(w, "params.weights") for w in row) for row in weights),
        )
        return build_projective_quotient(spec, name=name)
    raise ParseError(f"unknown generator family {family!r}")


def presentation_to_obj(p: OrbifoldPresentation) -> dict:
    """Canonical orbifold file object: explicit sectors, canonically sorted."""
    sectors = []
    for c in sorted(p.components, key=lambda c: c.sort_key()):
        sector: dict = {
            "order": c.order_l,
            "exponents": list(c.exponents),
            "diamond": _entries_to_json(c.coarse_diamond),
        }
        if c.label:
            sector["label"] = c.label
        sectors.append(sector)
    return {"name": p.name, "dim": p.dim_n, "sectors": sectors}


def diamond_from_obj(obj: Any) -> tuple[str, HodgeDiamond]:
    """Read a diamond file object; returns (name, diamond)."""
    _require_keys(obj, {"name", "dim", "entries"}, set(), "diamond file")
    name = _require_str(obj["name"], "name")
    dim = _require_int(obj["dim"], "dim")
    entries = _entries_from_json(obj["entries"], "entries")
    return name, HodgeDiamond(dim, entries)


def diamond_to_obj(name: str, d: HodgeDiamond) -> dict:
    return {"name": name, "dim": d.dim_n, "entries": _entries_to_json(d)}


def dumps(obj: dict) -> str:
    """Canonical JSON text (two-space indent, insertion order)."""
    return json.dumps(obj, indent=2, ensure_ascii=True)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
