"""JSON and DOT encodings.

Every ``*_to_json`` function returns plain data (dicts, lists, strings,
ints) whose dump with sorted keys is byte-stable; the matching
``*_from_json`` functions invert them exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable

from .alignment import CentralAlignment, RadialAlignment
from .cones import Cone, Fan
from .contraction import CircleData, SingularPoint, SmythGraph
from .curve import Edge, Leg, TropicalCurve, Vertex, circuit, validate
from .errors import MalformedInputError
from .linear import Functional

__all__ = [
    "dumps",
    "rational",
    "functional_to_json",
    "functional_from_json",
    "curve_to_json",
    "curve_from_json",
    "load_curve",
    "cone_to_json",
    "cone_from_json",
    "fan_to_json",
    "fan_from_json",
    "smyth_to_json",
    "smyth_from_json",
    "circle_to_json",
    "curve_to_dot",
    "smyth_to_dot",
]


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise MalformedInputError(msg)


def _int(x: Any, what: str) -> int:
    _expect(isinstance(x, int) and not isinstance(x, bool), f"{what} must be an integer")
    return x


def functional_to_json(f: Functional) -> dict[str, int]:
    return f.as_dict()


def functional_from_json(data: Any) -> Functional:
    _expect(isinstance(data, dict), "a linear form must be an object {generator: coefficient}")
    for k, v in data.items():
        _expect(isinstance(k, str) and k != "", "generator names must be nonempty strings")
        _int(v, f"coefficient of {k!r}")
    return Functional.of(data)


def _length_to_json(f: Functional) -> str | dict[str, int]:
    if len(f.terms) == 1 and f.terms[0][1] == 1:
        return f.terms[0][0]
    return functional_to_json(f)


def _length_from_json(data: Any, eid: str) -> Functional:
    if isinstance(data, str):
        _expect(data != "", f"edge {eid!r} has an empty length name")
        return Functional.gen(data)
    return functional_from_json(data)


def curve_to_json(curve: TropicalCurve) -> dict[str, Any]:
    return {
        "vertices": [{"id": v.id, "genus": v.genus} for v in curve.vertices],
        "edges": [{"id": e.id, "ends": list(e.ends), "length": _length_to_json(e.length)} for e in curve.edges],
        "legs": [{"label": l.label, "at": l.at} for l in curve.legs],
    }


def curve_from_json(data: Any, derived_lengths: bool = False, check: bool = True) -> TropicalCurve:
    """Parse a curve; with ``check`` every curve invariant is enforced."""
    _expect(isinstance(data, dict), "a curve must be a JSON object")
    unknown = set(data) - {"vertices", "edges", "legs"}
    _expect(not unknown, f"unknown curve keys {sorted(unknown)}")
    _expect(isinstance(data.get("vertices"), list), "curve needs a 'vertices' list")
    verts = []
    for item in data["vertices"]:
        _expect(isinstance(item, dict) and isinstance(item.get("id"), str), "each vertex needs a string 'id'")
        g = _int(item.get("genus", 0), f"genus of {item['id']!r}")
        verts.append(Vertex(item["id"], g))
    edges = []
    for item in data.get("edges", []):
        _expect(isinstance(item, dict) and isinstance(item.get("id"), str), "each edge needs a string 'id'")
        ends = item.get("ends")
        _expect(
            isinstance(ends, list) and len(ends) == 2 and all(isinstance(x, str) for x in ends),
            f"edge {item['id']!r} needs 'ends' as two vertex ids",
        )
        length = _length_from_json(item.get("length", item["id"]), item["id"])
        edges.append(Edge(item["id"], (ends[0], ends[1]), length))
    legs = []
    for item in data.get("legs", []):
        _expect(isinstance(item, dict) and isinstance(item.get("at"), str), "each leg needs a string 'at'")
        legs.append(Leg(_int(item.get("label"), "leg label"), item["at"]))
    curve = TropicalCurve(tuple(verts), tuple(edges), tuple(legs))
    if check:
        problems = validate(curve, derived_lengths=derived_lengths)
        _expect(not problems, "invalid curve: " + "; ".join(problems))
    return curve


def load_curve(path: str) -> TropicalCurve:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path} is not valid JSON: {exc}") from exc
    return curve_from_json(data)


def cone_to_json(cone: Cone) -> dict[str, Any]:
    return {
        "ambient": list(cone.ambient),
        "inequalities": [functional_to_json(cone.functional(v)) for v in cone.facets()],
        "equalities": [functional_to_json(cone.functional(v)) for v in cone.equality_basis()],
        "rays": [list(r) for r in cone.rays],
        "dim": cone.dim,
        "interior_sample": [rational(x) for x in cone.interior_sample],
    }


def cone_from_json(data: Any) -> Cone:
    _expect(isinstance(data, dict), "a cone must be a JSON object")
    amb = data.get("ambient")
    _expect(isinstance(amb, list) and all(isinstance(a, str) for a in amb), "cone needs an 'ambient' list of names")
    ineqs = [functional_from_json(f) for f in data.get("inequalities", [])]
    eqs = [functional_from_json(f) for f in data.get("equalities", [])]
    for f in ineqs + eqs:
        _expect(f.support <= set(amb), "constraint mentions a generator outside the ambient set")
    return Cone(amb, ineqs).with_equalities(*eqs)


def _label_to_json(label: Any) -> Any:
    if label is None:
        return None
    if isinstance(label, RadialAlignment):
        return {"kind": "radial", "blocks": [list(b) for b in label.blocks]}
    if isinstance(label, CentralAlignment):
        return {
            "kind": "central",
            "pivot": label.pivot,
            "radius": functional_to_json(label.radius),
            "interior": list(label.interior),
            "stable": label.stable,
        }
    raise TypeError(f"cannot encode label {label!r}")


def _label_from_json(data: Any, cone: Cone) -> Any:
    if data is None:
        return None
    _expect(isinstance(data, dict) and data.get("kind") in ("radial", "central"), "unknown cell label")
    if data["kind"] == "radial":
        return RadialAlignment(tuple(tuple(b) for b in data["blocks"]))
    return CentralAlignment(
        data["pivot"], functional_from_json(data["radius"]), tuple(data["interior"]), cone, bool(data["stable"])
    )


def fan_to_json(fan: Fan) -> dict[str, Any]:
    cells = []
    for i, c in enumerate(fan.cells):
        item = cone_to_json(c)
        del item["ambient"]
        item["label"] = _label_to_json(fan.labels[i]) if fan.labels is not None else None
        cells.append(item)
    meta = {k: v for k, v in fan.meta.items() if isinstance(v, (str, int, list))}
    return {"ambient": list(fan.ambient), "parent": cone_to_json(fan.parent), "cells": cells, "meta": meta}


def fan_from_json(data: Any) -> Fan:
    _expect(isinstance(data, dict) and isinstance(data.get("cells"), list), "a fan needs a 'cells' list")
    parent = cone_from_json(data.get("parent"))
    cells, labels = [], []
    for item in data["cells"]:
        c = cone_from_json({"ambient": list(parent.ambient), **item})
        cells.append(c)
        labels.append(_label_from_json(item.get("label"), c))
    has_labels = any(l is not None for l in labels)
    return Fan(parent, tuple(cells), tuple(labels) if has_labels else None, dict(data.get("meta", {})))


def smyth_to_json(smyth: SmythGraph) -> dict[str, Any]:
    sing = None
    if smyth.singular is not None:
        s = smyth.singular
        sing = {"id": s.id, "branches": list(s.branches), "genus": s.genus, "delta_invariant": s.delta_invariant}
    return {
        "graph": curve_to_json(smyth.graph),
        "singular": sing,
        "markings": sorted(smyth.markings),
        "total_genus": smyth.total_genus(),
    }


def smyth_from_json(data: Any) -> SmythGraph:
    _expect(isinstance(data, dict) and "graph" in data, "a contracted curve needs a 'graph'")
    graph = curve_from_json(data["graph"], check=False)
    sing = data.get("singular")
    if sing is None:
        return SmythGraph(graph, None)
    _expect(isinstance(sing, dict) and isinstance(sing.get("branches"), list), "singular point needs 'branches'")
    ids = set(graph.vertex_ids)
    _expect(all(b in ids for b in sing["branches"]), "singular point names an unknown branch vertex")
    return SmythGraph(graph, SingularPoint(tuple(sing["branches"]), sing.get("id", "E")))


def circle_to_json(cd: CircleData) -> dict[str, Any]:
    return {
        "radius": functional_to_json(cd.radius),
        "incident_edges": sorted(cd.incident_edges),
        "incident_legs": sorted(cd.incident_legs),
        "excident_edges": sorted(cd.excident_edges),
        "excident_legs": sorted(cd.excident_legs),
        "interior": sorted(cd.interior),
        "boundary": sorted(cd.boundary),
        "eta": cd.eta,
        "tau": cd.tau,
    }


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot_body(curve: TropicalCurve, core: Iterable[str]) -> list[str]:
    core = set(core)
    lines = []
    for v in curve.vertices:
        shape = "doublecircle" if v.id in core else "circle"
        label = v.id if v.genus == 0 else f"{v.id} (g={v.genus})"
        lines.append(f"  {_quote(v.id)} [shape={shape}, label={_quote(label)}];")
    for e in curve.edges:
        a, b = e.ends
        lines.append(f"  {_quote(a)} -- {_quote(b)} [label={_quote(e.id + ': ' + str(e.length))}];")
    for l in curve.legs:
        node = f"leg{l.label}"
        lines.append(f"  {_quote(node)} [shape=plaintext, label={_quote(str(l.label))}];")
        lines.append(f"  {_quote(l.at)} -- {_quote(node)};")
    return lines


def curve_to_dot(curve: TropicalCurve) -> str:
    lines = ["graph curve {"] + _dot_body(curve, circuit(curve).vertices) + ["}"]
    return "\n".join(lines) + "\n"


def smyth_to_dot(smyth: SmythGraph) -> str:
    s = smyth.singular
    core = circuit(smyth.graph).vertices if s is None else ()
    lines = ["graph contracted {"] + _dot_body(smyth.graph, core)
    if s is not None:
        lines.append(f"  {_quote(s.id)} [shape=star, label={_quote(f'{s.id} (m={s.m})')}];")
        for b in s.branches:
            lines.append(f"  {_quote(s.id)} -- {_quote(b)} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
