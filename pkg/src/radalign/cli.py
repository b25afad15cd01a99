"""Command-line entry point: ``radalign <command> ...``.

Exit codes: 0 success, 1 malformed input, 2 precondition violation,
3 property-check failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from .alignment import central_fan, radial_fan
from .catalog import enumerate_stable, specialization_poset
from .cones import Cone
from .contraction import circle_data, contract_circle, contraction_radius, delta_m, radius_chain
from .curve import circuit, genus, stability_class
from .errors import MalformedInputError, PropertyCheckError, RadalignError
from .linear import Functional
from .pl import degree_on_vertex, lambda_function, radii, total_degree
from .serialize import (
    circle_to_json,
    cone_from_json,
    curve_to_json,
    dumps,
    fan_to_json,
    functional_to_json,
    load_curve,
    smyth_to_dot,
    smyth_to_json,
)
from .subgraphs import KJSignature, realized_signatures, standard_extensions
from .vz import vz_equivalence, vz_fan


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage mistakes are malformed input
        self.print_usage(sys.stderr)
        self.exit(MalformedInputError.exit_code, f"{self.prog}: error: {message}\n")


def _contracted(arg: str | None) -> list[str] | None:
    if arg is None:
        return None
    return [v for v in arg.split(",") if v]


def _parse_order(text: str) -> list[KJSignature]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"--order is not JSON: {exc}") from exc
    ok = isinstance(data, list) and all(
        isinstance(p, list) and len(p) == 2 and isinstance(p[0], int) and isinstance(p[1], list) for p in data
    )
    if not ok:
        raise MalformedInputError("--order must look like [[2, []], [2, [5]], ...]")
    return [KJSignature.of(k, J) for k, J in data]


def _parse_degrees(text: str) -> dict[str, int]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = {}
        for part in filter(None, text.split(",")):
            key, sep, val = part.partition("=")
            if not sep:
                raise MalformedInputError(f"bad degree entry {part!r}; use vertex=degree")
            try:
                data[key.strip()] = int(val)
            except ValueError as exc:
                raise MalformedInputError(f"degree for {key!r} is not an integer") from exc
    if not isinstance(data, dict) or not all(isinstance(v, int) for v in data.values()):
        raise MalformedInputError("--degrees must map vertex ids to integers")
    return data


def _select_cell(curve, choice: str) -> tuple[Cone, Any]:
    """A cell index into the radial fan, or a path to a cone JSON file."""
    if choice.lstrip("-").isdigit():
        fan = radial_fan(curve)
        i = int(choice)
        if not 0 <= i < len(fan):
            raise MalformedInputError(f"--cell must lie in [0, {len(fan) - 1}]")
        return fan.cells[i], fan.labels[i]
    if not os.path.exists(choice):
        raise MalformedInputError(f"--cell {choice!r} is neither an index nor a file")
    with open(choice, encoding="utf-8") as fh:
        try:
            cone = cone_from_json(json.load(fh))
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"{choice} is not valid JSON: {exc}") from exc
    if tuple(cone.ambient) != curve.generators:
        raise MalformedInputError("cell ambient does not match the curve's edge lengths")
    return cone, None


def _parse_radius(curve, text: str) -> Functional:
    if text == "0":
        return Functional.zero()
    lam = radii(curve)
    if text not in lam:
        raise MalformedInputError(f"--radius must be 0 or a vertex id, got {text!r}")
    return lam[text]


def cmd_analyze(args: argparse.Namespace) -> int:
    curve = load_curve(args.curve)
    g = genus(curve)
    out: dict[str, Any] = {"genus": g, "n": curve.n, "stability": stability_class(curve).value}
    if g == 1:
        circ = circuit(curve)
        lam = lambda_function(curve)
        out["circuit"] = {"vertices": sorted(circ.vertices), "edges": sorted(circ.edges)}
        out["radii"] = {v: functional_to_json(lam[v]) for v in curve.vertex_ids}
        out["degrees"] = {v: degree_on_vertex(lam, v) for v in curve.vertex_ids}
        out["total_degree"] = total_degree(lam)
    sys.stdout.write(dumps(out))
    return 0


def cmd_fan(args: argparse.Namespace) -> int:
    curve = load_curve(args.curve)
    contracted = _contracted(args.contracted)
    if args.mode == "radial":
        if contracted is not None or args.order is not None:
            raise MalformedInputError("--contracted and --order only apply to central and vz modes")
        fan = radial_fan(curve)
    elif args.mode == "central":
        if args.order is not None:
            raise MalformedInputError("--order only applies to vz mode")
        fan = central_fan(curve, contracted)
    else:
        order = standard_extensions(realized_signatures(curve, contracted))[0]
        if args.order is not None:
            # a prefix is completed by the default order; vz_fan rejects non-extensions
            given = _parse_order(args.order)
            order = given + [s for s in order if s not in given]
        fan = vz_fan(curve, order, contracted)
    out = fan_to_json(fan)
    out["meta"]["mode"] = args.mode
    failures = 0
    if args.check_free:
        for item, cell in zip(out["cells"], fan.cells):
            item["free"] = cell.is_free()
            failures += not item["free"]
    sys.stdout.write(dumps(out))
    if failures:
        raise PropertyCheckError(f"{failures} cell(s) are not free")
    return 0


def cmd_delta_m(args: argparse.Namespace) -> int:
    curve = load_curve(args.curve)
    cone, _ = _select_cell(curve, args.cell)
    d = delta_m(curve, cone, args.m)
    out: dict[str, Any] = {"m": args.m, "delta": None, "circle": None}
    if d is not None:
        out["delta"] = functional_to_json(d)
        out["circle"] = circle_to_json(circle_data(curve, cone, d))
    out["chain"] = [
        {"radius": functional_to_json(r), "eta": cd.eta, "tau": cd.tau}
        for r in radius_chain(curve, cone)
        for cd in [circle_data(curve, cone, r)]
    ]
    sys.stdout.write(dumps(out))
    if d is None:
        raise PropertyCheckError(f"no {args.m}-stable radius on this cell")
    return 0


def cmd_contract(args: argparse.Namespace) -> int:
    curve = load_curve(args.curve)
    cone, _ = _select_cell(curve, args.cell)
    delta = _parse_radius(curve, args.radius)
    smyth = contract_circle(curve, cone, delta)
    out = {"smyth": smyth_to_json(smyth), "dot": smyth_to_dot(smyth)}
    sys.stdout.write(dumps(out))
    return 0


def cmd_radius(args: argparse.Namespace) -> int:
    curve = load_curve(args.curve)
    cone, _ = _select_cell(curve, args.cell)
    r = contraction_radius(curve, cone, _parse_degrees(args.degrees))
    sys.stdout.write(dumps({"radius": functional_to_json(r), "text": str(r)}))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    cat = enumerate_stable(args.n, args.max_edges)
    out = {
        "n": cat.n,
        "max_edges": cat.max_edges,
        "counts": {str(k): v for k, v in cat.counts().items()},
        "total": len(cat),
        "curves": [curve_to_json(c) for c in cat],
    }
    if args.poset:
        out["specializations"] = [list(t) for t in specialization_poset(cat)]
    sys.stdout.write(dumps(out))
    return 0


def cmd_check_equivalence(args: argparse.Namespace) -> int:
    curve = load_curve(args.curve)
    rep = vz_equivalence(curve, _contracted(args.contracted))
    out = {
        "ok": rep.ok,
        "contracted": list(rep.contracted),
        "orders": [[str(s) for s in o] for o in rep.orders],
        "central_cells": rep.central_cells,
        "vz_cells": rep.vz_cells,
        "vz_equals_central": rep.vz_equals_central,
        "orders_agree": rep.orders_agree,
        "order_hazards": [[[str(a), str(b)] for a, b in h] for h in rep.hazards],
    }
    sys.stdout.write(dumps(out))
    if not rep.ok:
        raise PropertyCheckError("blowup fan and central fan disagree")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="radalign", description="Exact alignment and contraction tools for genus-one tropical curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="genus, circuit, stability and radius table")
    a.add_argument("curve")
    a.set_defaults(func=cmd_analyze)

    f = sub.add_parser("fan", help="radial, central or blowup fan as JSON")
    f.add_argument("curve")
    f.add_argument("--mode", choices=["radial", "central", "vz"], default="radial")
    f.add_argument("--order", help="signature order (or a prefix of one) for vz mode, e.g. '[[2, []], [2, [5]]]'")
    f.add_argument("--contracted", help="comma-separated vertices marked for contraction")
    f.add_argument("--check-free", action="store_true", help="test every cell for freeness (exit 3 if one fails)")
    f.set_defaults(func=cmd_fan)

    d = sub.add_parser("delta-m", help="smallest m-stable radius on a cell")
    d.add_argument("curve")
    d.add_argument("--cell", required=True, help="radial cell index or cone JSON file")
    d.add_argument("--m", type=int, required=True)
    d.set_defaults(func=cmd_delta_m)

    c = sub.add_parser("contract", help="contract the disc of a given radius")
    c.add_argument("curve")
    c.add_argument("--cell", required=True, help="radial cell index or cone JSON file")
    c.add_argument("--radius", required=True, help="0 or a vertex id whose radius is used")
    c.set_defaults(func=cmd_contract)

    r = sub.add_parser("radius", help="contraction radius of a degree labeling")
    r.add_argument("curve")
    r.add_argument("--cell", required=True, help="radial cell index or cone JSON file")
    r.add_argument("--degrees", required=True, help='"A=1,D=1" or a JSON object')
    r.set_defaults(func=cmd_radius)

    e = sub.add_parser("enumerate", help="catalog of stable genus-one graphs")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--max-edges", type=int, required=True)
    e.add_argument("--poset", action="store_true", help="include single-edge contractions")
    e.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("check-equivalence", help="compare blowup and central fans")
    q.add_argument("curve")
    q.add_argument("--contracted", help="comma-separated vertices marked for contraction")
    q.set_defaults(func=cmd_check_equivalence)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RadalignError as exc:
        sys.stderr.write(f"radalign: {exc}\n")
        return exc.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
