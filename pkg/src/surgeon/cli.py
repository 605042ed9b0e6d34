"""Command-line interface and file formats.

Diagram files are JSON documents:

    {
      "components": [{"name": "L1", "tb": -1, "rot": 0, "coeff": "+1"}, ...],
      "linking": [[0, 1], [1, 0]],
      "knots": [
        {"name": "K", "kind": "legendrian", "tb": -1, "rot": 0, "lk": [1, 1]},
        {"name": "T", "kind": "transverse", "sl": -1, "sign": "positive", "lk": [-1, 0]}
      ]
    }

Unknown keys are rejected.  Coefficients are the strings "+1", "-1",
"+1/m" or "-1/m".  Reports are JSON with deterministic key order; every
rational value is serialized as an exact "p/q" string (plain "p" when the
denominator is 1), never as a decimal.

Exit codes: 0 success, 1 user error (parse or validation failure, unknown
knot, bad flags), 2 internal error.  Set SURGEON_COLOR=1/0 to force
colored diagnostics on or off; the default follows whether stderr is a
terminal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from .d3 import d3_closed_form, d3_via_expansion, euler_class
from .diagrams import (
    LEGENDRIAN,
    TRANSVERSE,
    CompanionKnot,
    ContactCoefficient,
    Diagnostic,
    LegendrianComponent,
    SurgeryDiagram,
    validate,
)
from .fronts import FrontError, classical_invariants, component_names, parse_front, to_diagram
from .invariants import InvariantReport, invariant_report
from .surgery import expand_to_pm1, homology, linking_matrix


class UserError(Exception):
    """Invalid input; reported without a traceback, exit code 1."""


# ---------------------------------------------------------------------------
# serialization

def frac_str(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _require_int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise UserError(f"{where}: expected an integer, got {value!r}")
    return value


def _require_str(value, where: str) -> str:
    if not isinstance(value, str):
        raise UserError(f"{where}: expected a string, got {value!r}")
    return value


def _check_keys(obj: dict, allowed: set[str], required: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise UserError(f"{where}: unknown key(s) {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise UserError(f"{where}: missing key(s) {sorted(missing)}")


def _int_vector(value, where: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise UserError(f"{where}: expected a list of integers")
    return tuple(_require_int(x, f"{where}[{i}]") for i, x in enumerate(value))


def diagram_from_dict(data: Any) -> SurgeryDiagram:
    if not isinstance(data, dict):
        raise UserError("diagram file must contain a JSON object")
    _check_keys(data, {"components", "linking", "knots"}, {"components", "linking"}, "diagram")
    if not isinstance(data["components"], list):
        raise UserError("'components' must be a list")

    components = []
    for i, raw in enumerate(data["components"]):
        where = f"components[{i}]"
        if not isinstance(raw, dict):
            raise UserError(f"{where}: expected an object")
        _check_keys(raw, {"name", "tb", "rot", "coeff"}, {"name", "tb", "rot", "coeff"}, where)
        try:
            coeff = ContactCoefficient.parse(_require_str(raw["coeff"], f"{where}.coeff"))
        except ValueError as exc:
            raise UserError(f"{where}.coeff: {exc}") from exc
        components.append(LegendrianComponent(
            _require_str(raw["name"], f"{where}.name"),
            _require_int(raw["tb"], f"{where}.tb"),
            _require_int(raw["rot"], f"{where}.rot"),
            coeff))

    if not isinstance(data["linking"], list) or any(not isinstance(r, list) for r in data["linking"]):
        raise UserError("'linking' must be a list of integer rows")
    linking = tuple(_int_vector(row, f"linking[{i}]") for i, row in enumerate(data["linking"]))

    raw_knots = data.get("knots", [])
    if not isinstance(raw_knots, list):
        raise UserError("'knots' must be a list")
    knots = []
    for i, raw in enumerate(raw_knots):
        where = f"knots[{i}]"
        if not isinstance(raw, dict):
            raise UserError(f"{where}: expected an object")
        kind = _require_str(raw.get("kind", ""), f"{where}.kind")
        if kind == LEGENDRIAN:
            _check_keys(raw, {"name", "kind", "tb", "rot", "lk"}, {"name", "kind", "tb", "rot", "lk"}, where)
            knots.append(CompanionKnot(
                name=_require_str(raw["name"], f"{where}.name"), kind=kind,
                lk=_int_vector(raw["lk"], f"{where}.lk"),
                tb=_require_int(raw["tb"], f"{where}.tb"),
                rot=_require_int(raw["rot"], f"{where}.rot")))
        elif kind == TRANSVERSE:
            _check_keys(raw, {"name", "kind", "sl", "sign", "lk"}, {"name", "kind", "sl", "sign", "lk"}, where)
            sign = _require_str(raw["sign"], f"{where}.sign")
            if sign not in ("positive", "negative"):
                raise UserError(f"{where}.sign: expected 'positive' or 'negative', got {sign!r}")
            knots.append(CompanionKnot(
                name=_require_str(raw["name"], f"{where}.name"), kind=kind,
                lk=_int_vector(raw["lk"], f"{where}.lk"),
                sl=_require_int(raw["sl"], f"{where}.sl"),
                transverse_sign=1 if sign == "positive" else -1))
        else:
            raise UserError(f"{where}.kind: expected 'legendrian' or 'transverse', got {kind!r}")

    return SurgeryDiagram(tuple(components), linking, tuple(knots))


def diagram_to_dict(diagram: SurgeryDiagram) -> dict:
    data: dict[str, Any] = {
        "components": [
            {"name": c.name, "tb": c.tb, "rot": c.rot, "coeff": str(c.coeff)}
            for c in diagram.components
        ],
        "linking": [list(row) for row in diagram.linking],
    }
    knots = []
    for w in diagram.knots:
        if w.is_legendrian:
            knots.append({"name": w.name, "kind": w.kind, "tb": w.tb, "rot": w.rot,
                          "lk": list(w.lk)})
        else:
            knots.append({"name": w.name, "kind": w.kind, "sl": w.sl,
                          "sign": "positive" if w.transverse_sign > 0 else "negative",
                          "lk": list(w.lk)})
    if knots:
        data["knots"] = knots
    return data


def load_diagram(path: str) -> SurgeryDiagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UserError(f"{path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UserError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    try:
        return diagram_from_dict(data)
    except UserError as exc:
        raise UserError(f"{path}: {exc}") from exc


def invariant_report_dict(report: InvariantReport) -> dict:
    if report.order is None:
        return {
            "knot": report.knot,
            "kind": report.kind,
            "order": "not rationally nullhomologous",
            "solution": None,
            "tb": None,
            "rot": None,
            "sl": None,
            "seifert_dependence": None,
        }
    if report.unique_class:
        dependence: Any = "unique"
    else:
        dependence = [
            {"kernel_vector": list(v), "rot_shift": frac_str(shift)}
            for v, shift in report.seifert_shifts
        ]
    return {
        "knot": report.knot,
        "kind": report.kind,
        "order": report.order,
        "solution": list(report.solution),
        "tb": None if report.tb is None else frac_str(report.tb),
        "rot": None if report.rot is None else frac_str(report.rot),
        "sl": None if report.sl is None else frac_str(report.sl),
        "seifert_dependence": dependence,
    }


def d3_report_dict(diagram: SurgeryDiagram) -> dict:
    ec = euler_class(diagram)
    closed = d3_closed_form(diagram)
    expanded = d3_via_expansion(diagram)
    hom = homology(linking_matrix(diagram))
    return {
        "euler_class": list(ec.coefficients),
        "torsion": ec.torsion,
        "b": None if ec.b is None else [frac_str(x) for x in ec.b],
        "d3_closed_form": "undefined" if closed is None else frac_str(closed),
        "d3_via_expansion": "undefined" if expanded is None else frac_str(expanded),
        "homology": {
            "invariant_factors": list(hom.invariant_factors),
            "free_rank": hom.free_rank,
        },
    }


# ---------------------------------------------------------------------------
# output helpers

def _color_enabled() -> bool:
    env = os.environ.get("SURGEON_COLOR")
    if env == "1":
        return True
    if env == "0":
        return False
    return sys.stderr.isatty()


def _paint(text: str, code: str) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if _color_enabled() else text


def print_diagnostics(diagnostics: list[Diagnostic], path: str) -> None:
    for d in diagnostics:
        tag = _paint(d.severity, "31" if d.severity == "error" else "33")
        print(f"{path}: {tag}: {d.message}", file=sys.stderr)


def _emit(data: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2))
    else:
        _emit_text(data)


def _emit_text(data: dict, indent: str = "") -> None:
    for key, value in data.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _emit_text(value, indent + "  ")
        else:
            print(f"{indent}{key}: {value}")


# ---------------------------------------------------------------------------
# subcommands

def _cmd_check(args) -> int:
    diagram = load_diagram(args.file)
    diagnostics = validate(diagram)
    print_diagnostics(diagnostics, args.file)
    errors = sum(1 for d in diagnostics if d.severity == "error")
    warnings = len(diagnostics) - errors
    if errors:
        print(f"{args.file}: {errors} error(s), {warnings} warning(s)", file=sys.stderr)
        return 1
    print(f"{args.file}: ok ({warnings} warning(s))" if warnings else f"{args.file}: ok")
    return 0


def _checked_diagram(path: str) -> SurgeryDiagram:
    diagram = load_diagram(path)
    diagnostics = validate(diagram)
    errors = [d for d in diagnostics if d.severity == "error"]
    if errors:
        print_diagnostics(diagnostics, path)
        raise UserError(f"{path}: diagram is invalid")
    return diagram


def _cmd_invariants(args) -> int:
    diagram = _checked_diagram(args.file)
    name = args.knot
    if name is None:
        if len(diagram.knots) != 1:
            raise UserError(
                "--knot is required when the file does not contain exactly one companion knot")
        name = diagram.knots[0].name
    try:
        report = invariant_report(diagram, name)
    except KeyError:
        known = ", ".join(w.name for w in diagram.knots) or "none"
        raise UserError(f"unknown knot {name!r} (knots in file: {known})") from None
    _emit(invariant_report_dict(report), args.format)
    return 0


def _cmd_d3(args) -> int:
    diagram = _checked_diagram(args.file)
    _emit(d3_report_dict(diagram), args.format)
    return 0


def _cmd_expand(args) -> int:
    diagram = _checked_diagram(args.file)
    expanded = expand_to_pm1(diagram)
    payload = json.dumps(diagram_to_dict(expanded), indent=2) + "\n"
    try:
        Path(args.out).write_text(payload, encoding="utf-8")
    except OSError as exc:
        raise UserError(f"{args.out}: {exc.strerror or exc}") from exc
    return 0


def _cmd_front(args) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise UserError(f"{args.file}: {exc.strerror or exc}") from exc
    try:
        doc = parse_front(text)
        inv = classical_invariants(doc)
        diagram = to_diagram(doc) if args.emit_diagram else None
    except FrontError as exc:
        raise UserError(f"{args.file}: {exc}") from exc

    names = component_names(doc, inv.n_components)
    if args.format == "json":
        data = {
            "components": [
                {"name": names[i], "tb": inv.tb[i], "rot": inv.rot[i]}
                for i in range(inv.n_components)
            ],
            "linking": [list(row) for row in inv.linking],
        }
        print(json.dumps(data, indent=2))
    else:
        width = max([len("component")] + [len(n) for n in names])
        print(f"{'component':<{width + 2}}{'tb':>5}{'rot':>5}")
        for i in range(inv.n_components):
            print(f"{names[i]:<{width + 2}}{inv.tb[i]:>5}{inv.rot[i]:>5}")
        if inv.n_components > 1:
            print("linking:")
            for row in inv.linking:
                print("  " + " ".join(f"{x:>3}" for x in row))

    if args.emit_diagram:
        payload = json.dumps(diagram_to_dict(diagram), indent=2) + "\n"
        try:
            Path(args.emit_diagram).write_text(payload, encoding="utf-8")
        except OSError as exc:
            raise UserError(f"{args.emit_diagram}: {exc.strerror or exc}") from exc
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surgeon",
        description="Classical invariants of knots and contact structures "
                    "in contact (+-1/n)-surgery diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse and validate a diagram file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("invariants", help="invariants of a companion knot in the surgered manifold")
    p.add_argument("file")
    p.add_argument("--knot", help="name of the companion knot (optional when the file has exactly one)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("d3", help="Euler class, torsion test, homology and d3-invariant")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_d3)

    p = sub.add_parser("expand", help="rewrite 1/m coefficients as m push-off copies with coefficient 1")
    p.add_argument("file")
    p.add_argument("out")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("front", help="evaluate a front projection file")
    p.add_argument("file")
    p.add_argument("--emit-diagram", metavar="PATH", help="also write the assembled diagram file")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_front)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UserError as exc:
        print(f"{_paint('error', '31')}: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - last-resort guard for exit code 2
        print(f"{_paint('internal error', '31')}: {exc!r}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
