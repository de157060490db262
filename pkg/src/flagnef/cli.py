"""Command-line front end: JSON bundle specs in, exact rational reports out.

All arithmetic happens in the core modules; this layer parses, dispatches and
renders.  Rationals travel as reduced "num/den" strings ("/1" omitted) so
downstream tools never coerce them to floats.  Exit codes: 0 success,
1 invalid input, 2 internal invariant violation (oracle mismatch).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Sequence, TextIO

from .cones import (
    FlagType,
    NSClassFlag,
    NSClassGr,
    flag_nef_cone,
    grassmann_nef_cone,
    is_ample_gr,
    is_nef_flag,
    is_nef_gr,
)
from .corpus import iter_hn_types
from .errors import FlagnefError, ParseError, ValidationError
from .hn import CHAR_ZERO, FieldContext, HNType, hn_from_splitting_type, make_hn_type
from .positivity import classify_tautological
from .theta import enumerate_va, theta, theta_oracle

# A Report is a plain JSON-serializable dict with keys command/input/result.
Report = dict

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9][0-9]*)?$")

_CORPUS_MAX_RANK = 6
_CORPUS_MAX_ABS_DEGREE = 4


def format_rational(q: Fraction) -> str:
    """Reduced "num/den" string, with "/1" omitted for integers."""
    return str(q)


def _parse_rational(value: Any, where: str) -> Fraction:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        return Fraction(value)
    raise ParseError(f"{where}: expected an integer or 'num/den' string, got {value!r}")


def _load_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{what}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def _read_arg(value: str) -> str:
    """Inline text, or the contents of a file given as @path."""
    if value.startswith("@"):
        try:
            with open(value[1:], "r", encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {value[1:]}: {exc}") from exc
    return value


def _plain_int(value: Any, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{where} must be an integer, got {value!r}")
    return value


def _field_echo(ctx: FieldContext) -> dict:
    if ctx.is_char_p:
        return {"char": ctx.p, "frobenius_steps": ctx.delta}
    return {"char": 0}


def _parse_field(data: Any) -> FieldContext:
    if data is None:
        return CHAR_ZERO
    if not isinstance(data, dict):
        raise ParseError("field must be an object")
    unknown = set(data) - {"char", "frobenius_steps"}
    if unknown:
        raise ParseError(f"field: unknown keys {sorted(unknown)}")
    char = _plain_int(data.get("char", 0), "field.char")
    steps = _plain_int(data.get("frobenius_steps", 0), "field.frobenius_steps")
    if char == 0 and steps != 0:
        raise ParseError("frobenius_steps requires positive characteristic")
    try:
        return FieldContext(char, steps) if char else CHAR_ZERO
    except FlagnefError as exc:
        raise ValidationError(f"{exc.code}: {exc}") from exc


def _parse_bundle_data(data: Any) -> tuple[HNType, FieldContext, dict]:
    """Validate a bundle spec dict; returns (type, context, canonical echo)."""
    if not isinstance(data, dict):
        raise ParseError("bundle spec must be a JSON object")
    unknown = set(data) - {"pieces", "splitting", "field"}
    if unknown:
        raise ParseError(f"bundle spec: unknown keys {sorted(unknown)}")
    if ("pieces" in data) == ("splitting" in data):
        raise ParseError("bundle spec needs exactly one of 'pieces' or 'splitting'")
    ctx = _parse_field(data.get("field"))
    if "pieces" in data:
        raw = data["pieces"]
        if not isinstance(raw, list) or not all(
            isinstance(p, list) and len(p) == 2 for p in raw
        ):
            raise ParseError("pieces must be a list of [rank, degree] pairs")
        pairs = [
            (_plain_int(p[0], "piece rank"), _plain_int(p[1], "piece degree")) for p in raw
        ]
        try:
            h = make_hn_type(pairs)
        except FlagnefError as exc:
            raise ValidationError(f"{exc.code}: {exc}") from exc
        echo = {"pieces": [[p.rank, p.degree] for p in h.pieces], "field": _field_echo(ctx)}
    else:
        raw = data["splitting"]
        if not isinstance(raw, list):
            raise ParseError("splitting must be a list of integers")
        degrees = [_plain_int(a, "splitting degree") for a in raw]
        try:
            h = hn_from_splitting_type(degrees)
        except FlagnefError as exc:
            raise ValidationError(f"{exc.code}: {exc}") from exc
        echo = {"splitting": sorted(degrees, reverse=True), "field": _field_echo(ctx)}
    return h, ctx, echo


def parse_bundle_spec(text: str) -> tuple[HNType, FieldContext]:
    """Parse a JSON bundle spec into a validated (HNType, FieldContext) pair."""
    h, ctx, _ = _parse_bundle_data(_load_json(text, "bundle spec"))
    return h, ctx


def _parse_class_gr(data: Any) -> NSClassGr:
    if not isinstance(data, dict) or set(data) != {"x", "y"}:
        raise ParseError('a Grassmann class is an object {"x": ..., "y": ...}')
    return NSClassGr(_parse_rational(data["x"], "class.x"), _parse_rational(data["y"], "class.y"))


def _parse_class_flag(data: Any) -> NSClassFlag:
    if not isinstance(data, dict) or set(data) != {"x", "y"}:
        raise ParseError('a flag class is an object {"x": [...], "y": ...}')
    if not isinstance(data["x"], list):
        raise ParseError("class.x must be a list")
    xs = tuple(_parse_rational(v, f"class.x[{i}]") for i, v in enumerate(data["x"]))
    return NSClassFlag(xs, _parse_rational(data["y"], "class.y"))


def _parse_flag_dims(text: str) -> FlagType:
    try:
        dims = tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"--flag expects comma-separated integers, got {text!r}") from exc
    try:
        return FlagType(dims)
    except FlagnefError as exc:
        raise ValidationError(f"{exc.code}: {exc}") from exc


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; here all input problems are exit 1
    def error(self, message: str) -> None:
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="flagnef",
        description=(
            "Exact positivity and nef-cone computations for Grassmann and flag "
            "bundles over a curve, from Harder-Narasimhan data."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def bundle_opt(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--bundle", required=required, help="bundle spec: inline JSON or @file")

    def json_opt(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit the report as one JSON document")

    p_theta = sub.add_parser("theta", help="threshold invariant with full breakdown")
    bundle_opt(p_theta)
    p_theta.add_argument("--r", type=int, required=True, help="quotient dimension")
    json_opt(p_theta)

    p_classify = sub.add_parser("classify", help="positivity of the tautological line bundle")
    bundle_opt(p_classify)
    p_classify.add_argument("--r", type=int, required=True, help="quotient dimension")
    json_opt(p_classify)

    p_cone = sub.add_parser("cone", help="nef cone extremal rays")
    cone_sub = p_cone.add_subparsers(dest="target", required=True, metavar="target")
    p_cone_gr = cone_sub.add_parser("gr", help="Grassmann bundle")
    bundle_opt(p_cone_gr)
    p_cone_gr.add_argument("--r", type=int, required=True, help="quotient dimension")
    json_opt(p_cone_gr)
    p_cone_flag = cone_sub.add_parser("flag", help="flag bundle")
    bundle_opt(p_cone_flag)
    p_cone_flag.add_argument("--flag", required=True, help="quotient dimensions r1,r2,...")
    json_opt(p_cone_flag)

    p_member = sub.add_parser("member", help="nef / ample membership of a class")
    member_sub = p_member.add_subparsers(dest="target", required=True, metavar="target")
    p_member_gr = member_sub.add_parser("gr", help="Grassmann bundle")
    bundle_opt(p_member_gr)
    p_member_gr.add_argument("--r", type=int, required=True, help="quotient dimension")
    p_member_gr.add_argument(
        "--class", dest="ns_class", required=True, help='class {"x": ..., "y": ...}: inline JSON or @file'
    )
    json_opt(p_member_gr)
    p_member_flag = member_sub.add_parser("flag", help="flag bundle")
    bundle_opt(p_member_flag)
    p_member_flag.add_argument("--flag", required=True, help="quotient dimensions r1,r2,...")
    p_member_flag.add_argument(
        "--class", dest="ns_class", required=True, help='class {"x": [...], "y": ...}: inline JSON or @file'
    )
    json_opt(p_member_flag)

    p_va = sub.add_parser("vabundles", help="exterior-power blocks with exact rank and degree")
    bundle_opt(p_va)
    p_va.add_argument("--r", type=int, required=True, help="quotient dimension")
    json_opt(p_va)

    p_oc = sub.add_parser(
        "oracle-check", help="recompute the invariant by brute force and compare"
    )
    bundle_opt(p_oc, required=False)
    p_oc.add_argument("--r", type=int, help="check a single quotient dimension (needs --bundle)")
    json_opt(p_oc)

    return parser


def _load_bundle(arg: str) -> tuple[HNType, FieldContext, dict]:
    return _parse_bundle_data(_load_json(_read_arg(arg), "bundle spec"))


def _cmd_theta(args: argparse.Namespace) -> tuple[Report, int]:
    h, ctx, echo = _load_bundle(args.bundle)
    bd = theta(h, args.r, ctx)
    result = {
        "theta": format_rational(bd.theta),
        "t": bd.t,
        "s": bd.s,
        "mu_t": format_rational(bd.mu_t),
        "tail_rank": bd.tail_rank,
        "tail_degree": bd.tail_degree,
    }
    return {"command": "theta", "input": {"bundle": echo, "r": args.r}, "result": result}, 0


def _cmd_classify(args: argparse.Namespace) -> tuple[Report, int]:
    h, ctx, echo = _load_bundle(args.bundle)
    cls = classify_tautological(h, args.r, ctx)
    value = theta(h, args.r, ctx).theta
    result = {"class": cls.value, "theta": format_rational(value)}
    return {"command": "classify", "input": {"bundle": echo, "r": args.r}, "result": result}, 0


def _cmd_cone_gr(args: argparse.Namespace) -> tuple[Report, int]:
    h, ctx, echo = _load_bundle(args.bundle)
    cone = grassmann_nef_cone(h, args.r, ctx)
    result = {
        "rays": [[cone.fiber_ray.u, cone.fiber_ray.v], [cone.theta_ray.u, cone.theta_ray.v]],
        "theta": format_rational(cone.theta_used),
        "p_delta": cone.p_delta,
    }
    return {"command": "cone gr", "input": {"bundle": echo, "r": args.r}, "result": result}, 0


def _cmd_cone_flag(args: argparse.Namespace) -> tuple[Report, int]:
    h, ctx, echo = _load_bundle(args.bundle)
    fl = _parse_flag_dims(args.flag)
    cone = flag_nef_cone(h, fl, ctx)
    result = {
        "rays": [list(ray) for ray in cone.rays],
        "thetas": [format_rational(t) for t in cone.thetas_used],
        "p_delta": cone.p_delta,
    }
    report = {
        "command": "cone flag",
        "input": {"bundle": echo, "flag": list(fl.quotient_dims)},
        "result": result,
    }
    return report, 0


def _cmd_member_gr(args: argparse.Namespace) -> tuple[Report, int]:
    h, ctx, echo = _load_bundle(args.bundle)
    c = _parse_class_gr(_load_json(_read_arg(args.ns_class), "class"))
    cone = grassmann_nef_cone(h, args.r, ctx)
    result = {"nef": is_nef_gr(c, cone), "ample": is_ample_gr(c, cone)}
    report = {
        "command": "member gr",
        "input": {
            "bundle": echo,
            "r": args.r,
            "class": {"x": format_rational(c.x), "y": format_rational(c.y)},
        },
        "result": result,
    }
    return report, 0


def _cmd_member_flag(args: argparse.Namespace) -> tuple[Report, int]:
    h, ctx, echo = _load_bundle(args.bundle)
    fl = _parse_flag_dims(args.flag)
    c = _parse_class_flag(_load_json(_read_arg(args.ns_class), "class"))
    cone = flag_nef_cone(h, fl, ctx)
    result = {"nef": is_nef_flag(c, cone)}
    report = {
        "command": "member flag",
        "input": {
            "bundle": echo,
            "flag": list(fl.quotient_dims),
            "class": {"x": [format_rational(v) for v in c.x], "y": format_rational(c.y)},
        },
        "result": result,
    }
    return report, 0


def _cmd_vabundles(args: argparse.Namespace) -> tuple[Report, int]:
    h, ctx, echo = _load_bundle(args.bundle)
    blocks = enumerate_va(h, args.r)
    result = {
        "count": len(blocks),
        "min_slope_sum": format_rational(min(b.slope_sum for b in blocks)),
        "va": [
            {
                "composition": list(b.composition),
                "rank": b.rank,
                "degree": b.degree,
                "slope_sum": format_rational(b.slope_sum),
            }
            for b in blocks
        ],
    }
    return {"command": "vabundles", "input": {"bundle": echo, "r": args.r}, "result": result}, 0


def _cmd_oracle_check(args: argparse.Namespace, err: TextIO) -> tuple[Report, int]:
    if args.r is not None and args.bundle is None:
        raise ParseError("--r requires --bundle")
    if args.bundle is not None:
        h, _, echo = _load_bundle(args.bundle)
        types: Any = [h]
        input_echo: dict = {"bundle": echo}
        if args.r is not None:
            input_echo["r"] = args.r
    else:
        types = iter_hn_types(_CORPUS_MAX_RANK, _CORPUS_MAX_ABS_DEGREE)
        input_echo = {
            "corpus": {"max_rank": _CORPUS_MAX_RANK, "max_abs_degree": _CORPUS_MAX_ABS_DEGREE}
        }
    n_types = 0
    checks = 0
    mismatches = 0
    for h in types:
        n_types += 1
        quotient_dims = [args.r] if args.r is not None else range(1, h.rank)
        for r in quotient_dims:
            checks += 1
            closed = theta(h, r).theta
            brute = theta_oracle(h, r)
            if closed != brute:
                mismatches += 1
                pieces = [[p.rank, p.degree] for p in h.pieces]
                print(
                    f"flagnef: oracle mismatch for pieces={pieces} r={r}: "
                    f"closed form {closed} != brute force {brute}",
                    file=err,
                )
    ok = mismatches == 0
    result = {"types": n_types, "checks": checks, "mismatches": mismatches, "ok": ok}
    report = {"command": "oracle-check", "input": input_echo, "result": result}
    return report, 0 if ok else 2


def _bool_str(b: bool) -> str:
    return "true" if b else "false"


def _ray_str(coords: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in coords) + ")"


def _aligned(pairs: Sequence[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in pairs)


def _render_text(report: Report) -> str:
    cmd = report["command"]
    res = report["result"]
    if cmd == "theta":
        return _aligned(
            [
                ("theta", res["theta"]),
                ("t", str(res["t"])),
                ("s", str(res["s"])),
                ("mu_t", res["mu_t"]),
                ("tail_rank", str(res["tail_rank"])),
                ("tail_degree", str(res["tail_degree"])),
            ]
        )
    if cmd == "classify":
        return res["class"] + "\n"
    if cmd == "cone gr":
        rays = ", ".join(_ray_str(ray) for ray in res["rays"])
        return _aligned([("rays", rays), ("theta", res["theta"]), ("p_delta", str(res["p_delta"]))])
    if cmd == "cone flag":
        rays = ", ".join(_ray_str(ray) for ray in res["rays"])
        thetas = ", ".join(res["thetas"])
        return _aligned([("rays", rays), ("thetas", thetas), ("p_delta", str(res["p_delta"]))])
    if cmd == "member gr":
        return _aligned([("nef", _bool_str(res["nef"])), ("ample", _bool_str(res["ample"]))])
    if cmd == "member flag":
        return _aligned([("nef", _bool_str(res["nef"]))])
    if cmd == "vabundles":
        rows = [("composition", "rank", "degree", "slope_sum")]
        for entry in res["va"]:
            rows.append(
                (
                    _ray_str(entry["composition"]),
                    str(entry["rank"]),
                    str(entry["degree"]),
                    entry["slope_sum"],
                )
            )
        widths = [max(len(row[col]) for row in rows) for col in range(4)]
        return "".join(
            ("  ".join(cell.ljust(w) for cell, w in zip(row, widths))).rstrip() + "\n"
            for row in rows
        )
    if cmd == "oracle-check":
        return _aligned(
            [
                ("types", str(res["types"])),
                ("checks", str(res["checks"])),
                ("mismatches", str(res["mismatches"])),
                ("ok", _bool_str(res["ok"])),
            ]
        )
    raise ValueError(f"unknown command in report: {cmd!r}")


def render_report(report: Report, mode: str = "text") -> str:
    """Render a report.  JSON mode is a compact single document whose bytes
    are stable across runs; text mode is aligned human-readable columns."""
    if mode == "json":
        return json.dumps(report, separators=(",", ":")) + "\n"
    if mode != "text":
        raise ValueError(f"unknown render mode {mode!r}")
    return _render_text(report)


_HANDLERS = {
    "theta": _cmd_theta,
    "classify": _cmd_classify,
    ("cone", "gr"): _cmd_cone_gr,
    ("cone", "flag"): _cmd_cone_flag,
    ("member", "gr"): _cmd_member_gr,
    ("member", "flag"): _cmd_member_flag,
    "vabundles": _cmd_vabundles,
}


def run_command(
    argv: Sequence[str],
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> tuple[Report | None, int]:
    """Execute one CLI invocation; writes the rendered report to stdout and
    diagnostics to stderr, and returns (report, exit code)."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        if args.command == "oracle-check":
            report, code = _cmd_oracle_check(args, err)
        else:
            key = (args.command, args.target) if hasattr(args, "target") else args.command
            report, code = _HANDLERS[key](args)
    except FlagnefError as exc:
        print(f"flagnef: error[{exc.code}]: {exc}", file=err)
        return None, 1
    out.write(render_report(report, "json" if args.json else "text"))
    return report, code


def main(argv: Sequence[str] | None = None) -> int:
    _, code = run_command(sys.argv[1:] if argv is None else argv)
    return code
