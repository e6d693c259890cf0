"""Command-line surface: constants, verification suites, radial tables,
trinomial runs and density searches, with machine-readable JSON output.

Exit codes: 0 success/pass, 1 usage or input error, 2 verification failure,
3 solver or quadrature failure.  Every JSON object carries artifact_version,
seed and the tolerances in force, and identical argv + seed produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .density import PeriodicSet, auud_periodic, integer_shadow, max_density_search
from .extremal import (
    ConditionViolated,
    NotAStrictTiling,
    delsarte,
    turan,
    two_set_constant,
)
from .fuzz import SUITES
from .groups import Group, SymSet, set_from_json
from .lp import SolverFailure
from .radial import (
    Quadrature,
    QuadratureError,
    ball_char_transform,
    bessel_first_zero,
    gorbachev_H_grid,
    gorbachev_H_report,
    yudin_Y,
    yudin_hat_grid,
    yudin_sign_check,
)
from .trinomial import example51_comparison, example51_lower_bound, optimize_trinomial

TOLERANCES = {
    "value": 1e-8,
    "posdef": 1e-9,
    "lp_pivot": 1e-9,
    "quadrature": 1e-9,
}

_INTERVAL = re.compile(r"^\[(-?\d+)\s*,\s*(-?\d+)\]$")


class UsageError(ValueError):
    pass


def _parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(
            f"malformed JSON for {what} at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _parse_set(group: Group, text: str) -> SymSet:
    if text in ("empty", "all"):
        return set_from_json(group, text)
    m = _INTERVAL.match(text.strip())
    # a negative lower endpoint marks the interval shorthand ("[-1,1]" is
    # {-1,0,1}); a pair of plain residues like "[0,3]" stays a list
    if m and len(group.orders) == 1 and int(m.group(1)) < 0:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise UsageError(f"interval {text!r} has endpoints out of order")
        return SymSet.from_elements(group, list(range(lo, hi + 1)))
    data = _parse_json(text, "set")
    if isinstance(data, str):
        return set_from_json(group, data)
    if not isinstance(data, list):
        raise UsageError(f"set must be a list, 'empty', 'all' or an interval, got {text!r}")
    return set_from_json(group, data)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return {"numerator": obj.numerator, "denominator": obj.denominator,
                "value": float(obj)}
    if isinstance(obj, PeriodicSet):
        return obj.to_json()
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if hasattr(obj, "a") and hasattr(obj, "b"):  # Trinomial
        return {"a": float(obj.a), "b": float(obj.b)}
    return obj


def _emit(command: str, result, seed=None, warnings=None) -> None:
    payload = {
        "artifact_version": __version__,
        "command": command,
        "seed": seed,
        "tolerances": TOLERANCES,
        "result": _jsonable(result),
        "warnings": warnings or [],
    }
    print(json.dumps(payload, sort_keys=True, indent=2))


def _emit_csv(columns, rows) -> None:
    print(",".join(columns))
    for row in rows:
        print(",".join(repr(float(v)) for v in row))


def _cmd_constant(args) -> int:
    group = Group.from_json(_parse_json(args.group, "group"))
    omega_plus = _parse_set(group, args.omega_plus)
    omega_minus_text = args.omega_minus
    warnings = []
    if omega_plus.symmetrized:
        warnings.append("omega-plus was symmetrized by intersection with its negation")
    if args.kind == "turan":
        res = turan(group, omega_plus)
    elif args.kind == "delsarte":
        res = delsarte(group, omega_plus)
    else:
        omega_minus = _parse_set(group, omega_minus_text)
        if omega_minus.symmetrized:
            warnings.append("omega-minus was symmetrized by intersection with its negation")
        res = two_set_constant(group, omega_plus, omega_minus)
    result = {
        "kind": args.kind,
        "group": group.to_json(),
        "omega_plus": omega_plus.elements(),
        "value": res.value,
        "status": res.status,
        "optimizer": res.optimizer.values if res.optimizer is not None else None,
        "spectrum": res.spectrum,
    }
    _emit("constant", result, warnings=warnings)
    return 0


def _cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    report = suite(args.fuzz, args.seed, args.max_n) if args.max_n else suite(args.fuzz, args.seed)
    _emit(f"verify {args.suite}", report, seed=args.seed)
    return 0 if report["pass"] else 2


def _cmd_radial(args) -> int:
    quad = Quadrature(t_max=args.quad_t_max)
    if args.table == "yudin":
        ts = np.arange(0.0, args.t_max + args.step / 2, args.step)
        vals = np.atleast_1d(yudin_Y(args.d, ts))
        if args.csv:
            _emit_csv(["t", "Y"], zip(ts, vals))
        else:
            report = yudin_sign_check(args.d, ts)
            _emit("radial yudin", {"report": report, "table": list(zip(ts, vals))})
        return 0
    if args.table == "hankel":
        ss = np.arange(0.0, args.s_max + args.step / 2, args.step)
        vals = yudin_hat_grid(args.d, ss, quad)
        if args.csv:
            _emit_csv(["s", "yhat"], zip(ss, vals))
        else:
            _emit("radial hankel", {"table": list(zip(ss, vals))})
        return 0
    if args.table == "gorbachev-h":
        q = bessel_first_zero(args.d / 2.0)
        ts = np.arange(q, args.t_max + args.step / 2, args.step)
        vals, info = gorbachev_H_grid(args.d, ts, quad)
        if args.csv:
            _emit_csv(["t", "H"], zip(ts, vals))
        else:
            report = gorbachev_H_report(args.d, ts, quad)
            _emit("radial gorbachev-h", {"report": report, "table": list(zip(ts, vals))})
        return 0
    # ball-transform
    xs = np.arange(0.0, args.t_max + args.step / 2, args.step)
    vals = np.atleast_1d(ball_char_transform(args.d, xs))
    if args.csv:
        _emit_csv(["x", "ball_hat"], zip(xs, vals))
    else:
        _emit("radial ball-transform", {"table": list(zip(xs, vals))})
    return 0


def _cmd_trinomial(args) -> int:
    if args.action == "optimize":
        opt = optimize_trinomial()
        _emit("trinomial optimize", {
            "z": opt["z_star"], "value": opt["value"], "coeffs": opt["coeffs"],
            "nonneg_check": opt["nonneg_check"],
        })
        return 0
    bound = example51_lower_bound()
    if args.csv:
        _emit_csv(["x", "phi"], zip(bound["grid"], bound["profile"]))
        return 0
    comparison = example51_comparison()
    result = {
        "bound": bound["bound"],
        "coeffs": bound["coeffs"],
        "z_star": bound["z_star"],
        "checks": bound["checks"],
        "comparison": comparison,
    }
    _emit("trinomial example51", result)
    return 0 if comparison["pass"] else 2


def _cmd_density(args) -> int:
    if args.action == "search":
        forbidden = _parse_json(args.forbidden, "forbidden set")
        report = max_density_search(forbidden, args.max_period)
        _emit("density search", report)
        return 0
    if args.action == "auud":
        residues = _parse_json(args.residues, "residues")
        ps = PeriodicSet(args.period, frozenset(residues))
        _emit("density auud", {"periodic_set": ps, "density": auud_periodic(ps)})
        return 0
    intervals = _parse_json(args.intervals, "intervals")
    shadow = integer_shadow(intervals, closed=args.closed)
    _emit("density shadow", {"intervals": intervals, "closed": args.closed,
                             "forbidden": shadow})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdextremal",
        description="Extremal constants for positive definite functions on finite "
                    "abelian groups, with radial and trinomial constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constant", help="two-set / Turan / Delsarte constant via LP")
    p.add_argument("--group", required=True, help='group JSON, e.g. \'{"orders":[6],"normalization":"probability"}\'')
    p.add_argument("--omega-plus", required=True, help="set JSON, 'empty', 'all' or interval '[-1,1]'")
    p.add_argument("--omega-minus", default="all", help="set for kind two-set (default: all)")
    p.add_argument("--kind", choices=["two-set", "turan", "delsarte"], default="two-set")
    p.set_defaults(func=_cmd_constant)

    p = sub.add_parser("verify", help="randomized verification suites")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--fuzz", type=int, default=50, help="number of random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=None, help="largest group size")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("radial", help="emit radial function tables")
    p.add_argument("table", choices=["yudin", "hankel", "gorbachev-h", "ball-transform"])
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--t-max", type=float, default=30.0)
    p.add_argument("--s-max", type=float, default=3.0)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--quad-t-max", type=float, default=60.0)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_radial)

    p = sub.add_parser("trinomial", help="extremal trinomial and the real-line bound")
    p.add_argument("action", choices=["optimize", "example51"])
    p.add_argument("--csv", action="store_true", help="emit the profile grid as CSV")
    p.set_defaults(func=_cmd_trinomial)

    p = sub.add_parser("density", help="periodic density search and helpers")
    p.add_argument("action", choices=["search", "auud", "shadow"])
    p.add_argument("--forbidden", default="[]", help="JSON list of forbidden differences")
    p.add_argument("--max-period", type=int, default=24)
    p.add_argument("--period", type=int, default=1)
    p.add_argument("--residues", default="[0]", help="JSON list of residues")
    p.add_argument("--intervals", default="[]", help="JSON list of [lo, hi] pairs")
    p.add_argument("--closed", action="store_true", help="treat intervals as closed")
    p.set_defaults(func=_cmd_density)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NotAStrictTiling, ConditionViolated) as exc:
        print(f"verification precondition failed: {exc}", file=sys.stderr)
        return 2
    except (SolverFailure, QuadratureError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
