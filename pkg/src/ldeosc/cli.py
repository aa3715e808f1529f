"""Command-line entry point: ``ldeosc {period,solve,fourier,scan}``.

Exit codes: 0 success, 2 bad arguments, 3 numerical failure, 4 output
path not writable.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .errors import LdeOscError
from .exact import (
    duffing_exact_coefficients,
    duffing_exact_period,
    duffing_exact_solution,
)
from .fourier import (
    duffing_pms_coefficient_numeric,
    duffing_pms_coefficients_closed,
    lp_coefficients,
)
from .lde import duffing_period_pms, duffing_position_of_time
from .ode import integrate, interpolate, return_times
from .potential import OscillatorProblem
from .quadrature import period_oracle

EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

PERIOD_METHODS = ("pms", "exact", "quadrature", "ode")
SOLVE_METHODS = ("pms", "exact", "ode")
FOURIER_METHODS = ("pms-closed", "pms-numeric", "exact", "lp")
SCAN_TARGETS = ("c0-error", "period-error")


def fmt(x) -> str:
    return format(float(x), ".17g")


class UsageError(Exception):
    pass


# ----------------------------------------------------------------- computations

def period_by_method(mu: float, A: float, method: str, steps_per_period: int = 2000) -> float:
    if method == "pms":
        return duffing_period_pms(mu, A).period
    if method == "exact":
        return duffing_exact_period(mu, A)
    problem = OscillatorProblem.duffing(mu, A)
    if method == "quadrature":
        return period_oracle(problem)
    if method == "ode":
        # the PMS period is within 2.2% of the true one
        traj = integrate(problem, 1.1 * duffing_period_pms(mu, A).period, steps_per_period)
        return float(return_times(traj)[0])
    raise UsageError(f"unknown method {method!r}")


def fourier_by_method(mu: float, A: float, method: str, order: int) -> list[float]:
    n = order + 1
    if method == "pms-closed":
        return list(duffing_pms_coefficients_closed(mu, A).coefficients[:n])
    if method == "pms-numeric":
        return [duffing_pms_coefficient_numeric(mu, A, k) for k in range(n)]
    if method == "exact":
        return list(duffing_exact_coefficients(mu, A, n))
    if method == "lp":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            return list(lp_coefficients(mu, A).coefficients[:n])
    raise UsageError(f"unknown method {method!r}")


def c0_error_percent(z: float) -> float:
    closed = duffing_pms_coefficients_closed(z, 1.0).coefficients[0]
    exact = duffing_exact_coefficients(z, 1.0, 1)[0]
    return 100.0 * abs(closed - exact) / exact


def period_error_percent(z: float) -> float:
    pms = duffing_period_pms(z, 1.0).period
    exact = duffing_exact_period(z, 1.0)
    return 100.0 * abs(pms - exact) / exact


SCAN_FUNCTIONS = {"c0-error": c0_error_percent, "period-error": period_error_percent}


def scan_rows(target: str, z_min: float, z_max: float, points: int, jobs: int = 1) -> list[dict]:
    grid = np.geomspace(z_min, z_max, points)
    func = SCAN_FUNCTIONS[target]
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            values = list(pool.map(func, grid))  # map keeps grid order
    else:
        values = [func(z) for z in grid]
    return [{"z": float(z), "error_percent": float(v)} for z, v in zip(grid, values)]


def solve_rows(mu: float, A: float, periods: float, samples: int, methods, steps_per_period: int):
    T = duffing_period_pms(mu, A).period
    t = np.linspace(0.0, periods * T, samples)
    columns = {"t": t}
    if "pms" in methods:
        columns["x_pms"] = duffing_position_of_time(mu, A, t)
    if "exact" in methods:
        columns["x_exact"] = duffing_exact_solution(mu, A, t)
    if "ode" in methods:
        t_end = max(t[-1], 1e-12)
        traj = integrate(OscillatorProblem.duffing(mu, A), t_end, steps_per_period)
        columns["x_ode"] = interpolate(traj, t)
    names = list(columns)
    rows = [{k: float(columns[k][i]) for k in names} for i in range(samples)]
    return names, rows


# ----------------------------------------------------------------- rendering

def render(rows: list[dict], names: list[str], fmt_name: str, meta: dict) -> str:
    if fmt_name == "json":
        return json.dumps({"meta": meta, "rows": rows}, indent=2, allow_nan=True) + "\n"
    buf = io.StringIO()
    if fmt_name == "csv":
        buf.write(",".join(names) + "\n")
        for row in rows:
            buf.write(",".join(_cell(row.get(k)) for k in names) + "\n")
        return buf.getvalue()
    widths = {k: max(len(k), *(len(_text_cell(r.get(k))) for r in rows)) if rows else len(k) for k in names}
    buf.write("  ".join(k.ljust(widths[k]) for k in names).rstrip() + "\n")
    for row in rows:
        buf.write("  ".join(_text_cell(row.get(k)).ljust(widths[k]) for k in names).rstrip() + "\n")
    return buf.getvalue()


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    return fmt(v)


def _text_cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, str):
        return v
    return f"{v:.10g}"


def emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


# ----------------------------------------------------------------- commands

def cmd_period(args) -> str:
    methods = PERIOD_METHODS if args.method == "all" else (args.method,)
    values = {m: period_by_method(args.mu, args.amplitude, m, args.steps_per_period) for m in methods}
    rows = []
    exact = values.get("exact") if args.method == "all" else None
    for m in methods:
        row = {"method": m, "period": values[m]}
        if exact is not None:
            row["error_percent"] = 100.0 * abs(values[m] - exact) / exact
        rows.append(row)
    names = ["method", "period"] + (["error_percent"] if exact is not None else [])
    return render(rows, names, args.format, _meta(args))


def cmd_solve(args) -> str:
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    names, rows = solve_rows(args.mu, args.amplitude, args.periods, args.samples,
                             args.methods, args.steps_per_period)
    meta = _meta(args)
    meta["integrator"] = {"scheme": "rk4-fixed-step", "steps_per_period_estimate": args.steps_per_period,
                          "interpolation": "cubic-hermite"}
    return render(rows, names, args.format, meta)


def cmd_fourier(args) -> str:
    if args.order > 3 and any(m in ("pms-closed", "lp") for m in args.methods):
        raise UsageError("closed-form and LP coefficients exist only up to order 3")
    coeffs = {m: fourier_by_method(args.mu, args.amplitude, m, args.order) for m in args.methods}
    exact = coeffs.get("exact") or fourier_by_method(args.mu, args.amplitude, "exact", args.order)
    rows = []
    for m in args.methods:
        row = {"method": m}
        for n, c in enumerate(coeffs[m]):
            row[f"c{n}"] = c
        for n, c in enumerate(coeffs[m]):
            ref = exact[n]
            row[f"err{n}_percent"] = 100.0 * abs(c - ref) / abs(ref) if ref != 0 else None
        rows.append(row)
    names = (["method"] + [f"c{n}" for n in range(args.order + 1)]
             + [f"err{n}_percent" for n in range(args.order + 1)])
    return render(rows, names, args.format, _meta(args))


def cmd_scan(args) -> str:
    if not 0 < args.z_min < args.z_max:
        raise UsageError("need 0 < --z-min < --z-max")
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    rows = scan_rows(args.target, args.z_min, args.z_max, args.points, args.jobs)
    return render(rows, ["z", "error_percent"], args.format, _meta(args))


def _meta(args) -> dict:
    meta = {k: v for k, v in vars(args).items() if k not in ("handler",)}
    meta["version"] = __version__
    return meta


def _methods(choices):
    def parse(text: str):
        items = tuple(s.strip() for s in text.split(",") if s.strip())
        bad = [s for s in items if s not in choices]
        if bad or not items:
            raise argparse.ArgumentTypeError(f"choose from {','.join(choices)}")
        return tuple(m for m in choices if m in items)
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ldeosc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="text"):
        p.add_argument("--mu", type=float, default=1.0)
        p.add_argument("--amplitude", type=float, default=1.0)
        p.add_argument("--format", choices=("text", "csv", "json"), default=default_format)
        p.add_argument("--out", default=None, help="write to this path instead of stdout")

    p = sub.add_parser("period", help="oscillation period by one or all methods")
    common(p)
    p.add_argument("--method", choices=PERIOD_METHODS + ("all",), default="all")
    p.add_argument("--steps-per-period", type=int, default=2000)
    p.set_defaults(handler=cmd_period)

    p = sub.add_parser("solve", help="trajectory samples X(t)")
    common(p, "csv")
    p.add_argument("--periods", type=float, default=2.0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--methods", type=_methods(SOLVE_METHODS), default=SOLVE_METHODS)
    p.add_argument("--steps-per-period", type=int, default=2000)
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("fourier", help="Fourier coefficients c_0..c_order")
    common(p)
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--methods", type=_methods(FOURIER_METHODS), default=FOURIER_METHODS)
    p.set_defaults(handler=cmd_fourier)

    p = sub.add_parser("scan", help="error curves over a log-spaced mu A^2 grid")
    p.add_argument("--target", choices=SCAN_TARGETS, default="c0-error")
    p.add_argument("--z-min", type=float, default=1e-3)
    p.add_argument("--z-max", type=float, default=1e8)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if hasattr(args, "mu") and (args.mu < 0 or not args.amplitude > 0):
        parser.print_usage(sys.stderr)
        print("ldeosc: error: need --mu >= 0 and --amplitude > 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        text = args.handler(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"ldeosc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LdeOscError, FloatingPointError, ZeroDivisionError, OverflowError) as exc:
        print(f"ldeosc: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    try:
        emit(text, args.out)
    except OSError as exc:
        print(f"ldeosc: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
