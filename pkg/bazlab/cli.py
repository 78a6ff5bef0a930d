"""Command-line entry point.

Every report embeds the resolved :class:`RunConfig`, so an output file is enough
to rerun the computation that produced it. Exit statuses: 0 success,
2 invalid input, 3 a proven bound failed numerically, 4 a conjecture sweep
found an excess (the replay specs are in the report).
"""

from __future__ import annotations

import io
import sys
import csv
import json
import math
import logging
import argparse
from typing import Any, Dict, List, TextIO, Callable, Optional, Sequence
from pathlib import Path
from dataclasses import dataclass

import pydantic

from ._client import Workbench
from ._utils import int_from_env
from ._version import __version__
from ._constants import UNIT_TOL, INVARIANT_TOL, DEFAULT_ORDER, DEFAULT_SCAN_RADII, DEFAULT_QUAD_POINTS
from ._exceptions import (
    BazlabError,
    ConfigError,
    SpecParseError,
    InvariantViolation,
    CounterexampleFound,
)
from .types.run_config import RunConfig
from .types.necessary_scan_report import RadiusScan
from .types.bazilevic_spec_params import BazilevicSpecParams

__all__ = ["main", "run", "load_spec", "build_parser", "config_from_args"]

log: logging.Logger = logging.getLogger(__name__)

Rows = List[List[Any]]


@dataclass
class _Outcome:
    payload: Dict[str, Any]
    rows: Rows
    error: Optional[BazlabError] = None


def load_spec(path: str) -> BazilevicSpecParams:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"Cannot read spec file {path!r}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"Malformed JSON in {path}: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    return BazilevicSpecParams.model_validate(data)


def _require_spec(config: RunConfig) -> BazilevicSpecParams:
    if config.spec_path is None:
        raise ConfigError(f"`{config.command}` needs --spec")
    return load_spec(config.spec_path)


def _pairs_rows(header: str, values: Sequence[complex], start: int = 0) -> Rows:
    rows: Rows = [["n", f"{header}_re", f"{header}_im", f"abs_{header}"]]
    rows.extend([n, c.real, c.imag, abs(c)] for n, c in enumerate(values) if n >= start)
    return rows


def _construct(bench: Workbench, config: RunConfig) -> _Outcome:
    f = bench.bazilevic.construct(_require_spec(config), N=config.order)
    payload = {
        "alpha": f.alpha_total,
        "alphas": list(f.alphas),
        "b1": f.b1,
        "coefficients": f.series.to_pairs(),
    }
    return _Outcome(payload, _pairs_rows("a", list(f.series), start=1))


def _coeffs(bench: Workbench, config: RunConfig) -> _Outcome:
    spec = bench.bazilevic.resolve(_require_spec(config), N=config.order)
    f = bench.bazilevic.construct(spec)
    psi = bench.coeffs.psi(f)
    residual = bench.coeffs.recurrence(psi, spec.h) if f.b1 else None

    rows: Rows = [["n", "a_re", "a_im", "A_re", "A_im"]]
    for n in range(1, psi.order + 1):
        a, A = f.series[n], psi.coeffs[n]
        rows.append([n, a.real, a.imag, A.real, A.imag])
    payload = {
        "alpha": f.alpha_total,
        "a": f.series.to_pairs(),
        "A": psi.coeffs.to_pairs(),
        "recurrence_residual": residual,
    }
    error = None
    if residual is not None and residual > INVARIANT_TOL:
        error = InvariantViolation(f"(n + alpha) A_n = alpha p_n fails by {residual!r}", value=residual)
    return _Outcome(payload, rows, error)


def _bounds(bench: Workbench, config: RunConfig) -> _Outcome:
    if config.spec_path is not None:
        f = bench.bazilevic.construct(load_spec(config.spec_path), N=config.order)
        psi = bench.coeffs.psi(f)
        proven = f.b1
    elif config.alpha is not None:
        psi = bench.coeffs.extremal(config.alpha, N=config.order)
        proven = True
    else:
        raise ConfigError("`bounds` needs --spec or --alpha")

    report = bench.coeffs.bounds(psi)
    domination = bench.coeffs.domination(psi)
    error = None
    if proven and report.max_ratio > 1.0 + INVARIANT_TOL:
        error = InvariantViolation(
            f"|A_{report.witness_degree}| exceeds 2 alpha / (n + alpha): ratio {report.max_ratio!r}",
            value=report.max_ratio,
        )
    payload = {"bounds": report.to_dict(), "domination": domination.to_dict()}
    return _Outcome(payload, report.csv_rows(), error)


def _sweep(bench: Workbench, config: RunConfig) -> _Outcome:
    assert config.which is not None and config.alpha is not None and config.seed is not None
    report = bench.coeffs.sweep(config.which, config.alpha, trials=config.trials, seed=config.seed, N=config.order)
    rows: Rows = [["trial", "n", "ratio"]]
    rows.extend([c.trial, c.n, c.ratio] for c in report.counterexamples)
    error = None
    if report.counterexamples:
        error = CounterexampleFound(
            f"{len(report.counterexamples)} trials exceed conjecture {config.which}; max ratio {report.max_ratio!r}",
            replay=[c.spec.to_dict() for c in report.counterexamples],
        )
    return _Outcome(report.to_dict(), rows, error)


def _means(bench: Workbench, config: RunConfig) -> _Outcome:
    radii = config.radii or list(DEFAULT_SCAN_RADII)
    if config.koebe_theta is not None:
        witness = bench.hardy.witness(config.koebe_theta, radii, N=config.order)
        worst = min(entry.ratio for entry in witness.entries)
        error = None
        if worst < 1.0 - INVARIANT_TOL:
            error = InvariantViolation(f"Koebe integral fell below its lower bound: ratio {worst!r}", value=worst)
        return _Outcome(witness.to_dict(), witness.csv_rows(), error)

    if config.p is None:
        raise ConfigError("`means` needs --p (or --koebe-theta)")
    f = bench.bazilevic.construct(_require_spec(config), N=config.order)
    report = bench.hardy.profile(f.series, config.p, radii)
    if config.plot is not None:
        bench.hardy.write_plot_data(report, config.plot)
    error = None
    if not report.monotone:
        error = InvariantViolation("M_p(r, f) decreases in r", value=math.nan)
    return _Outcome(report.to_dict(), report.csv_rows(), error)


def _necessary(bench: Workbench, config: RunConfig) -> _Outcome:
    f = bench.bazilevic.construct(_require_spec(config), N=config.order)
    alpha = f.alpha_total if config.alpha is None else config.alpha
    proven = abs(alpha - f.alpha_total) <= UNIT_TOL

    single = (config.theta1, config.theta2, config.r)
    if any(v is not None for v in single):
        if any(v is None for v in single):
            raise ConfigError("--theta1, --theta2 and --r must be given together")
        assert config.theta1 is not None and config.theta2 is not None and config.r is not None
        value = bench.bazilevic.necessary_condition(f, alpha, config.r, config.theta1, config.theta2)
        payload = {"alpha": alpha, "r": config.r, "theta1": config.theta1, "theta2": config.theta2, "value": value}
        rows: Rows = [["r", "theta1", "theta2", "value"], [config.r, config.theta1, config.theta2, value]]
        worst = value
    else:
        scan = bench.bazilevic.scan(f, alpha, radii=config.radii or DEFAULT_SCAN_RADII)
        payload = scan.to_dict()
        columns = list(RadiusScan.model_fields)
        rows = [columns]
        rows.extend([getattr(s, name) for name in columns] for s in scan.radii)
        worst = scan.min_value

    error = None
    if proven and worst <= -math.pi:
        error = InvariantViolation(f"Arc integral of Re P[alpha, f] reached {worst!r} <= -pi", value=worst)
    return _Outcome(payload, rows, error)


def _correspond(bench: Workbench, config: RunConfig) -> _Outcome:
    g = bench.bazilevic.construct(_require_spec(config), N=config.order)
    alpha = g.alpha_total if config.alpha is None else config.alpha
    report = bench.bazilevic.correspond(g, alpha)
    error = None
    if report.round_trip_error > INVARIANT_TOL:
        error = InvariantViolation(
            f"from_CI(to_CI(g)) misses g by {report.round_trip_error!r}", value=report.round_trip_error
        )
    return _Outcome(report.to_dict(), _pairs_rows("G", list(report.G)), error)


_COMMANDS: Dict[str, Callable[[Workbench, RunConfig], _Outcome]] = {
    "construct": _construct,
    "coeffs": _coeffs,
    "bounds": _bounds,
    "sweep": _sweep,
    "means": _means,
    "necessary": _necessary,
    "correspond": _correspond,
}


def _render(config: RunConfig, outcome: _Outcome) -> str:
    if config.format == "json":
        return json.dumps({"config": config.to_dict(), "report": outcome.payload}, indent=2) + "\n"
    buf = io.StringIO()
    for key, value in config.to_dict().items():
        buf.write(f"# {key}={json.dumps(value)}\n")
    csv.writer(buf, lineterminator="\n").writerows(outcome.rows)
    return buf.getvalue()


def run(config: RunConfig, *, stdout: Optional[TextIO] = None) -> int:
    """Executes one command and writes its report; raises for exit statuses 3 and 4 after writing."""
    bench = Workbench(order=config.order, quad_points=config.quad_points, threads=config.threads)
    log.info("running %s with N=%d, K=%d", config.command, config.order, config.quad_points)
    outcome = _COMMANDS[config.command](bench, config)

    text = _render(config, outcome)
    if config.out is not None:
        Path(config.out).write_text(text)
    else:
        (stdout or sys.stdout).write(text)

    if outcome.error is not None:
        raise outcome.error
    return 0


def _float_list(value: str) -> List[float]:
    try:
        return [float(item) for item in value.split(",") if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {value!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", dest="spec_path", metavar="PATH", help="JSON spec of a Bazilevic function")
    common.add_argument("--N", type=int, help="truncation order (default: spec N, then $BAZLAB_ORDER)")
    common.add_argument("--seed", type=int, help="master seed; the only source of randomness")
    common.add_argument("--K", type=int, help="quadrature points (default: $BAZLAB_QUAD_POINTS)")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--threads", type=int, help="worker threads, 0 for one per CPU (default: $BAZLAB_THREADS)")

    parser = argparse.ArgumentParser(prog="bazlab", description="Numerical workbench for Bazilevic functions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("construct", parents=[common], help="Taylor coefficients of the member described by --spec")
    sub.add_parser("coeffs", parents=[common], help="coefficients of f and of psi = (f/z)^alpha")

    bounds = sub.add_parser("bounds", parents=[common], help="check |A_n| <= 2 alpha / (n + alpha)")
    bounds.add_argument("--alpha", type=float, help="check the extremal function for this alpha instead of a spec")

    sweep = sub.add_parser("sweep", parents=[common], help="randomized search against a coefficient conjecture")
    sweep.add_argument("--which", type=int, choices=[1, 2], required=True)
    sweep.add_argument("--alpha", type=float, required=True)
    sweep.add_argument("--trials", type=int, default=0)

    means = sub.add_parser("means", parents=[common], help="integral means M_p(r, f) with a growth fit")
    means.add_argument("--p", type=float)
    means.add_argument("--radii", type=_float_list, help="comma-separated increasing radii")
    means.add_argument("--koebe-theta", dest="koebe_theta", type=float, help="sample k_theta instead of a spec")
    means.add_argument("--plot", metavar="PREFIX", help="also write two-column plot data files")

    necessary = sub.add_parser("necessary", parents=[common], help="arc integrals of Re P[alpha, f]")
    necessary.add_argument("--alpha", type=float)
    necessary.add_argument("--radii", type=_float_list)
    necessary.add_argument("--theta1", type=float)
    necessary.add_argument("--theta2", type=float)
    necessary.add_argument("--r", type=float)

    correspond = sub.add_parser("correspond", parents=[common], help="the B_1(alpha) to C_I(1/alpha) round trip")
    correspond.add_argument("--alpha", type=float)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {key: value for key, value in vars(args).items() if value is not None}
    order = values.pop("N", None)
    if order is None and "spec_path" in values:
        params = load_spec(values["spec_path"])
        if "order" in params.model_fields_set:
            order = params.order
    if order is None:
        order = int_from_env("BAZLAB_ORDER", DEFAULT_ORDER)
    K = values.pop("K", None)
    if K is None:
        K = int_from_env("BAZLAB_QUAD_POINTS", DEFAULT_QUAD_POINTS)
    return RunConfig(N=order, K=K, **values)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(config_from_args(args))
    except pydantic.ValidationError as exc:
        print(f"bazlab: invalid input: {exc}", file=sys.stderr)
        return 2
    except BazlabError as exc:
        print(f"bazlab: {exc.message}", file=sys.stderr)
        return exc.exit_status
