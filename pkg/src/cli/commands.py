"""
Sub-command handlers.

Each handler takes the parsed arguments, the resolved Settings and the
output stream, and returns an ExitCode. Library exceptions propagate to
VmregApp.run, which maps them to exit codes.
"""

import argparse
import json
import logging
from typing import Any, Callable, Dict, List, TextIO

import numpy as np

from ..core.config import Settings
from ..core.errors import ExitCode, UsageError
from ..models import (
    TEST_FUNCTIONS,
    FieldConfig,
    delta_mass,
    delta_pairing,
    energy_reconstruct,
    pair_decomposition,
)
from ..potential import Strategy, fourier_v, fourier_v_direct, v, v_av
from ..solver import Grid1D, boundary_sensitivity, solve_model, suggest_half_width
from ..verify import SuiteGrid, SuiteOptions, VerificationReport, run_suite
from .output import format_number, json_safe, write_csv, write_json, write_pairs

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, Settings, TextIO], ExitCode]


def _parse_m_list(text: str) -> List[float]:
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise UsageError(f"--m-list must be comma-separated numbers, got {text!r}")
    if not values:
        raise UsageError("--m-list is empty")
    return values


def _column_name(m: float) -> str:
    return f"V_{m:g}"


def cmd_eval(args: argparse.Namespace, settings: Settings, out: TextIO) -> ExitCode:
    """Print V_m(x)."""
    result = v(args.m, abs(args.x), args.method, settings.quadrature_spec())
    logger.debug("eval m=%g x=%g via %s, error estimate %.3g", args.m, args.x, result.strategy.value, result.error_estimate)
    out.write(format_number(result.value) + "\n")
    return ExitCode.OK


def cmd_table(args: argparse.Namespace, settings: Settings, out: TextIO) -> ExitCode:
    """Tabulate V_m on a linear or logarithmic x grid, one column per m."""
    m_values = _parse_m_list(args.m_list)
    if args.points < 1:
        raise UsageError(f"--points must be at least 1, got {args.points}")
    if args.x_min < 0 or args.x_max < args.x_min:
        raise UsageError(f"Need 0 <= x-min <= x-max, got [{args.x_min}, {args.x_max}]")
    if args.log:
        if args.x_min <= 0:
            raise UsageError("--log requires x-min > 0")
        xs = np.logspace(np.log10(args.x_min), np.log10(args.x_max), args.points)
    else:
        xs = np.linspace(args.x_min, args.x_max, args.points)

    spec = settings.quadrature_spec()
    rows = [[float(x)] + [v(m, float(x), Strategy.AUTO, spec).value for m in m_values] for x in xs]
    header = ["x"] + [_column_name(m) for m in m_values]

    if args.format == "json":
        write_json({"columns": header, "rows": rows}, out)
    else:
        write_csv(header, rows, out)
    return ExitCode.OK


def _format_value(value: Any) -> str:
    if isinstance(value, (int, float, np.floating, np.integer)) and not isinstance(value, bool):
        return format_number(float(value))
    return json.dumps(json_safe(value))


def _write_report_text(report: VerificationReport, out: TextIO) -> None:
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        witness = ", ".join(f"{k}={format_number(float(w))}" for k, w in check.witness.items())
        out.write(
            f"{status} {check.property_id} [{check.grid}] points={check.points} "
            f"worst={format_number(check.worst_violation)} tol={format_number(check.tolerance)}"
        )
        out.write(f" at {witness}\n" if witness else "\n")
    for item in report.exploratory:
        values = ", ".join(f"{key}={_format_value(value)}" for key, value in item.values.items())
        out.write(f"INFO {item.item_id}: {item.description}")
        out.write(f" ({values})\n" if values else "\n")
    failed = len(report.failures())
    out.write(f"{report.suite}: {len(report.checks) - failed}/{len(report.checks)} checks passed\n")


def cmd_verify(args: argparse.Namespace, settings: Settings, out: TextIO) -> ExitCode:
    """Run a verification suite; exit 4 if any asserted check fails."""
    options = SuiteOptions(
        grid=SuiteGrid.quick() if args.quick else SuiteGrid.canonical(),
        spec=settings.quadrature_spec(),
        perturb_upper=args.perturb_upper,
    )
    report = run_suite(args.suite, options)
    if args.report == "json":
        write_json(report.to_dict(), out)
    else:
        _write_report_text(report, out)
    if not report.passed:
        for check in report.failures():
            logger.warning("Check %s failed: worst violation %.3g at %s", check.property_id, check.worst_violation, check.witness)
        return ExitCode.VERIFICATION_FAILED
    return ExitCode.OK


def cmd_pair(args: argparse.Namespace, settings: Settings, out: TextIO) -> ExitCode:
    """Print the relative-momentum weights of a pair of Landau states."""
    pair = pair_decomposition(args.m1, args.m2, args.antisymmetrize)
    for k, weight in pair.exact:
        text = format_number(float(weight)) if args.decimal else str(weight)
        out.write(f"k={k},w={text}\n")
    return ExitCode.OK


def cmd_avg(args: argparse.Namespace, settings: Settings, out: TextIO) -> ExitCode:
    out.write(format_number(v_av(args.N, abs(args.x), settings.quadrature_spec())) + "\n")
    return ExitCode.OK


def cmd_fourier(args: argparse.Namespace, settings: Settings, out: TextIO) -> ExitCode:
    if args.direct:
        value = fourier_v_direct(args.m, args.xi)
    else:
        value = fourier_v(args.m, args.xi, settings.quadrature_spec())
    out.write(format_number(value) + "\n")
    return ExitCode.OK


def cmd_delta(args: argparse.Namespace, settings: Settings, out: TextIO) -> ExitCode:
    """Pairing of the scaled potential with a test function (or its mass with --mass)."""
    if args.mass:
        value = delta_mass(args.m, args.beta)
    else:
        value = delta_pairing(args.m, args.beta, TEST_FUNCTIONS[args.phi])
    out.write(format_number(value) + "\n")
    return ExitCode.OK


def cmd_spectrum(args: argparse.Namespace, settings: Settings, out: TextIO) -> ExitCode:
    """Ground state of h(N, Z, M) and the reconstructed confined energy."""
    config = FieldConfig(args.N, args.Z, args.B)
    default_points = settings.grid_points if args.N == 1 else settings.grid_points_two
    points = args.grid_points if args.grid_points is not None else default_points
    half_width = args.half_width if args.half_width is not None else settings.half_width
    tol = args.tol if args.tol is not None else settings.solver_tol
    spec = settings.quadrature_spec()
    grid = Grid1D(half_width, points)

    suggested = suggest_half_width(config, args.model)
    if half_width < suggested:
        logger.warning("Half-width %g is below the suggested %g for this field", half_width, suggested)

    result = solve_model(config, args.model, grid, tol, spec, settings.max_two_particle_points)
    sensitivity = boundary_sensitivity(
        config, args.model, grid, result.energy, tol, spec, settings.max_two_particle_points
    )
    fields = [
        ("model", args.model),
        ("N", config.N),
        ("Z", float(config.Z)),
        ("B", float(config.B)),
        ("M", config.M),
        ("e_h", result.energy),
        ("E0_conf", energy_reconstruct(result.energy, config.N, config.B)),
        ("residual", result.residual),
        ("iterations", result.iterations),
        ("method", result.method),
        ("half_width", grid.half_width),
        ("grid_points", grid.points),
        ("spacing", grid.spacing),
        ("boundary_sensitivity", sensitivity),
        ("suggested_half_width", suggested),
    ]
    if args.format == "json":
        write_json(dict(fields), out)
    else:
        write_pairs(fields, out)
    return ExitCode.OK


COMMANDS: Dict[str, Handler] = {
    "eval": cmd_eval,
    "table": cmd_table,
    "verify": cmd_verify,
    "pair": cmd_pair,
    "avg": cmd_avg,
    "fourier": cmd_fourier,
    "delta": cmd_delta,
    "spectrum": cmd_spectrum,
}
