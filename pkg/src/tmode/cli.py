"""Command-line interface.

Six subcommands: mode-value, density-profile, table1, verify, moments,
sample. Every command emits a table as CSV (RFC-4180-style quoting, LF
line endings) or JSON (one object with "schema_version", "command" and
"rows") and honors the exit-code contract: 0 all checks passed, 1 a
verification mismatch or numerical failure, 2 a usage or domain error.
Identical invocations produce byte-identical output; nothing is read
from the environment.

Degrees of freedom are spelled "inf" for the Gaussian member. Numbers
print with 6 significant digits unless --precision full is given.
"""

from __future__ import annotations

import functools
import json
import math
import sys
from dataclasses import dataclass

import click
import numpy as np

from . import ballprob, mcoracle, monotone, tdist
from .errors import (
    DimensionMismatchError,
    DomainError,
    MomentExistenceError,
    MonotonicityViolationError,
)

SCHEMA_VERSION = "1"

# Default nu grid when mode-value is run without --nu or --grid.
DEFAULT_FIGURE_GRID = (0.1, 30.0, 200)

_DOMAIN_ERRORS = (DomainError, DimensionMismatchError, MomentExistenceError)


@dataclass(frozen=True)
class OutputSpec:
    """Where and how a command's table goes."""

    format: str  # "csv" or "json"
    path: str  # "-" means standard output

    def __post_init__(self):
        if self.format not in ("csv", "json"):
            raise DomainError(f"unrecognized output format {self.format!r}")


def _format_number(value: float, precision: str) -> str:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if precision == "full":
        return repr(float(value))
    return f"{float(value):.6g}"


def _cell_csv(value, precision: str) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _format_number(value, precision)
    return str(value)


def _cell_json(value, precision: str):
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if precision == "full":
            return float(value)
        return float(f"{value:.6g}")
    return value


def emit(spec: OutputSpec, command: str, header: list[str], rows: list[list], precision: str) -> None:
    """Write one table through the chosen format and destination."""
    if spec.format == "csv":
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell_csv(v, precision) for v in row])
        text = buf.getvalue()
    else:
        obj = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "rows": [
                {name: _cell_json(v, precision) for name, v in zip(header, row)}
                for row in rows
            ],
        }
        text = json.dumps(obj, indent=2) + "\n"
    if spec.path == "-":
        sys.stdout.write(text)
    else:
        with open(spec.path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _parse_nu(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    try:
        value = float(text)
    except ValueError:
        raise click.UsageError(f"cannot parse degrees of freedom {text!r}") from None
    return tdist.check_dof(value)


def _parse_grid(text: str, log: bool) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise click.UsageError(f"grid must look like start:stop:count, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise click.UsageError(f"grid must look like start:stop:count, got {text!r}") from None
    if not (0.0 < start < stop) or not math.isfinite(stop):
        raise click.UsageError(f"grid endpoints must satisfy 0 < start < stop, got {text!r}")
    if count < 2:
        raise click.UsageError(f"grid needs at least 2 points, got {count}")
    if log:
        return list(np.geomspace(start, stop, count))
    return list(np.linspace(start, stop, count))


def _domain_errors_exit_2(fn):
    """Domain violations are caller mistakes: report them as usage errors."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _DOMAIN_ERRORS as exc:
            raise click.UsageError(str(exc)) from exc

    return wrapper


def _output_options(fn):
    fn = click.option(
        "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", help="Output format."
    )(fn)
    fn = click.option("--output", default="-", help="Output path, - for stdout.")(fn)
    fn = click.option(
        "--precision",
        type=click.Choice(["sig6", "full"]),
        default="sig6",
        help="sig6 prints 6 significant digits; full prints shortest round-trip.",
    )(fn)
    return fn


@click.group()
@click.version_option(package_name="tmode")
def main():
    """Mode values, ball probabilities and radial moments of isotropic
    multivariate Student t distributions."""


@main.command("mode-value")
@click.option("--k", required=True, type=int, help="Dimension.")
@click.option("--nu", "nu_text", default=None, help='Single degrees of freedom ("inf" allowed).')
@click.option("--grid", "grid_text", default=None, help="start:stop:count over degrees of freedom.")
@click.option("--log", "log_spaced", is_flag=True, help="Log-space the grid.")
@_output_options
@_domain_errors_exit_2
def cmd_mode_value(k, nu_text, grid_text, log_spaced, fmt, output, precision):
    """Density value at the mode, for one nu or along a grid."""
    if nu_text is not None and grid_text is not None:
        raise click.UsageError("give either --nu or --grid, not both")
    if log_spaced and grid_text is None:
        raise click.UsageError("--log only applies to --grid")
    if nu_text is not None:
        nus = [_parse_nu(nu_text)]
    elif grid_text is not None:
        nus = _parse_grid(grid_text, log_spaced)
    else:
        nus = list(np.geomspace(*DEFAULT_FIGURE_GRID))
    rows = [[float(nu), tdist.mode_value(nu, k)] for nu in nus]
    emit(OutputSpec(fmt, output), "mode-value", ["nu", "mode_value"], rows, precision)


@main.command("density-profile")
@click.option("--k", required=True, type=int, help="Dimension.")
@click.option("--nu", "nu_text", default="all", help='Degrees of freedom, or "all" for 1, 2, 10, inf.')
@click.option("--axis-range", "axis_range", default="-5:5:401", help="a:b:n points along the first axis.")
@_output_options
@_domain_errors_exit_2
def cmd_density_profile(k, nu_text, axis_range, fmt, output, precision):
    """Density along the first coordinate axis: rows of (nu, t, density)."""
    parts = axis_range.split(":")
    if len(parts) != 3:
        raise click.UsageError(f"axis range must look like a:b:n, got {axis_range!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        n = int(parts[2])
    except ValueError:
        raise click.UsageError(f"axis range must look like a:b:n, got {axis_range!r}") from None
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi) or n < 2:
        raise click.UsageError(f"axis range needs finite a < b and n >= 2, got {axis_range!r}")
    if nu_text.strip().lower() == "all":
        nus = [1.0, 2.0, 10.0, math.inf]
    else:
        nus = [_parse_nu(nu_text)]
    ts = np.linspace(lo, hi, n)
    rows = []
    for nu in nus:
        for t in ts:
            point = [float(t)] + [0.0] * (k - 1)
            rows.append([float(nu), float(t), math.exp(tdist.log_density(nu, k, point))])
    emit(OutputSpec(fmt, output), "density-profile", ["nu", "t", "density"], rows, precision)


@main.command("table1")
@click.option("--n-mc", "n_mc", default=None, type=int, help="Add Monte Carlo columns with this many draws per row.")
@click.option("--seed", default=0, type=int, help="Seed for the Monte Carlo columns.")
@_output_options
@_domain_errors_exit_2
@click.pass_context
def cmd_table1(ctx, n_mc, seed, fmt, output, precision):
    """Published 4x4 ball-probability table at radius 0.1.

    Exit code 0 exactly when every analytic entry matches the published
    value at printed precision. With --n-mc, empirical estimates and a
    within_4se flag are appended (informative; they do not change the
    exit code). The flag compares against 4 binomial standard errors at
    the analytic probability.
    """
    if n_mc is not None and n_mc < 1:
        raise click.UsageError(f"--n-mc must be a positive integer, got {n_mc}")
    header = ["nu", "k", "analytic", "published", "match"]
    if n_mc is not None:
        header += ["mc_estimate", "mc_std_error", "within_4se"]
    rows = []
    mismatches = []
    for i, row in enumerate(ballprob.table1()):
        estimates = None
        if n_mc is not None:
            batch = mcoracle.sample_t(row.nu, max(ballprob.TABLE1_DIMS), n_mc, seed + i)
            estimates = mcoracle.estimate_ball_prob_prefixes(batch, ballprob.TABLE1_RADIUS)
        for j, k in enumerate(ballprob.TABLE1_DIMS):
            analytic = row.probs[j]
            published = ballprob.TABLE1_PRINTED[row.nu][j]
            match = ballprob.format_published(analytic, k) == published
            if not match:
                mismatches.append((row.nu, k, analytic, published))
            out_row = [float(row.nu), k, analytic, published, match]
            if estimates is not None:
                est, _ = estimates[j]
                se_analytic = math.sqrt(analytic * (1.0 - analytic) / n_mc)
                out_row += [est, se_analytic, abs(est - analytic) <= 4.0 * se_analytic]
            rows.append(out_row)
    emit(OutputSpec(fmt, output), "table1", header, rows, precision)
    if mismatches:
        for nu, k, analytic, published in mismatches:
            click.echo(
                f"mismatch at nu={nu}, k={k}: computed {analytic!r} vs published {published}",
                err=True,
            )
        ctx.exit(1)


_EXPECTED_CLASS = {1: "increasing", 2: "constant"}


@main.command("verify")
@click.option("--k-max", "k_max", required=True, type=int, help="Verify dimensions 1..K (K >= 3).")
@click.option("--grid", "grid_text", default=None, help="start:stop:count over degrees of freedom.")
@click.option("--points", default=None, type=int, help="Points in the default grid.")
@_output_options
@_domain_errors_exit_2
@click.pass_context
def cmd_verify(ctx, k_max, grid_text, points, fmt, output, precision):
    """Check the mode-value monotonicity pattern across dimensions.

    For each k up to K: classify the sign of the nu-derivative on a grid,
    cross-check against finite differences, and corroborate with an
    independent route (closed product form for even k, the odd-dimension
    induction step for odd k >= 3). Exit 1 on any violation.
    """
    if k_max < 3:
        raise click.UsageError(f"--k-max must be at least 3 to cover all three regimes, got {k_max}")
    if grid_text is not None:
        grid = _parse_grid(grid_text, log=True)
    else:
        lo, hi = monotone.DEFAULT_GRID_RANGE
        grid = monotone.default_nu_grid(lo, hi, points or monotone.DEFAULT_GRID_POINTS)
    header = ["k", "expected", "classification", "max_fd_residual", "aux_check", "ok"]
    rows = []
    failures = []
    for k in range(1, k_max + 1):
        expected = _EXPECTED_CLASS.get(k, "decreasing")
        try:
            report = monotone.classify_monotonicity(k, grid=grid)
        except MonotonicityViolationError as exc:
            failures.append(f"k={k}: {exc}")
            rows.append([k, expected, "violated", math.nan, "-", False])
            continue
        if k % 2 == 0:
            rel = max(
                abs(tdist.mode_value(nu, k) - monotone.mode_value_even_product(nu, k))
                / tdist.mode_value(nu, k)
                for nu in grid
            )
            aux = f"product rel {rel:.2e}"
            aux_ok = rel <= 1e-12
        elif k >= 3:
            aux_ok = True
            try:
                for nu in grid:
                    monotone.induction_step_check(nu, k)
            except MonotonicityViolationError as exc:
                aux_ok = False
                failures.append(f"k={k}: {exc}")
            aux = "induction"
        else:
            aux, aux_ok = "-", True
        fd_ok = report.max_derivative_residual <= 1e-5
        ok = (report.classification == expected) and aux_ok and fd_ok
        if report.classification != expected:
            failures.append(
                f"k={k}: classified {report.classification}, expected {expected}"
            )
        if not fd_ok:
            failures.append(
                f"k={k}: finite-difference residual {report.max_derivative_residual:.2e} exceeds 1e-5"
            )
        if k % 2 == 0 and not aux_ok:
            failures.append(f"k={k}: product-form disagreement {aux}")
        rows.append([k, expected, report.classification, report.max_derivative_residual, aux, ok])
    emit(OutputSpec(fmt, output), "verify", header, rows, precision)
    if failures:
        for line in failures:
            click.echo(f"violation: {line}", err=True)
        ctx.exit(1)


@main.command("moments")
@click.option("--nu1", "nu1_text", required=True, help="First degrees of freedom.")
@click.option("--nu2", "nu2_text", required=True, help="Second degrees of freedom.")
@click.option("--k", required=True, type=int, help="Dimension for the headline row.")
@click.option("--m", required=True, type=float, help="Moment order.")
@_output_options
@_domain_errors_exit_2
def cmd_moments(nu1_text, nu2_text, k, m, fmt, output, precision):
    """Radial-moment ratio with a dimension-independence sweep.

    Emits the requested dimension plus k = 1..10; the moment_ratio column
    must be constant across the sweep, and kurtosis_ratio appears when
    both members have more than 4 degrees of freedom.
    """
    nu1 = _parse_nu(nu1_text)
    nu2 = _parse_nu(nu2_text)
    dims = sorted({k} | set(range(1, 11)))
    have_kurtosis = nu1 > 4.0 and nu2 > 4.0
    rows = []
    for dim in dims:
        ratio = tdist.moment_ratio(nu1, nu2, dim, m)
        kurt = tdist.kurtosis_ratio(nu1, nu2, dim) if have_kurtosis else None
        rows.append([dim, ratio, kurt])
    emit(OutputSpec(fmt, output), "moments", ["k", "moment_ratio", "kurtosis_ratio"], rows, precision)


@main.command("sample")
@click.option("--nu", "nu_text", required=True, help='Degrees of freedom ("inf" allowed).')
@click.option("--k", required=True, type=int, help="Dimension.")
@click.option("--n", default=100000, type=int, help="Number of draws.")
@click.option("--seed", default=0, type=int, help="Stream seed; same seed, same draws.")
@click.option("--radius", "radii", multiple=True, type=float, help="Ball radius (repeatable; default 0.1).")
@_output_options
@_domain_errors_exit_2
def cmd_sample(nu_text, k, n, seed, radii, fmt, output, precision):
    """Monte Carlo ball-probability estimates against the closed form.

    The z column is (estimate - analytic) over the binomial standard
    error at the analytic probability.
    """
    nu = _parse_nu(nu_text)
    batch = mcoracle.sample_t(nu, k, n, seed)
    rows = []
    for r in radii or (0.1,):
        est, _ = mcoracle.estimate_ball_prob(batch, r)
        analytic = ballprob.ball_prob(nu, k, r)
        se = math.sqrt(analytic * (1.0 - analytic) / n)
        if se > 0.0:
            z = (est - analytic) / se
        else:
            z = 0.0 if est == analytic else math.inf
        rows.append([float(nu), k, n, seed, float(r), est, se, analytic, z])
    emit(
        OutputSpec(fmt, output),
        "sample",
        ["nu", "k", "n", "seed", "radius", "estimate", "std_error", "analytic", "z"],
        rows,
        precision,
    )


if __name__ == "__main__":
    main()
