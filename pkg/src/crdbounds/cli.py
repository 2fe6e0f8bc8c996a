"""Command-line front end.

Verbs: constants | kfactors | threshold | scale | figure. Exit codes:
0 success, 1 runtime or I/O failure, 2 usage or configuration error.
Diagnostics go to stderr, data to stdout. Every output carries a metadata
block (parameter values, quadrature tolerance, version) so published numbers
are reproducible.
"""

from __future__ import annotations

import functools
import json
import sys

import click

from . import __version__
from .bounds import (
    Scenario,
    ScenarioKind,
    crd,
    energy_from_length,
    max_length,
    planck_crd,
)
from .config import RunConfig, load_config
from .cosmology import CosmologyParams, build_tables
from .errors import ConfigurationError
from .figure import FigureConfig, build_figure, planck_crossing, write_series
from .quadrature import QuadratureError
from .quantities import LogQuantity, planck_units, s_to_gyr
from .thresholds import classify_machine, planck_threshold

_SCENARIO_NAMES = [k.value for k in ScenarioKind]


def common_options(fn):
    options = [
        click.option("--h0", "h0_km_s_mpc", type=float, default=None, help="Hubble constant in km/s/Mpc."),
        click.option("--omega-m", "omega_m", type=float, default=None, help="Matter density parameter."),
        click.option("--omega-lambda", "omega_lambda", type=float, default=None, help="Dark-energy density parameter."),
        click.option("--lab-volume", "lab_volume_m3", type=float, default=None, help="Lab volume in m^3."),
        click.option("--lab-duration", "lab_duration_s", type=float, default=None, help="Lab run time in seconds."),
        click.option("--inputs-per-op", "inputs_per_op", type=int, default=None, help="Inputs per operation for the nearest-neighbor lab."),
        click.option("--quad-rel-tol", "quad_rel_tol", type=float, default=None, help="Relative tolerance for all integrals."),
        click.option("--grid-points", "grid_points", type=int, default=None, help="Nodes in the cumulative tables."),
        click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text."),
        click.option("--config", "config_path", type=click.Path(), default=None, help="Flat key=value config file (also honored via $CRDBOUNDS_CONFIG)."),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _load(config_path, **overrides) -> RunConfig:
    try:
        return load_config(config_path, overrides)
    except ConfigurationError as exc:
        raise click.UsageError(str(exc)) from exc


def _metadata(config: RunConfig) -> dict:
    return {"artifact": "crdbounds", "version": __version__, **config.as_dict()}


def _emit(doc: dict, as_json: bool, text_lines) -> None:
    if as_json:
        click.echo(json.dumps(doc, indent=2))
    else:
        for key, value in doc["metadata"].items():
            click.echo(f"# {key} = {value}")
        for line in text_lines:
            click.echo(line)


def _params(config: RunConfig) -> CosmologyParams:
    try:
        return CosmologyParams.create(config.h0_km_s_mpc, config.omega_m, config.omega_lambda)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _tables(config: RunConfig, params: CosmologyParams):
    try:
        return build_tables(params, rel_tol=config.quad_rel_tol, grid_points=config.grid_points)
    except QuadratureError as exc:
        raise click.ClickException(f"quadrature failed: {exc}") from exc


def _all_scenarios(config: RunConfig, params: CosmologyParams):
    return [
        Scenario.lab(config.lab_volume_m3, config.lab_duration_s),
        Scenario.lab_nearest_neighbor(
            config.lab_volume_m3, config.lab_duration_s, config.inputs_per_op
        ),
        Scenario.lab_fully_connected(config.lab_volume_m3, config.lab_duration_s),
        Scenario.lab_broadcast(config.lab_volume_m3, config.lab_duration_s),
        Scenario.universe(params),
        Scenario.universe_fully_connected(params),
        Scenario.universe_broadcast(params),
    ]


def _select_scenarios(config: RunConfig, params: CosmologyParams, name: str):
    scenarios = _all_scenarios(config, params)
    if name == "all":
        return scenarios
    return [s for s in scenarios if s.kind.value == name]


@click.group()
@click.version_option(__version__)
def main():
    """Bounds on hidden classical computational substrates."""


@main.command()
@common_options
def constants(config_path, as_json, **overrides):
    """Planck length, time, energy and rate-density ceiling."""
    config = _load(config_path, **overrides)
    k = planck_units()
    ceiling = planck_crd(k)
    doc = {
        "metadata": _metadata(config),
        "l_p_m": k.l_p,
        "t_p_s": k.t_p,
        "e_p_ev": k.e_p_ev,
        "c_p_log2": ceiling.log2_value,
        "c_p_pow2": ceiling.pow2_str(),
        "c_p_decimal": ceiling.decimal_str(),
    }
    _emit(
        doc,
        as_json,
        [
            f"l_P = {k.l_p:.10e} m",
            f"t_P = {k.t_p:.10e} s",
            f"E_P = {k.e_p_ev:.10e} eV",
            f"C_P = {ceiling.pow2_str()} ops m^-3 s^-1 "
            f"= {ceiling.decimal_str()} ops m^-3 s^-1 (log2 = {ceiling.log2_value:.6f})",
        ],
    )


@main.command()
@common_options
def kfactors(config_path, as_json, **overrides):
    """Dimensionless cosmological prefactors k4u, k7u, k8u."""
    config = _load(config_path, **overrides)
    params = _params(config)
    tables = _tables(config, params)
    # convergence check: rerun one decade tighter and report the shift
    tighter = _tables(
        RunConfig(**{**config.as_dict(), "quad_rel_tol": config.quad_rel_tol * 0.1}), params
    )
    deltas = {
        "k4u": abs(tables.k4u - tighter.k4u) / tighter.k4u,
        "k7u": abs(tables.k7u - tighter.k7u) / tighter.k7u,
        "k8u": abs(tables.k8u - tighter.k8u) / tighter.k8u,
    }
    doc = {
        "metadata": _metadata(config),
        "t_universe_gyr": s_to_gyr(params.t_universe),
        "k4u": tables.k4u,
        "k7u": tables.k7u,
        "k8u": tables.k8u,
        "achieved_rel_delta": deltas,
    }
    _emit(
        doc,
        as_json,
        [
            f"T_U  = {s_to_gyr(params.t_universe):.6f} Gyr",
            f"k4u  = {tables.k4u:.10e}   (convergence delta {deltas['k4u']:.2e})",
            f"k7u  = {tables.k7u:.10e}   (convergence delta {deltas['k7u']:.2e})",
            f"k8u  = {tables.k8u:.10e}   (convergence delta {deltas['k8u']:.2e})",
        ],
    )


@main.command()
@click.option(
    "--scenario",
    "scenario_name",
    type=click.Choice(["all"] + _SCENARIO_NAMES),
    default="all",
    help="Restrict to one scenario.",
)
@common_options
def threshold(config_path, as_json, scenario_name, **overrides):
    """Logical-qubit thresholds at which each scenario reaches the Planck scale."""
    config = _load(config_path, **overrides)
    params = _params(config)
    tables = _tables(config, params)
    k = planck_units()
    rows = [
        planck_threshold(s, tables, k)
        for s in _select_scenarios(config, params, scenario_name)
    ]
    doc = {
        "metadata": _metadata(config),
        "thresholds": [
            {
                "scenario": r.scenario_kind.value,
                "qubits": r.qubits,
                "log2_nops_exact": r.log2_nops_exact,
                "length_at_threshold_m": r.length_at_threshold,
            }
            for r in rows
        ],
    }
    width = max(len(r.scenario_kind.value) for r in rows)
    lines = [f"{'scenario':<{width}}  qubits  log2_nops_exact"]
    lines += [
        f"{r.scenario_kind.value:<{width}}  {r.qubits:>6d}  {r.log2_nops_exact:.6f}"
        for r in rows
    ]
    _emit(doc, as_json, lines)


@main.command()
@click.option("--qubits", "qubits", type=int, default=None, help="Logical qubit count n (operation count 2^n).")
@click.option("--ops", "ops", type=float, default=None, help="Demonstrated classical operations per --duration (machine mode).")
@click.option("--volume", "volume", type=float, default=None, help="Machine volume in m^3 (machine mode).")
@click.option("--duration", "duration", type=float, default=None, help="Machine run time in seconds (machine mode).")
@click.option(
    "--scenario",
    "scenario_name",
    type=click.Choice(["all"] + _SCENARIO_NAMES),
    default="all",
    help="Restrict to one scenario.",
)
@common_options
def scale(config_path, as_json, qubits, ops, volume, duration, scenario_name, **overrides):
    """Probed length and energy scale for a given machine."""
    config = _load(config_path, **overrides)
    machine_mode = ops is not None or volume is not None or duration is not None
    if machine_mode == (qubits is not None):
        raise click.UsageError("give either --qubits or the --ops/--volume/--duration triple")

    if machine_mode:
        if ops is None or volume is None or duration is None:
            raise click.UsageError("machine mode needs --ops, --volume and --duration together")
        if ops <= 0 or volume <= 0 or duration <= 0:
            raise click.UsageError("--ops, --volume and --duration must be positive")
        n_ops = LogQuantity.from_real(ops)
        length = max_length(volume, duration, n_ops)
        rate = crd(n_ops, volume, duration)
        doc = {
            "metadata": _metadata(config),
            "max_length_m": length,
            "energy_ev": energy_from_length(length),
            "crd_log2": rate.log2_value,
            "crd_decimal": rate.decimal_str(),
        }
        _emit(
            doc,
            as_json,
            [
                f"max length = {length:.6e} m",
                f"energy     = {energy_from_length(length):.6e} eV",
                f"CRD        = {rate.decimal_str()} ops m^-3 s^-1",
            ],
        )
        return

    if qubits < 1:
        raise click.UsageError(f"--qubits must be at least 1, got {qubits}")
    params = _params(config)
    tables = _tables(config, params)
    k = planck_units()
    scenarios = _select_scenarios(config, params, scenario_name)
    report = classify_machine(qubits, scenarios, tables, k)
    doc = {
        "metadata": _metadata(config),
        "qubits": qubits,
        "scenarios": [
            {
                "scenario": a.scenario_kind.value,
                "threshold_qubits": a.threshold_qubits,
                "probed_length_m": a.probed_length_m,
                "energy_ev": a.energy_ev,
                "sub_planckian": a.sub_planckian,
            }
            for a in report
        ],
    }
    width = max(len(a.scenario_kind.value) for a in report)
    lines = [f"{'scenario':<{width}}  threshold  probed_length_m  energy_ev      sub_planckian"]
    for a in report:
        lines.append(
            f"{a.scenario_kind.value:<{width}}  {a.threshold_qubits:>9d}  "
            f"{a.probed_length_m:.6e}     {a.energy_ev:.6e}   "
            f"{'yes' if a.sub_planckian else 'no'}"
        )
    _emit(doc, as_json, lines)


@main.command()
@click.option("--min", "lo", type=float, default=450.0, help="Smallest log2 NEO to sample.")
@click.option("--max", "hi", type=float, default=1700.0, help="Largest log2 NEO to sample.")
@click.option("--step", type=float, default=1.0, help="Sampling step in log2 NEO.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", "out_path", type=click.Path(), required=True, help="Output file path.")
@common_options
def figure(config_path, as_json, lo, hi, step, fmt, out_path, **overrides):
    """Emit the probed-length-versus-NEO data series."""
    config = _load(config_path, **overrides)
    if step <= 0:
        raise click.UsageError(f"--step must be positive, got {step}")
    k = planck_units()
    if lo < hi:
        params = _params(config)
        tables = _tables(config, params)
        fig_config = FigureConfig(
            lab_volume_m3=config.lab_volume_m3, lab_duration_s=config.lab_duration_s
        )
        series, annotations = build_figure((lo, hi), step, tables, k, fig_config)
    else:
        series, annotations = [], []
    try:
        write_series(series, annotations, out_path, fmt)
    except OSError as exc:
        raise click.ClickException(f"cannot write {out_path}: {exc}") from exc
    crossings = {
        s.label: planck_crossing(s, k.l_p)
        for s in series
        if planck_crossing(s, k.l_p) is not None
    }
    doc = {
        "metadata": _metadata(config),
        "out": str(out_path),
        "format": fmt,
        "series_count": len(series),
        "planck_crossings_log2_neo": crossings,
    }
    lines = [f"wrote {out_path} ({fmt}), series: {len(series)}"]
    for label, value in crossings.items():
        lines.append(f"planck crossing: {label} at log2 NEO = {value:.1f}")
    _emit(doc, as_json, lines)


if __name__ == "__main__":
    sys.exit(main())
