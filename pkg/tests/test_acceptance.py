"""Acceptance suite: one test per release criterion, each printing a
pass/fail line (run with -s or -v to see them)."""

import math

import numpy as np
import pytest

from crdbounds.bounds import (
    energy_from_length,
    length_for_scenario,
    max_length,
    n_ops_for_scenario,
    planck_crd,
)
from crdbounds.cosmology import comoving_distance, scale_factor, v4, v4_rate
from crdbounds.figure import CSV_HEADER, build_figure, planck_crossing, write_series
from crdbounds.quantities import GYR_IN_S, SPEED_OF_LIGHT, LogQuantity
from crdbounds.thresholds import planck_threshold

import oracles

C = SPEED_OF_LIGHT


def _report(criterion: int, ok: bool, detail: str):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
    assert ok, f"criterion {criterion}: {detail}"


def test_criterion_01_k4u(fiducial_tables):
    k4u = fiducial_tables.k4u
    _report(1, abs(k4u - 0.13) <= 0.005, f"k4u = {k4u:.6f}, target 0.13 within ±0.005")


def test_criterion_02_k8u(fiducial_tables):
    k8u = fiducial_tables.k8u
    _report(2, abs(k8u - 8.6e-4) <= 0.01 * 8.6e-4, f"k8u = {k8u:.6e}, target 8.6e-4 within ±1%")


def test_criterion_03_k7u(fiducial_tables):
    k7u = fiducial_tables.k7u
    _report(3, abs(k7u - 6.2e-3) <= 0.01 * 6.2e-3, f"k7u = {k7u:.6e}, target 6.2e-3 within ±1%")


def test_criterion_04_age_of_universe(fiducial_params):
    gyr = fiducial_params.t_universe / GYR_IN_S
    _report(4, abs(gyr - 13.5) <= 0.05, f"T_U = {gyr:.4f} Gyr, target 13.5 within ±0.05")


def test_criterion_05_planck_crd(constants):
    ceiling = planck_crd(constants)
    ratio = 2.0 ** (ceiling.log2_value - (490.0 + math.log2(1.37)))
    _report(
        5,
        abs(ratio - 1.0) <= 0.01,
        f"C_P = {ceiling.pow2_str()} ops m^-3 s^-1, {abs(ratio - 1) * 100:.3f}% from 1.37 × 2^490",
    )


def test_criterion_06_qubit_thresholds(paper_scenarios, fiducial_tables, constants):
    got = {}
    for s in paper_scenarios:
        got[s.kind.value] = planck_threshold(s, fiducial_tables, constants).qubits
    ok = got == oracles.THRESHOLD_QUBITS
    _report(6, ok, f"thresholds {got}")


def test_criterion_07_gpu_worked_example():
    length = max_length(7.44e-7, 1.0, LogQuantity.from_real(3.352e15))
    _report(7, 4.8e-4 <= length <= 5.3e-4, f"GPU max length = {length:.4e} m, window [4.8e-4, 5.3e-4]")


def test_criterion_08_matter_only_closed_forms(eds_tables, eds_params):
    t_u = eds_params.t_universe
    ts = np.geomspace(1e-3, 1.0, 20) * t_u
    worst = 0.0
    for t in ts:
        pairs = [
            (scale_factor(t, eds_params), float(oracles.eds_scale_factor(t, t_u))),
            (
                comoving_distance(0.5 * t, t, eds_tables),
                float(oracles.eds_comoving_distance(0.5 * t, t, t_u, C)),
            ),
            (v4(t, eds_tables), float(oracles.eds_v4(t, C))),
            (v4_rate(t, eds_tables), float(oracles.eds_v4_rate(t, C))),
        ]
        for got, expected in pairs:
            worst = max(worst, abs(got - expected) / abs(expected))
    _report(8, worst <= 1e-6, f"matter-only a/d/V4/V4dot worst relative error = {worst:.2e} (<= 1e-6)")


def test_criterion_09_v4_rate_vs_finite_differences(fiducial_tables, fiducial_params):
    t_u = fiducial_params.t_universe
    h = 1e-4 * t_u
    worst = 0.0
    for t in np.linspace(0.05, 0.95, 20) * t_u:
        fd = (v4(t + h, fiducial_tables) - v4(t - h, fiducial_tables)) / (2.0 * h)
        worst = max(worst, abs(v4_rate(t, fiducial_tables) - fd) / abs(fd))
    _report(9, worst <= 1e-5, f"V4dot vs centered differences worst relative error = {worst:.2e} (<= 1e-5)")


def test_criterion_10_log_slopes(paper_scenarios, fiducial_tables):
    expected = {
        "lab": 4,
        "lab-nearest-neighbor": 4,
        "lab-fully-connected": 8,
        "lab-broadcast": 7,
        "universe": 4,
        "universe-fully-connected": 8,
        "universe-broadcast": 7,
    }
    worst = 0.0
    for s in paper_scenarios:
        l1, l2 = 1e-10, 1e-30
        n1 = n_ops_for_scenario(s, l1, fiducial_tables).log2_value
        n2 = n_ops_for_scenario(s, l2, fiducial_tables).log2_value
        slope = (n2 - n1) / (math.log2(1.0 / l2) - math.log2(1.0 / l1))
        worst = max(worst, abs(slope - expected[s.kind.value]))
    _report(10, worst <= 1e-9, f"log-slope worst deviation from exponent = {worst:.2e} (<= 1e-9)")


def test_criterion_11_round_trip(paper_scenarios, fiducial_tables):
    rng = np.random.default_rng(2024)
    lengths = 10.0 ** rng.uniform(-40, -3, 50)
    worst = 0.0
    for s in paper_scenarios:
        for l in lengths:
            back = length_for_scenario(s, n_ops_for_scenario(s, l, fiducial_tables), fiducial_tables)
            worst = max(worst, abs(math.log2(back) - math.log2(l)) / abs(math.log2(l)))
    _report(11, worst <= 1e-10, f"length round trip worst log-space relative error = {worst:.2e} (<= 1e-10)")


def test_criterion_12_figure_file(tmp_path, fiducial_tables, constants, paper_scenarios):
    series, annotations = build_figure((450.0, 1700.0), 1.0, fiducial_tables, constants)
    problems = []
    if len(series) != 5:
        problems.append(f"expected 5 series, got {len(series)}")
    for s in series:
        lengths = [p.length_m for p in s.points]
        if not all(a > b for a, b in zip(lengths, lengths[1:])):
            problems.append(f"series {s.label!r} not strictly decreasing")
    exact = {
        s.kind: planck_threshold(s, fiducial_tables, constants).log2_nops_exact
        for s in paper_scenarios
    }
    for s in series[1:]:
        crossing = planck_crossing(s, constants.l_p)
        if crossing is None or abs(crossing - exact[s.kind]) > 0.01:
            problems.append(f"series {s.label!r} crossing {crossing} != {exact[s.kind]:.3f}")

    path = tmp_path / "figure.csv"
    write_series(series, annotations, path, "csv")
    raw = path.read_bytes()
    text = raw.decode("utf-8")
    lines = text.splitlines()
    if b"\r" in raw:
        problems.append("CSV contains carriage returns")
    if not text.endswith("\n"):
        problems.append("CSV missing trailing newline")
    if lines[0] != CSV_HEADER:
        problems.append(f"CSV header {lines[0]!r}")
    if len(lines) != 1 + sum(len(s.points) for s in series):
        problems.append("CSV row count mismatch")
    cells = lines[1].split(",")
    p = series[0].points[0]
    if cells[2:] != [format(p.log2_neo, ".17g"), format(p.length_m, ".17g"), format(p.energy_ev, ".17g")]:
        problems.append(f"CSV float rendering {cells[2:]}")
    _report(12, not problems, "figure series and CSV schema" + (f": {problems}" if problems else " all verified"))
