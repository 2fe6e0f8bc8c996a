"""Machine-readable data series for the probed-length-versus-NEO figure.

Emits the five canonical bound lines (small lab, large lab, universe, fully
connected lab, fully connected universe) sampled on a log2-NEO grid, plus
annotation markers (Planck scale, RSA qubit range, historical collider
energies). Rendering is left to external tools; this module only writes CSV
and JSON files.

CSV schema: header ``series,label,log2_neo,length_m,energy_ev``, UTF-8, LF
line endings, floats rendered with %.17g. JSON mirrors the series and
annotation structure with identical field names, so a write/read round trip
reproduces every point bit-exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from .bounds import Scenario, ScenarioKind, energy_from_length, length_for_scenario
from .cosmology import LightconeTables
from .quantities import JULIAN_YEAR_S, LogQuantity, PhysicalConstants, planck_units

STYLE_HINTS = ("dotted", "solid_lower", "solid_upper", "dashed", "dashdot")

CSV_HEADER = "series,label,log2_neo,length_m,energy_ev"


class FigurePoint(NamedTuple):
    log2_neo: float
    length_m: float
    energy_ev: float


@dataclass(frozen=True)
class FigureSeries:
    label: str
    kind: ScenarioKind
    style_hint: str
    points: Tuple[FigurePoint, ...]

    def __post_init__(self):
        if self.style_hint not in STYLE_HINTS:
            raise ValueError(f"unknown style hint {self.style_hint!r}")


@dataclass(frozen=True)
class Annotation:
    """A marker keyed either to the x axis (log2_neo) or the right-hand
    energy axis (energy_ev)."""

    label: str
    note: str
    log2_neo: Optional[float] = None
    energy_ev: Optional[float] = None

    def __post_init__(self):
        if (self.log2_neo is None) == (self.energy_ev is None):
            raise ValueError("exactly one of log2_neo or energy_ev must be set")
        value = self.log2_neo if self.log2_neo is not None else self.energy_ev
        if not math.isfinite(value):
            raise ValueError(f"annotation value must be finite, got {value!r}")


@dataclass(frozen=True)
class FigureConfig:
    """Canonical figure parameters; the marker values are conventions, not
    computed quantities, so they stay configurable."""

    small_lab_volume_m3: float = 1.0
    small_lab_duration_s: float = 1.0
    lab_volume_m3: float = 1000.0
    lab_duration_s: float = JULIAN_YEAR_S
    rsa_qubits_min: float = 1000.0
    rsa_qubits_max: float = 10000.0
    # (year, energy in eV, source) for the right-hand axis markers
    energy_markers: Tuple[Tuple[int, float, str], ...] = (
        (1900, 5.0e6, "radioactivity"),
        (1960, 3.0e10, "Alternating Gradient Synchrotron"),
        (2026, 1.0e13, "Large Hadron Collider"),
    )


def build_figure(
    qubit_range: Tuple[float, float],
    step: float,
    tables: LightconeTables,
    constants: Optional[PhysicalConstants] = None,
    config: Optional[FigureConfig] = None,
) -> Tuple[List[FigureSeries], List[Annotation]]:
    """Sample the five canonical series over a log2-NEO grid.

    qubit_range is (min, max) with min < max; step > 0. Every series is
    strictly decreasing in length along the grid.
    """
    lo, hi = qubit_range
    if not lo < hi:
        raise ValueError(f"qubit range must satisfy min < max, got ({lo!r}, {hi!r})")
    if not step > 0.0:
        raise ValueError(f"step must be positive, got {step!r}")
    k = constants if constants is not None else planck_units()
    cfg = config if config is not None else FigureConfig()
    params = tables.params

    specs = [
        (
            f"small lab {cfg.small_lab_volume_m3:g} m3 for {cfg.small_lab_duration_s:g} s",
            Scenario.lab(cfg.small_lab_volume_m3, cfg.small_lab_duration_s),
            "dotted",
        ),
        (
            f"lab {cfg.lab_volume_m3:g} m3 for {cfg.lab_duration_s:g} s",
            Scenario.lab(cfg.lab_volume_m3, cfg.lab_duration_s),
            "solid_lower",
        ),
        ("universe", Scenario.universe(params), "solid_upper"),
        (
            f"fully connected lab {cfg.lab_volume_m3:g} m3 for {cfg.lab_duration_s:g} s",
            Scenario.lab_fully_connected(cfg.lab_volume_m3, cfg.lab_duration_s),
            "dashed",
        ),
        (
            "fully connected universe",
            Scenario.universe_fully_connected(params),
            "dashdot",
        ),
    ]

    grid = np.arange(lo, hi + 0.5 * step, step)
    series = []
    for label, scenario, style in specs:
        points = []
        for q in grid:
            length = length_for_scenario(scenario, LogQuantity(float(q)), tables)
            points.append(FigurePoint(float(q), length, energy_from_length(length, k)))
        series.append(
            FigureSeries(label=label, kind=scenario.kind, style_hint=style, points=tuple(points))
        )

    annotations = [
        Annotation(
            label="planck_scale",
            note=f"l_p = {k.l_p:.6e} m",
            energy_ev=k.e_p_ev,
        ),
        Annotation(
            label="rsa_qubits_min",
            note="lower edge of the RSA-2048 logical-qubit estimate range (configurable default)",
            log2_neo=cfg.rsa_qubits_min,
        ),
        Annotation(
            label="rsa_qubits_max",
            note="upper edge of the RSA-2048 logical-qubit estimate range (configurable default)",
            log2_neo=cfg.rsa_qubits_max,
        ),
    ]
    for year, energy_ev, source in cfg.energy_markers:
        annotations.append(
            Annotation(label=str(year), note=source, energy_ev=float(energy_ev))
        )
    return series, annotations


def planck_crossing(series: FigureSeries, l_p: float) -> Optional[float]:
    """log2 NEO at which the series crosses length = l_p.

    Linear interpolation in (log2_neo, log2 length), which is exact for the
    pure power laws emitted here. None if the series never crosses.
    """
    pts = series.points
    for left, right in zip(pts, pts[1:]):
        if (left.length_m - l_p) == 0.0:
            return left.log2_neo
        if (left.length_m - l_p) > 0.0 >= (right.length_m - l_p):
            f = (math.log2(left.length_m) - math.log2(l_p)) / (
                math.log2(left.length_m) - math.log2(right.length_m)
            )
            return left.log2_neo + f * (right.log2_neo - left.log2_neo)
    if pts and pts[-1].length_m == l_p:
        return pts[-1].log2_neo
    return None


def _fmt(x: float) -> str:
    return format(x, ".17g")


def write_series(
    series: Sequence[FigureSeries],
    annotations: Sequence[Annotation],
    path: Union[str, Path],
    fmt: str = "csv",
) -> None:
    """Write series (and, for JSON, annotations) to a file.

    CSV holds the point rows only; its fixed schema has no annotation columns.
    """
    path = Path(path)
    if fmt == "csv":
        lines = [CSV_HEADER]
        for s in series:
            for p in s.points:
                lines.append(
                    f"{s.kind.value},{s.label},{_fmt(p.log2_neo)},"
                    f"{_fmt(p.length_m)},{_fmt(p.energy_ev)}"
                )
        path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    elif fmt == "json":
        doc = {
            "series": [
                {
                    "label": s.label,
                    "kind": s.kind.value,
                    "style_hint": s.style_hint,
                    "points": [
                        {
                            "log2_neo": p.log2_neo,
                            "length_m": p.length_m,
                            "energy_ev": p.energy_ev,
                        }
                        for p in s.points
                    ],
                }
                for s in series
            ],
            "annotations": [
                {
                    "label": a.label,
                    "note": a.note,
                    "log2_neo": a.log2_neo,
                    "energy_ev": a.energy_ev,
                }
                for a in annotations
            ],
        }
        path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8", newline="\n")
    else:
        raise ValueError(f"unknown format {fmt!r}; expected 'csv' or 'json'")


def read_series_json(path: Union[str, Path]) -> Tuple[List[FigureSeries], List[Annotation]]:
    """Inverse of write_series(..., fmt="json")."""
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    series = [
        FigureSeries(
            label=s["label"],
            kind=ScenarioKind(s["kind"]),
            style_hint=s["style_hint"],
            points=tuple(
                FigurePoint(p["log2_neo"], p["length_m"], p["energy_ev"])
                for p in s["points"]
            ),
        )
        for s in doc["series"]
    ]
    annotations = [
        Annotation(
            label=a["label"],
            note=a["note"],
            log2_neo=a["log2_neo"],
            energy_ev=a["energy_ev"],
        )
        for a in doc["annotations"]
    ]
    return series, annotations
