"""Planck-scale qubit thresholds and machine classification.

For each scenario the threshold is the logical-qubit count at which the
probed length equals the Planck length: n = round(log2 N_ops(l_p)), rounding
to the nearest integer with ties going up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .bounds import (
    Scenario,
    ScenarioKind,
    energy_from_length,
    length_for_scenario,
    n_ops_for_scenario,
    neo_from_qubits,
)
from .cosmology import LightconeTables
from .quantities import PhysicalConstants, planck_units


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


@dataclass(frozen=True)
class ThresholdResult:
    """Where one scenario's bound line crosses the Planck length."""

    scenario_kind: ScenarioKind
    log2_nops_exact: float
    qubits: int
    length_at_threshold: float  # m, the Planck length by construction


def planck_threshold(
    scenario: Scenario,
    tables: Optional[LightconeTables] = None,
    constants: Optional[PhysicalConstants] = None,
) -> ThresholdResult:
    k = constants if constants is not None else planck_units()
    exact = n_ops_for_scenario(scenario, k.l_p, tables).log2_value
    return ThresholdResult(
        scenario_kind=scenario.kind,
        log2_nops_exact=exact,
        qubits=round_half_up(exact),
        length_at_threshold=k.l_p,
    )


@dataclass(frozen=True)
class ScenarioAssessment:
    """One scenario probed by a machine of n logical qubits."""

    scenario_kind: ScenarioKind
    threshold_qubits: int
    probed_length_m: float
    energy_ev: float
    sub_planckian: bool


def classify_machine(
    n: int,
    scenarios: Sequence[Scenario],
    tables: Optional[LightconeTables] = None,
    constants: Optional[PhysicalConstants] = None,
) -> List[ScenarioAssessment]:
    """Probe every scenario with a 2^n operation count.

    Returns one assessment per scenario, sorted by threshold, flagging those
    whose probed length falls below the Planck length.
    """
    if n < 1:
        raise ValueError(f"qubit count must be at least 1, got {n!r}")
    k = constants if constants is not None else planck_units()
    n_ops = neo_from_qubits(n)
    assessments = []
    for scenario in scenarios:
        threshold = planck_threshold(scenario, tables, k)
        probed = length_for_scenario(scenario, n_ops, tables)
        assessments.append(
            ScenarioAssessment(
                scenario_kind=scenario.kind,
                threshold_qubits=threshold.qubits,
                probed_length_m=probed,
                energy_ev=energy_from_length(probed, k),
                sub_planckian=probed < k.l_p,
            )
        )
    assessments.sort(key=lambda a: a.threshold_qubits)
    return assessments
