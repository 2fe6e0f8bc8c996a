"""Scenario bounds relating a substrate length scale to an operation count.

Seven scenarios, each a power law N_ops = K / l^p evaluated in log2 space:

    LAB                       V3 c T / l^4
    LAB_NEAREST_NEIGHBOR      inputs_per_op * V3 c T / l^4
    LAB_FULLY_CONNECTED       (V3 c T / l^4)^2 / 2
    LAB_BROADCAST             (V3 / l^3)^2 * T / tau,  tau = l / c
    UNIVERSE                  k4u * (c / (H0 l))^4
    UNIVERSE_FULLY_CONNECTED  k8u * (c / (H0 l))^8
    UNIVERSE_BROADCAST        k7u * (c / (H0 l))^7

The broadcast clock is pinned at the causal limit tau = l/c. Universe kinds
need light-cone tables built from the scenario's cosmological parameters.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .cosmology import CosmologyParams, LightconeTables
from .errors import ConfigurationError
from .quantities import (
    EV_IN_JOULES,
    SPEED_OF_LIGHT,
    LogQuantity,
    PhysicalConstants,
    planck_units,
)

_LOG2_C = math.log2(SPEED_OF_LIGHT)


class ScenarioKind(enum.Enum):
    LAB = "lab"
    LAB_NEAREST_NEIGHBOR = "lab-nearest-neighbor"
    LAB_FULLY_CONNECTED = "lab-fully-connected"
    LAB_BROADCAST = "lab-broadcast"
    UNIVERSE = "universe"
    UNIVERSE_FULLY_CONNECTED = "universe-fully-connected"
    UNIVERSE_BROADCAST = "universe-broadcast"

    @property
    def exponent(self) -> int:
        """Power p in N_ops = K / l^p."""
        return _EXPONENTS[self]

    @property
    def is_lab(self) -> bool:
        return self in (
            ScenarioKind.LAB,
            ScenarioKind.LAB_NEAREST_NEIGHBOR,
            ScenarioKind.LAB_FULLY_CONNECTED,
            ScenarioKind.LAB_BROADCAST,
        )


_EXPONENTS = {
    ScenarioKind.LAB: 4,
    ScenarioKind.LAB_NEAREST_NEIGHBOR: 4,
    ScenarioKind.LAB_FULLY_CONNECTED: 8,
    ScenarioKind.LAB_BROADCAST: 7,
    ScenarioKind.UNIVERSE: 4,
    ScenarioKind.UNIVERSE_FULLY_CONNECTED: 8,
    ScenarioKind.UNIVERSE_BROADCAST: 7,
}


@dataclass(frozen=True)
class Scenario:
    """One bound model: a kind plus exactly the parameters that kind needs.

    Lab kinds take a volume (m^3) and a duration (s); the nearest-neighbor
    variant additionally takes the input count per operation; universe kinds
    take cosmological parameters instead.
    """

    kind: ScenarioKind
    v3: Optional[float] = None
    duration: Optional[float] = None
    inputs_per_op: Optional[int] = None
    params: Optional[CosmologyParams] = None

    def __post_init__(self):
        if self.kind.is_lab:
            if self.v3 is None or not self.v3 > 0.0:
                raise ValueError(f"{self.kind.name} requires a positive volume, got {self.v3!r}")
            if self.duration is None or not self.duration > 0.0:
                raise ValueError(
                    f"{self.kind.name} requires a positive duration, got {self.duration!r}"
                )
            if self.params is not None:
                raise ValueError(f"{self.kind.name} does not take cosmological parameters")
        else:
            if self.params is None:
                raise ValueError(f"{self.kind.name} requires cosmological parameters")
            if self.v3 is not None or self.duration is not None:
                raise ValueError(f"{self.kind.name} does not take a lab volume or duration")
        if self.kind is ScenarioKind.LAB_NEAREST_NEIGHBOR:
            if self.inputs_per_op is None or self.inputs_per_op < 1:
                raise ValueError(
                    f"inputs_per_op must be a positive integer, got {self.inputs_per_op!r}"
                )
        elif self.inputs_per_op is not None:
            raise ValueError(f"{self.kind.name} does not take inputs_per_op")

    @classmethod
    def lab(cls, v3: float, duration: float) -> "Scenario":
        return cls(ScenarioKind.LAB, v3=v3, duration=duration)

    @classmethod
    def lab_nearest_neighbor(
        cls, v3: float, duration: float, inputs_per_op: int = 8
    ) -> "Scenario":
        return cls(
            ScenarioKind.LAB_NEAREST_NEIGHBOR,
            v3=v3,
            duration=duration,
            inputs_per_op=inputs_per_op,
        )

    @classmethod
    def lab_fully_connected(cls, v3: float, duration: float) -> "Scenario":
        return cls(ScenarioKind.LAB_FULLY_CONNECTED, v3=v3, duration=duration)

    @classmethod
    def lab_broadcast(cls, v3: float, duration: float) -> "Scenario":
        return cls(ScenarioKind.LAB_BROADCAST, v3=v3, duration=duration)

    @classmethod
    def universe(cls, params: CosmologyParams) -> "Scenario":
        return cls(ScenarioKind.UNIVERSE, params=params)

    @classmethod
    def universe_fully_connected(cls, params: CosmologyParams) -> "Scenario":
        return cls(ScenarioKind.UNIVERSE_FULLY_CONNECTED, params=params)

    @classmethod
    def universe_broadcast(cls, params: CosmologyParams) -> "Scenario":
        return cls(ScenarioKind.UNIVERSE_BROADCAST, params=params)


@dataclass(frozen=True)
class BoundResult:
    """A scenario evaluated at one probed length.

    crd is the operation rate density implied by the bound: N/(V3 T) for lab
    kinds, and the saturating packing rate c/l^4 for universe kinds.
    """

    n_ops: LogQuantity
    length: float
    crd: LogQuantity

    def __post_init__(self):
        if not self.length > 0.0:
            raise ValueError(f"length must be positive, got {self.length!r}")


def max_length(v3: float, duration: float, n_ops: LogQuantity) -> float:
    """Upper limit l <= (V3 c T / N_ops)^(1/4) on the element spacing."""
    if not (v3 > 0.0 and duration > 0.0):
        raise ValueError("volume and duration must be positive")
    log2_l = (
        math.log2(v3) + _LOG2_C + math.log2(duration) - n_ops.log2_value
    ) / 4.0
    return 2.0 ** log2_l


def crd(n_ops: LogQuantity, v3: float, duration: float) -> LogQuantity:
    """Computational rate density N_ops / (V3 T) in ops m^-3 s^-1."""
    if not (v3 > 0.0 and duration > 0.0):
        raise ValueError("volume and duration must be positive")
    return LogQuantity(n_ops.log2_value - math.log2(v3) - math.log2(duration))


def planck_crd(constants: Optional[PhysicalConstants] = None) -> LogQuantity:
    """The Planck rate-density ceiling 1/(l_p^3 t_p) in ops m^-3 s^-1."""
    k = constants if constants is not None else planck_units()
    return LogQuantity(-3.0 * math.log2(k.l_p) - math.log2(k.t_p))


def neo_from_qubits(n: int) -> LogQuantity:
    """Equivalent classical operation count 2^n for n logical qubits."""
    if n < 1:
        raise ValueError(f"qubit count must be at least 1, got {n!r}")
    return LogQuantity(float(n))


def _require_tables(
    scenario: Scenario, tables: Optional[LightconeTables]
) -> LightconeTables:
    if tables is None:
        raise ConfigurationError(
            f"{scenario.kind.name} requires light-cone tables; build them with "
            "cosmology.build_tables(scenario.params)"
        )
    if tables.params != scenario.params:
        raise ConfigurationError(
            f"tables were built for different cosmological parameters than "
            f"the {scenario.kind.name} scenario"
        )
    return tables


def _log2_prefactor(scenario: Scenario, tables: Optional[LightconeTables]) -> float:
    """log2 of K in N_ops = K / l^p for the scenario."""
    kind = scenario.kind
    if kind is ScenarioKind.LAB:
        return math.log2(scenario.v3) + _LOG2_C + math.log2(scenario.duration)
    if kind is ScenarioKind.LAB_NEAREST_NEIGHBOR:
        return (
            math.log2(scenario.inputs_per_op)
            + math.log2(scenario.v3)
            + _LOG2_C
            + math.log2(scenario.duration)
        )
    if kind is ScenarioKind.LAB_FULLY_CONNECTED:
        return 2.0 * (math.log2(scenario.v3) + _LOG2_C + math.log2(scenario.duration)) - 1.0
    if kind is ScenarioKind.LAB_BROADCAST:
        return 2.0 * math.log2(scenario.v3) + _LOG2_C + math.log2(scenario.duration)
    t = _require_tables(scenario, tables)
    log2_hubble_radius = _LOG2_C - math.log2(t.params.h0)
    if kind is ScenarioKind.UNIVERSE:
        return math.log2(t.k4u) + 4.0 * log2_hubble_radius
    if kind is ScenarioKind.UNIVERSE_FULLY_CONNECTED:
        return math.log2(t.k8u) + 8.0 * log2_hubble_radius
    return math.log2(t.k7u) + 7.0 * log2_hubble_radius


def n_ops_for_scenario(
    scenario: Scenario,
    length: float,
    tables: Optional[LightconeTables] = None,
) -> LogQuantity:
    """Operation count the scenario makes available at element spacing l."""
    if not length > 0.0:
        raise ValueError(f"length must be positive, got {length!r}")
    log2_k = _log2_prefactor(scenario, tables)
    return LogQuantity(log2_k - scenario.kind.exponent * math.log2(length))


def length_for_scenario(
    scenario: Scenario,
    n_ops: LogQuantity,
    tables: Optional[LightconeTables] = None,
) -> float:
    """Exact analytic inverse of n_ops_for_scenario."""
    log2_k = _log2_prefactor(scenario, tables)
    return 2.0 ** ((log2_k - n_ops.log2_value) / scenario.kind.exponent)


def bound_at_length(
    scenario: Scenario,
    length: float,
    tables: Optional[LightconeTables] = None,
) -> BoundResult:
    """Evaluate a scenario at a probed length, packaging N_ops, l and CRD."""
    n_ops = n_ops_for_scenario(scenario, length, tables)
    if scenario.kind.is_lab:
        rate = crd(n_ops, scenario.v3, scenario.duration)
    else:
        rate = LogQuantity(_LOG2_C - 4.0 * math.log2(length))
    return BoundResult(n_ops=n_ops, length=length, crd=rate)


def energy_from_length(length: float, constants: Optional[PhysicalConstants] = None) -> float:
    """Energy scale hbar c / l in eV; reproduces the Planck energy at l = l_p."""
    if not length > 0.0:
        raise ValueError(f"length must be positive, got {length!r}")
    k = constants if constants is not None else planck_units()
    return k.hbar * k.c / length / EV_IN_JOULES
