"""Upper bounds on the length scale of hidden classical computational substrates.

Given a demonstrated operation count (for instance 2^n equivalent classical
operations from n logical qubits), this package bounds how small the grid
spacing of any underlying classical computing substrate would have to be,
for scenarios ranging from an isolated laboratory to the fully connected
observable universe, and solves for the qubit counts at which each scenario
reaches the Planck length.
"""

__version__ = "0.1.0"

from .quantities import LogQuantity, PhysicalConstants, planck_units
from .quadrature import CumulativeTable, QuadratureError, build_cumulative, integrate, interpolate
from .cosmology import CosmologyParams, LightconeTables, build_tables, k_factors
from .bounds import BoundResult, Scenario, ScenarioKind
from .thresholds import ThresholdResult, classify_machine, planck_threshold
from .errors import ConfigurationError

__all__ = [
    "LogQuantity",
    "PhysicalConstants",
    "planck_units",
    "CumulativeTable",
    "QuadratureError",
    "integrate",
    "build_cumulative",
    "interpolate",
    "CosmologyParams",
    "LightconeTables",
    "build_tables",
    "k_factors",
    "Scenario",
    "ScenarioKind",
    "BoundResult",
    "ThresholdResult",
    "planck_threshold",
    "classify_machine",
    "ConfigurationError",
    "__version__",
]
