"""Run configuration: defaults, flat key=value config files, flag overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Mapping, Optional, Union

from .errors import ConfigurationError
from .quantities import JULIAN_YEAR_S

ENV_CONFIG_PATH = "CRDBOUNDS_CONFIG"

_FLATNESS_TOL = 1e-9


@dataclass(frozen=True)
class RunConfig:
    h0_km_s_mpc: float = 70.0
    omega_m: float = 0.3
    omega_lambda: float = 0.7
    lab_volume_m3: float = 1000.0
    lab_duration_s: float = JULIAN_YEAR_S
    inputs_per_op: int = 8
    quad_rel_tol: float = 1e-9
    grid_points: int = 4096

    def validate(self) -> "RunConfig":
        for name in ("h0_km_s_mpc", "omega_m", "lab_volume_m3", "lab_duration_s"):
            value = getattr(self, name)
            if not value > 0.0:
                raise ConfigurationError(f"{name} must be positive, got {value!r}")
        # omega_lambda = 0 is the legitimate matter-only limit
        if not self.omega_lambda >= 0.0:
            raise ConfigurationError(
                f"omega_lambda must be non-negative, got {self.omega_lambda!r}"
            )
        if abs(self.omega_m + self.omega_lambda - 1.0) > _FLATNESS_TOL:
            raise ConfigurationError(
                "flatness violated: omega_m + omega_lambda = "
                f"{self.omega_m + self.omega_lambda!r} must equal 1 within {_FLATNESS_TOL}"
            )
        if self.inputs_per_op < 1:
            raise ConfigurationError(
                f"inputs_per_op must be a positive integer, got {self.inputs_per_op!r}"
            )
        if not 0.0 < self.quad_rel_tol <= 1e-2:
            raise ConfigurationError(
                f"quad_rel_tol must lie in (0, 1e-2], got {self.quad_rel_tol!r}"
            )
        if self.grid_points < 16:
            raise ConfigurationError(f"grid_points must be at least 16, got {self.grid_points!r}")
        return self

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}


def parse_config_file(path: Union[str, Path]) -> dict:
    """Parse a flat key=value file; '#' starts a comment, blank lines ignored."""
    values = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _FIELD_TYPES:
            raise ConfigurationError(f"{path}:{lineno}: unknown configuration key {key!r}")
        caster = int if _FIELD_TYPES[key] in (int, "int") else float
        try:
            values[key] = caster(value)
        except ValueError as exc:
            raise ConfigurationError(f"{path}:{lineno}: bad value for {key}: {value!r}") from exc
    return values


def load_config(
    path: Optional[Union[str, Path]] = None,
    overrides: Optional[Mapping[str, object]] = None,
) -> RunConfig:
    """Defaults, then the config file (explicit path or $CRDBOUNDS_CONFIG),
    then explicit overrides; validated before returning."""
    config = RunConfig()
    if path is None:
        env_path = os.environ.get(ENV_CONFIG_PATH)
        if env_path:
            path = env_path
    if path is not None:
        if not Path(path).exists():
            raise ConfigurationError(f"config file not found: {path}")
        config = replace(config, **parse_config_file(path))
    if overrides:
        cleaned = {k: v for k, v in overrides.items() if v is not None}
        unknown = set(cleaned) - set(_FIELD_TYPES)
        if unknown:
            raise ConfigurationError(f"unknown configuration keys: {sorted(unknown)}")
        config = replace(config, **cleaned)
    return config.validate()
