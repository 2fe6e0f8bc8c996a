"""Flat Lambda-CDM light-cone kernel.

Provides the scale factor, age of the universe, conformal-time and past
light-cone 4-volume tables, comoving distances, the 4-volume growth rate, and
the three dimensionless prefactors (k4u, k7u, k8u) that convert powers of
c/(H0 l) into operation counts for the universe-scale bounds.

All times are SI seconds internally; a(t) is normalized to 1 today. Radiation
density is ignored. The matter-era integrable singularity 1/a(t) ~ t^(-2/3)
is removed by the substitution u = t^(1/3): every table is sampled on a grid
of u values, and integrands are written as functions of u. The nested
4-volume integral

    V4(t2) = (4 pi / 3) * int_0^t2 a(t1)^3 [c (eta(t2) - eta(t1))]^3 dt1

is reduced to cumulative moment tables M_k(t) = int_0^t a^3 eta^k dt by
expanding the cube, so V4 and its time derivative are O(1) table lookups:

    V4(t)    = (4 pi / 3) c^3 (eta^3 M0 - 3 eta^2 M1 + 3 eta M2 - M3)
    V4dot(t) = 4 pi c^3 / a(t) * (eta^2 M0 - 2 eta M1 + M2)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from .quadrature import (
    DEFAULT_REL_TOL,
    CumulativeTable,
    build_cumulative,
    integrate,
    interpolate,
)
from .quantities import MPC_IN_M, SPEED_OF_LIGHT

DEFAULT_GRID_POINTS = 4096

# Smallest tabulated time as a fraction of the age of the universe; in u this
# spans 8 decades, plenty for interpolation while keeping nodes log-dense.
_T_MIN_FRACTION = 1e-24

_REL_SLACK = 1.0 + 1e-12  # tolerate float noise when callers pass t = T_U


@dataclass(frozen=True)
class CosmologyParams:
    """Flat Lambda-CDM parameters with derived timescales.

    h0 is in s^-1 (use ``create`` to convert from km/s/Mpc). t_lambda is the
    dark-energy timescale 2/(3 H0 sqrt(Omega_L)), infinite in the matter-only
    limit; t_universe solves a(t) = 1.
    """

    h0: float
    omega_m: float
    omega_lambda: float
    t_lambda: float
    t_universe: float

    def __post_init__(self):
        if not self.h0 > 0.0:
            raise ValueError(f"H0 must be positive, got {self.h0!r}")
        if not 0.0 < self.omega_m <= 1.0:
            raise ValueError(f"omega_m must lie in (0, 1], got {self.omega_m!r}")
        if not 0.0 <= self.omega_lambda < 1.0:
            raise ValueError(f"omega_lambda must lie in [0, 1), got {self.omega_lambda!r}")
        if abs(self.omega_m + self.omega_lambda - 1.0) > 1e-12:
            raise ValueError(
                "flatness violated: omega_m + omega_lambda = "
                f"{self.omega_m + self.omega_lambda!r} differs from 1 by more than 1e-12"
            )

    @classmethod
    def create(
        cls,
        h0_km_s_mpc: float = 70.0,
        omega_m: float = 0.3,
        omega_lambda: float = 0.7,
    ) -> "CosmologyParams":
        if not h0_km_s_mpc > 0.0:
            raise ValueError(f"H0 must be positive, got {h0_km_s_mpc!r}")
        if not 0.0 < omega_m <= 1.0:
            raise ValueError(f"omega_m must lie in (0, 1], got {omega_m!r}")
        if not 0.0 <= omega_lambda < 1.0:
            raise ValueError(f"omega_lambda must lie in [0, 1), got {omega_lambda!r}")
        h0 = h0_km_s_mpc * 1e3 / MPC_IN_M
        if omega_lambda == 0.0:
            t_lambda = math.inf
        else:
            t_lambda = 2.0 / (3.0 * h0 * math.sqrt(omega_lambda))
        t_universe = age_of_universe(h0, omega_m, omega_lambda)
        return cls(
            h0=h0,
            omega_m=omega_m,
            omega_lambda=omega_lambda,
            t_lambda=t_lambda,
            t_universe=t_universe,
        )


def age_of_universe(h0: float, omega_m: float, omega_lambda: float) -> float:
    """Age in seconds, solving a(T) = 1.

    T = t_lambda * asinh(sqrt(Omega_L / Omega_M)); the omega_lambda -> 0 limit
    is the matter-only closed form 2/(3 H0), applied analytically to avoid the
    0 * inf indeterminacy in t_lambda.
    """
    if not h0 > 0.0:
        raise ValueError(f"H0 must be positive, got {h0!r}")
    if omega_lambda == 0.0:
        return 2.0 / (3.0 * h0)
    t_lambda = 2.0 / (3.0 * h0 * math.sqrt(omega_lambda))
    return t_lambda * math.asinh(math.sqrt(omega_lambda / omega_m))


def scale_factor(t, params: CosmologyParams):
    """a(t) = (Omega_M/Omega_L)^(1/3) sinh^(2/3)(t / t_lambda), a(today) = 1.

    Accepts a scalar or array time in seconds; t must be >= 0. The matter-only
    limit is the power law (t / T)^(2/3).
    """
    ts = np.asarray(t, dtype=float)
    if np.any(ts < 0.0):
        raise ValueError("scale factor is only defined for t >= 0")
    if params.omega_lambda == 0.0:
        a = (ts / params.t_universe) ** (2.0 / 3.0)
    else:
        amp = (params.omega_m / params.omega_lambda) ** (1.0 / 3.0)
        a = amp * np.sinh(ts / params.t_lambda) ** (2.0 / 3.0)
    return float(a) if np.isscalar(t) or getattr(t, "ndim", 1) == 0 else a


def _early_coefficient(params: CosmologyParams) -> float:
    """Limit of a(t)/t^(2/3) as t -> 0 (matter-era expansion amplitude)."""
    if params.omega_lambda == 0.0:
        return params.t_universe ** (-2.0 / 3.0)
    amp = (params.omega_m / params.omega_lambda) ** (1.0 / 3.0)
    return amp * params.t_lambda ** (-2.0 / 3.0)


@dataclass(frozen=True)
class LightconeTables:
    """Sampled light-cone integrals for one cosmology, keyed by u = t^(1/3).

    eta accumulates conformal time int dt/a (seconds); v4 holds the past
    light-cone 4-volume (m^3 s). moments holds the four cumulative integrals
    of a^3 eta^k (k = 0..3) that v4, v4_rate and the k-factors are assembled
    from. The dimensionless prefactors k4u, k7u, k8u are precomputed here.
    """

    params: CosmologyParams
    eta: CumulativeTable
    v4: CumulativeTable
    moments: Tuple[CumulativeTable, CumulativeTable, CumulativeTable, CumulativeTable]
    k4u: float
    k7u: float
    k8u: float

    @property
    def u_max(self) -> float:
        return self.eta.abscissae[-1]


def _u_of_t(t: float) -> float:
    return float(t) ** (1.0 / 3.0)


def build_tables(
    params: CosmologyParams,
    rel_tol: float = DEFAULT_REL_TOL,
    grid_points: int = DEFAULT_GRID_POINTS,
) -> LightconeTables:
    """Build the conformal-time, moment and 4-volume tables over [0, T].

    grid_points log-spaced u nodes (plus the u = 0 anchor) keep the relative
    interpolation error orders of magnitude below rel_tol everywhere.
    """
    if grid_points < 16:
        raise ValueError(f"grid_points must be at least 16, got {grid_points!r}")
    c = SPEED_OF_LIGHT
    u_max = _u_of_t(params.t_universe)
    grid = np.concatenate(
        [[0.0], np.geomspace(u_max * _T_MIN_FRACTION ** (1.0 / 3.0), u_max, grid_points)]
    )

    def eta_integrand(u):
        u = np.asarray(u)
        return 3.0 * u * u / scale_factor(u**3, params)

    eta_derivs = np.empty_like(grid)
    eta_derivs[1:] = eta_integrand(grid[1:])
    eta_derivs[0] = 3.0 / _early_coefficient(params)  # limit of 3u^2/a(u^3)
    eta = build_cumulative(eta_integrand, grid, rel_tol, node_derivatives=eta_derivs)
    eta_spline = eta._interpolant()

    def moment_integrand(k):
        def g(u):
            u = np.asarray(u)
            a3 = scale_factor(u**3, params) ** 3
            return 3.0 * u * u * a3 * eta_spline(u) ** k

        return g

    moments = []
    for k in range(4):
        g = moment_integrand(k)
        derivs = np.empty_like(grid)
        derivs[1:] = g(grid[1:])
        derivs[0] = 0.0  # a^3 u^2 -> 0
        moments.append(build_cumulative(g, grid, rel_tol, node_derivatives=derivs))

    eta_n = eta.values
    m0, m1, m2, m3 = (m.values for m in moments)
    v4_nodes = (4.0 * math.pi / 3.0) * c**3 * (
        eta_n**3 * m0 - 3.0 * eta_n**2 * m1 + 3.0 * eta_n * m2 - m3
    )
    v4_nodes[0] = 0.0
    np.maximum(v4_nodes, 0.0, out=v4_nodes)  # guard cancellation noise at tiny t

    a_nodes = np.asarray(scale_factor(grid[1:] ** 3, params))
    v4dot_nodes = np.empty_like(grid)
    v4dot_nodes[1:] = (
        4.0 * math.pi * c**3 / a_nodes
        * (eta_n[1:] ** 2 * m0[1:] - 2.0 * eta_n[1:] * m1[1:] + m2[1:])
    )
    v4dot_nodes[0] = 0.0
    v4_derivs = 3.0 * grid**2 * v4dot_nodes  # dV4/du = 3 u^2 dV4/dt
    v4 = CumulativeTable(grid, v4_nodes, v4_derivs)

    k4u = params.h0**4 * v4_nodes[-1] / c**3

    eta_today = eta_n[-1]
    v4_spline = v4._interpolant()
    m_splines = [m._interpolant() for m in moments]

    def a_cubed(u):
        return scale_factor(np.asarray(u) ** 3, params) ** 3

    def d_cubed(u):
        return (c * np.maximum(eta_today - eta_spline(u), 0.0)) ** 3

    def k8_integrand(u):
        u = np.asarray(u)
        return 3.0 * u * u * a_cubed(u) * d_cubed(u) * v4_spline(u)

    def v4dot_from_moments(u):
        u = np.asarray(u)
        e = eta_spline(u)
        w = e**2 * m_splines[0](u) - 2.0 * e * m_splines[1](u) + m_splines[2](u)
        return 4.0 * math.pi * c**3 / scale_factor(u**3, params) * w

    def k7_integrand(u):
        u = np.asarray(u)
        return 3.0 * u * u * a_cubed(u) * d_cubed(u) * v4dot_from_moments(u)

    common = 4.0 * math.pi / 3.0 / c**6
    k8u = common * params.h0**8 * integrate(k8_integrand, 0.0, u_max, rel_tol)
    k7u = common * params.h0**7 * integrate(k7_integrand, 0.0, u_max, rel_tol)

    return LightconeTables(
        params=params,
        eta=eta,
        v4=v4,
        moments=tuple(moments),
        k4u=float(k4u),
        k7u=float(k7u),
        k8u=float(k8u),
    )


def _checked_u(t: float, tables: LightconeTables, name: str = "t") -> float:
    t_max = tables.params.t_universe
    if not 0.0 <= t <= t_max * _REL_SLACK:
        raise ValueError(f"{name}={t!r} outside the tabulated range [0, {t_max!r}]")
    return min(_u_of_t(t), tables.u_max)


def comoving_distance(t1: float, t2: float, tables: LightconeTables) -> float:
    """d(t1, t2) = c * (eta(t2) - eta(t1)) in meters, 0 <= t1 <= t2 <= T."""
    if t1 > t2:
        raise ValueError(f"t1={t1!r} must not exceed t2={t2!r}")
    u1 = _checked_u(t1, tables, "t1")
    u2 = _checked_u(t2, tables, "t2")
    if u1 == u2:
        return 0.0
    return SPEED_OF_LIGHT * float(
        interpolate(tables.eta, u2) - interpolate(tables.eta, u1)
    )


def v4(t2: float, tables: LightconeTables) -> float:
    """Past light-cone 4-volume V4(t2) in m^3 s, from the sampled table."""
    u = _checked_u(t2, tables, "t2")
    return float(interpolate(tables.v4, u))


def v4_rate(t2: float, tables: LightconeTables) -> float:
    """dV4/dt at t2 in m^3, assembled from the moment tables.

    t2 = 0 returns 0 by continuity (the integration domain vanishes).
    """
    u = _checked_u(t2, tables, "t2")
    if u == 0.0:
        return 0.0
    e = float(interpolate(tables.eta, u))
    m0 = float(interpolate(tables.moments[0], u))
    m1 = float(interpolate(tables.moments[1], u))
    m2 = float(interpolate(tables.moments[2], u))
    a = scale_factor(u**3, tables.params)
    return 4.0 * math.pi * SPEED_OF_LIGHT**3 / a * (e * e * m0 - 2.0 * e * m1 + m2)


def k_factors(
    params: CosmologyParams,
    rel_tol: float = DEFAULT_REL_TOL,
    grid_points: int = DEFAULT_GRID_POINTS,
    tables: Optional[LightconeTables] = None,
) -> Tuple[float, float, float]:
    """The dimensionless prefactors (k4u, k7u, k8u) for the given cosmology.

    k4u = H0^4 V4(T) / c^3
    k8u = (4 pi H0^8 / 3 c^6) int_0^T V4(t) a^3(t) d^3(t, T) dt
    k7u = (4 pi H0^7 / 3 c^6) int_0^T a^3(t) d^3(t, T) V4dot(t) dt
    """
    if tables is None or tables.params != params:
        tables = build_tables(params, rel_tol=rel_tol, grid_points=grid_points)
    return tables.k4u, tables.k7u, tables.k8u
