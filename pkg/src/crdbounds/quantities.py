"""Log-space arithmetic for numbers far beyond double range, plus physical constants.

Operation counts in this package reach 2^1700 and beyond, so positive
quantities are carried as base-2 logarithms and only exponentiated when the
result is known to fit in a double.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

# CODATA 2018 values (c and the eV are exact by definition since the 2019
# SI redefinition); Mpc per the IAU definition, year = Julian year.
SPEED_OF_LIGHT = 299_792_458.0  # m / s
HBAR = 1.054_571_817e-34  # J s
GRAVITATIONAL_CONSTANT = 6.674_30e-11  # m^3 kg^-1 s^-2
EV_IN_JOULES = 1.602_176_634e-19  # J / eV
MPC_IN_M = 3.085_677_581_491_367_3e22  # m / Mpc
JULIAN_YEAR_S = 3.155_76e7  # s / yr
GYR_IN_S = JULIAN_YEAR_S * 1e9  # s / Gyr

_LOG10_2 = math.log10(2.0)


@dataclass(frozen=True, order=True)
class LogQuantity:
    """A strictly positive real carried as its base-2 logarithm.

    The represented quantity is ``2**log2_value`` in whatever unit the caller
    declared. Ordering compares represented magnitudes.
    """

    log2_value: float

    @classmethod
    def from_real(cls, x: float) -> "LogQuantity":
        if not x > 0.0:
            raise ValueError(f"LogQuantity requires a positive value, got {x!r}")
        return cls(math.log2(x))

    def to_real(self) -> float:
        """The represented value as a double; overflows beyond ~2^1024."""
        return 2.0 ** self.log2_value

    def __mul__(self, other: "LogQuantity") -> "LogQuantity":
        return LogQuantity(self.log2_value + other.log2_value)

    def __truediv__(self, other: "LogQuantity") -> "LogQuantity":
        return LogQuantity(self.log2_value - other.log2_value)

    def __pow__(self, exponent: float) -> "LogQuantity":
        return LogQuantity(self.log2_value * exponent)

    def decimal_str(self) -> str:
        """Scientific notation "m × 10^e" with 1 <= m < 10, 4 significant digits."""
        log10_value = self.log2_value * _LOG10_2
        e = math.floor(log10_value)
        m = 10.0 ** (log10_value - e)
        if float(f"{m:.3f}") >= 10.0:  # rounding carried the mantissa over
            m /= 10.0
            e += 1
        return f"{m:.3f} × 10^{e}"

    def pow2_str(self) -> str:
        """Binary-exponent form "k × 2^n" with 1 <= k < 2, 3 significant digits."""
        n = math.floor(self.log2_value)
        k = 2.0 ** (self.log2_value - n)
        if float(f"{k:.2f}") >= 2.0:
            k /= 2.0
            n += 1
        return f"{k:.2f} × 2^{n}"


def log_quantity_from_product(factors: Iterable[Tuple[float, float]]) -> LogQuantity:
    """Product of ``base**exponent`` factors, evaluated entirely in log space.

    Uses exact summation (math.fsum) so the result is independent of factor
    order. Each base must be positive.
    """
    terms = []
    for i, (base, exponent) in enumerate(factors):
        if not base > 0.0:
            raise ValueError(f"factor {i}: base must be positive, got {base!r}")
        terms.append(exponent * math.log2(base))
    return LogQuantity(math.fsum(terms))


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants and the Planck scales derived from them.

    e_p_ev is the Planck energy expressed in eV; mpc_in_m and year_in_s are the
    unit conversion factors the rest of the package relies on.
    """

    c: float  # m / s
    hbar: float  # J s
    G: float  # m^3 kg^-1 s^-2
    l_p: float  # m
    t_p: float  # s
    e_p_ev: float  # eV
    mpc_in_m: float
    year_in_s: float


def planck_units(
    c: float = SPEED_OF_LIGHT,
    hbar: float = HBAR,
    G: float = GRAVITATIONAL_CONSTANT,
) -> PhysicalConstants:
    """Derive the Planck length, time and energy from c, hbar and G.

    l_p = sqrt(hbar G / c^3), t_p = l_p / c, E_p = hbar / t_p (converted to eV).
    """
    for name, value in (("c", c), ("hbar", hbar), ("G", G)):
        if not value > 0.0:
            raise ValueError(f"{name} must be positive, got {value!r}")
    l_p = math.sqrt(hbar * G / c**3)
    t_p = l_p / c
    e_p_ev = hbar / t_p / EV_IN_JOULES
    return PhysicalConstants(
        c=c,
        hbar=hbar,
        G=G,
        l_p=l_p,
        t_p=t_p,
        e_p_ev=e_p_ev,
        mpc_in_m=MPC_IN_M,
        year_in_s=JULIAN_YEAR_S,
    )


def m_to_mpc(length_m: float) -> float:
    return length_m / MPC_IN_M


def mpc_to_m(length_mpc: float) -> float:
    return length_mpc * MPC_IN_M


def s_to_gyr(time_s: float) -> float:
    return time_s / GYR_IN_S


def gyr_to_s(time_gyr: float) -> float:
    return time_gyr * GYR_IN_S
