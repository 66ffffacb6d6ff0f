"""Fundamental constants and the derived Planck scale.

All quantities are SI. Constants are injected rather than hard-coded so
that tests can use exact round numbers; :func:`codata_scale` supplies the
CODATA 2018 recommended values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidConstantError

# CODATA 2018 recommended values
HBAR_CODATA = 1.054571817e-34  # J s (exact by SI redefinition, truncated)
G_CODATA = 6.67430e-11         # m^3 kg^-1 s^-2
C_CODATA = 299792458.0         # m/s (exact)

SQRT_4PI = math.sqrt(4.0 * math.pi)


@dataclass(frozen=True)
class PlanckScale:
    """Fundamental constants plus the derived Planck-scale quantities.

    ``lam`` is the commutator scale of the position algebra,
    lam = planck_length / sqrt(4 pi). Immutable; safe to share across
    threads.
    """

    hbar: float
    G: float
    c: float
    planck_length: float
    planck_time: float
    planck_mass: float
    lam: float


def derive_planck_scale(hbar: float = HBAR_CODATA,
                        G: float = G_CODATA,
                        c: float = C_CODATA) -> PlanckScale:
    """Derive the Planck scale from (hbar, G, c).

    planck_length = sqrt(hbar G / c^3), planck_time = planck_length / c,
    planck_mass = sqrt(hbar c / G), lam = planck_length / sqrt(4 pi).

    Raises
    ------
    InvalidConstantError
        If any input is non-positive or non-finite.
    """
    for name, value in (("hbar", hbar), ("G", G), ("c", c)):
        if not math.isfinite(value) or value <= 0.0:
            raise InvalidConstantError(
                f"{name} must be strictly positive and finite, got {value!r}")
    planck_length = math.sqrt(hbar * G / c ** 3)
    return PlanckScale(
        hbar=hbar,
        G=G,
        c=c,
        planck_length=planck_length,
        planck_time=planck_length / c,
        planck_mass=math.sqrt(hbar * c / G),
        lam=planck_length / SQRT_4PI,
    )


def codata_scale() -> PlanckScale:
    """Planck scale from the CODATA 2018 constants."""
    return derive_planck_scale()
