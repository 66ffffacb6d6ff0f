"""Interferometer observables of the geometric jitter.

Optical response is idealized as unity: output displacement equals the
geometric jitter. The cross-instrument correlation uses a linear overlap
factor gamma(d) = max(0, 1 - d / (2 min(L_a, L_b))), a placeholder causal
model whose paper-anchored endpoints are gamma(0) = 1 and gamma = 0 beyond
overlap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import integrate

from .constants import PlanckScale
from .errors import InvalidBandError, InvalidGridError, InvalidInputError
from .noise import SpectrumEstimate, analytic_psd

SNR_DETECT = 5.0
SNR_MARGINAL = 1.0


@dataclass(frozen=True)
class InterferometerConfig:
    """Apparatus geometry: arm length (m), location (m), label."""

    arm_length: float
    position: tuple[float, float, float] = (0.0, 0.0, 0.0)
    label: str = ""

    def __post_init__(self):
        if not (self.arm_length > 0.0) or not math.isfinite(self.arm_length):
            raise InvalidInputError(
                f"arm_length must be positive, got {self.arm_length!r}")


@dataclass(frozen=True)
class DetectabilityReport:
    signal_rms: float
    band: tuple[float, float]
    instrument_floor: float
    snr_proxy: float
    verdict: str


def load_config(path) -> InterferometerConfig:
    """Read an apparatus definition from a key-value file.

    Keys: label, arm_length_m, position_m (three comma-separated numbers).
    Lines starting with '#' are ignored.
    """
    fields: dict[str, str] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        fields[key.strip()] = value.strip()
    try:
        arm = float(fields["arm_length_m"])
    except KeyError:
        raise InvalidInputError(f"{path}: missing arm_length_m") from None
    pos = (0.0, 0.0, 0.0)
    if "position_m" in fields:
        parts = [float(p) for p in fields["position_m"].split(",")]
        if len(parts) != 3:
            raise InvalidInputError(
                f"{path}: position_m needs three comma-separated numbers")
        pos = tuple(parts)
    return InterferometerConfig(arm_length=arm, position=pos,
                                label=fields.get("label", ""))


def predict_rms(config: InterferometerConfig, scale: PlanckScale) -> float:
    """RMS transverse jitter sqrt(lam * arm_length) in meters."""
    return math.sqrt(scale.lam * config.arm_length)


def _check_grid(frequencies) -> np.ndarray:
    f = np.asarray(frequencies, dtype=float)
    if f.ndim != 1 or len(f) == 0 or f[0] < 0.0 or np.any(np.diff(f) <= 0.0):
        raise InvalidGridError("frequency grid must be non-negative and increasing")
    return f


def predict_output_psd(config: InterferometerConfig, frequencies,
                       scale: PlanckScale) -> SpectrumEstimate:
    """Model output PSD on the given grid; knee at c / (2 arm_length)."""
    f = _check_grid(frequencies)
    psd = analytic_psd(config.arm_length, f, scale)
    return SpectrumEstimate(frequencies=f, psd=np.asarray(psd),
                            segment_count=0, segment_length=0)


def overlap_factor(a: InterferometerConfig, b: InterferometerConfig) -> float:
    """Correlation factor gamma(d) in [0, 1], vanishing at d = 2 min(L_a, L_b)."""
    d = math.dist(a.position, b.position)
    return max(0.0, 1.0 - d / (2.0 * min(a.arm_length, b.arm_length)))


def cross_spectrum(a: InterferometerConfig, b: InterferometerConfig,
                   frequencies, scale: PlanckScale) -> SpectrumEstimate:
    """Cross-PSD gamma(d) * sqrt(S_a * S_b); equals the auto-PSD at d = 0."""
    f = _check_grid(frequencies)
    sa = np.asarray(analytic_psd(a.arm_length, f, scale))
    sb = np.asarray(analytic_psd(b.arm_length, f, scale))
    psd = overlap_factor(a, b) * np.sqrt(sa * sb)
    return SpectrumEstimate(frequencies=f, psd=psd,
                            segment_count=0, segment_length=0)


def detectability(config: InterferometerConfig, floor: float,
                  band: tuple[float, float], integration_time: float,
                  scale: PlanckScale) -> DetectabilityReport:
    """Radiometer-style detectability against a flat instrument floor.

    snr_proxy = [integral of the model PSD over the band / (floor * bandwidth)]
    * sqrt(integration_time * bandwidth). Verdict: detect >= 5,
    marginal in [1, 5), exclude < 1.
    """
    f_lo, f_hi = band
    if not (0.0 <= f_lo < f_hi):
        raise InvalidBandError(f"band must satisfy 0 <= f_lo < f_hi, got {band!r}")
    if not (floor > 0.0) or not (integration_time > 0.0):
        raise InvalidInputError("floor and integration_time must be positive")
    width = f_hi - f_lo
    tau_c = 2.0 * config.arm_length / scale.c
    # sinc^2 oscillates on a 1/tau_c scale; tell quad where the zeros are
    zeros = [k / tau_c for k in range(1, 51) if f_lo < k / tau_c < f_hi]
    power, _ = integrate.quad(
        lambda f: analytic_psd(config.arm_length, f, scale),
        f_lo, f_hi, points=zeros or None, limit=200)
    snr = power / (floor * width) * math.sqrt(integration_time * width)
    if snr >= SNR_DETECT:
        verdict = "detect"
    elif snr >= SNR_MARGINAL:
        verdict = "marginal"
    else:
        verdict = "exclude"
    return DetectabilityReport(signal_rms=predict_rms(config, scale),
                               band=(f_lo, f_hi), instrument_floor=floor,
                               snr_proxy=snr, verdict=verdict)
