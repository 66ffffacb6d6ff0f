"""Holographic-noise time series: synthesis, autocorrelation, spectra.

The jitter process is a boxcar moving average of unit-variance white noise
with window tau_c = 2L/c (light round trip), rescaled so the process
variance is exactly lam*L. Its autocorrelation is the triangle
lam*L*max(0, 1 - |tau|/tau_c).

RNG is Philox (4x64, counter-based) via numpy; identical inputs give
bitwise-identical output on any platform. Ensemble stream k is derived
from (master_seed, k) with :func:`derive_stream_seed`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import signal

from .constants import PlanckScale
from .errors import (
    InsufficientDataError,
    InsufficientDurationError,
    InvalidSeparationError,
    SegmentationError,
    UndersamplingError,
)


@dataclass(frozen=True)
class NoiseSeries:
    """Uniformly sampled transverse-displacement series (m)."""

    samples: np.ndarray
    sample_rate: float
    arm_length: float
    seed: int
    coherence_time: float

    @property
    def duration(self) -> float:
        return len(self.samples) / self.sample_rate

    def times(self) -> np.ndarray:
        return np.arange(len(self.samples)) / self.sample_rate


@dataclass(frozen=True)
class SpectrumEstimate:
    """One-sided power spectral density on a uniform frequency grid."""

    frequencies: np.ndarray
    psd: np.ndarray
    segment_count: int
    segment_length: int


def derive_stream_seed(master_seed: int, k: int) -> int:
    """Seed for ensemble member k: disjoint Philox keys from (master_seed, k)."""
    return (int(master_seed) << 64) | int(k)


def generate_timeseries(L: float, sample_rate: float, duration: float,
                        seed: int, scale: PlanckScale,
                        window_time: float | None = None) -> NoiseSeries:
    """Synthesize a jitter series with variance lam*L and coherence window.

    The coherence window defaults to the light round trip 2L/c; the sample
    rate must exceed 2c/L (at least 4 samples per window) and the duration
    must cover at least 10 windows. Deterministic given all inputs.
    """
    if not (L > 0.0) or not math.isfinite(L):
        raise InvalidSeparationError(f"arm length must be positive, got {L!r}")
    tau_c = 2.0 * L / scale.c if window_time is None else float(window_time)
    if sample_rate * tau_c < 4.0:
        raise UndersamplingError(
            f"sample rate {sample_rate} gives under 4 samples per coherence "
            f"window {tau_c:.3e} s; need rate > {4.0 / tau_c:.3e} Hz")
    if duration < 10.0 * tau_c:
        raise InsufficientDurationError(
            f"duration {duration} s under 10 coherence windows ({10 * tau_c:.3e} s)")
    n = int(round(sample_rate * duration))
    if n < 2:
        raise InsufficientDurationError("series must contain at least 2 samples")
    m = int(round(sample_rate * tau_c))
    rng = np.random.Generator(np.random.Philox(key=int(seed)))
    white = rng.standard_normal(n + m - 1)
    # 'valid' convolution: every output sample averages a full window, so
    # the process is exactly stationary with variance lam*L
    kernel = np.full(m, math.sqrt(scale.lam * L / m))
    samples = np.convolve(white, kernel, mode="valid")
    return NoiseSeries(samples=samples, sample_rate=float(sample_rate),
                       arm_length=float(L), seed=int(seed),
                       coherence_time=tau_c)


def autocorrelation(series: NoiseSeries, max_lag: float):
    """Biased sample autocorrelation out to max_lag seconds.

    Returns (lags_s, acf) arrays; acf[0] is the biased sample variance.
    """
    x = series.samples
    n = len(x)
    if max_lag > series.duration / 4.0:
        raise InsufficientDataError(
            f"max_lag {max_lag} s exceeds a quarter of the {series.duration} s series")
    k_max = int(round(max_lag * series.sample_rate))
    x0 = x - x.mean()
    nfft = 1 << int(math.ceil(math.log2(2 * n)))
    spec = np.fft.rfft(x0, nfft)
    full = np.fft.irfft(spec * spec.conj(), nfft)[: k_max + 1]
    acf = full / n
    lags = np.arange(k_max + 1) / series.sample_rate
    return lags, acf


def power_spectrum(series: NoiseSeries, segment_length: int,
                   overlap_fraction: float = 0.5) -> SpectrumEstimate:
    """Welch one-sided PSD with Hann windowing.

    segment_length must be a power of two no longer than the series;
    overlap_fraction in [0, 1) defaults to 50%.
    """
    n = len(series.samples)
    if segment_length <= 0 or segment_length & (segment_length - 1):
        raise SegmentationError(
            f"segment_length must be a power of two, got {segment_length}")
    if segment_length > n:
        raise SegmentationError(
            f"segment_length {segment_length} exceeds series length {n}")
    if not 0.0 <= overlap_fraction < 1.0:
        raise SegmentationError(
            f"overlap_fraction must lie in [0, 1), got {overlap_fraction}")
    noverlap = int(segment_length * overlap_fraction)
    freqs, psd = signal.welch(series.samples, fs=series.sample_rate,
                              window="hann", nperseg=segment_length,
                              noverlap=noverlap, detrend="constant",
                              return_onesided=True, scaling="density")
    step = segment_length - noverlap
    segment_count = 1 + (n - segment_length) // step
    return SpectrumEstimate(frequencies=freqs, psd=psd,
                            segment_count=segment_count,
                            segment_length=segment_length)


def analytic_psd(L: float, f, scale: PlanckScale,
                 window_time: float | None = None):
    """One-sided model PSD of the jitter process (m^2/Hz).

    2*lam*L*tau_c*sinc^2(f*tau_c) for f > 0 and lam*L*tau_c at f = 0
    (standard one-sided convention, DC undoubled); integrates to the
    process variance lam*L over [0, inf).
    """
    if not (L > 0.0) or not math.isfinite(L):
        raise InvalidSeparationError(f"arm length must be positive, got {L!r}")
    tau_c = 2.0 * L / scale.c if window_time is None else float(window_time)
    f_arr = np.asarray(f, dtype=float)
    base = scale.lam * L * tau_c * np.sinc(f_arr * tau_c) ** 2
    out = np.where(f_arr > 0.0, 2.0 * base, base)
    return float(out) if np.isscalar(f) or f_arr.ndim == 0 else out


def drift_velocity_scale(L: float, scale: PlanckScale) -> float:
    """RMS displacement over the one-way coherence time: c*sqrt(lam/L) (m/s)."""
    if not (L > 0.0) or not math.isfinite(L):
        raise InvalidSeparationError(f"arm length must be positive, got {L!r}")
    return scale.c * math.sqrt(scale.lam / L)
