"""Fourier-domain view of segments and cross-domain concentration metrics.

The DFT is taken at the segment's native length so the bin count matches the
Hermite coefficient count and top-k comparisons are like for like.  Raw l1
values are reported alongside the scale-free l1/l2 ratio; cross-domain claims
should lean on the energy-fraction curves, which are normalization-free.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hermite import HtResult
from .records import PeakSegment


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    """DFT magnitudes of a segment with l1 and l1/l2 concentration values."""

    magnitudes: np.ndarray
    l1: float
    l1_over_l2: float

    def __post_init__(self):
        mags = np.asarray(self.magnitudes, dtype=float)
        mags.flags.writeable = False
        object.__setattr__(self, "magnitudes", mags)

    def to_dict(self) -> dict:
        return {
            "magnitudes": [float(m) for m in self.magnitudes],
            "l1": self.l1,
            "l1_over_l2": self.l1_over_l2,
        }


@dataclass(frozen=True)
class QualityMetrics:
    """Reconstruction error metrics; PRD is the usual compressed-ECG figure."""

    prd_percent: float
    max_abs_err: float
    retained_m: int | None = None

    def to_dict(self) -> dict:
        return {
            "prd_percent": self.prd_percent,
            "max_abs_err": self.max_abs_err,
            "retained_m": self.retained_m,
        }


def dft_spectrum(segment: PeakSegment | np.ndarray) -> SpectrumResult:
    """Exact-length DFT magnitude spectrum, bins 0..W-1.

    Accepts a segment or any real 1-D array; oddness is a windowing rule,
    not a Fourier one, so plain even-length arrays are fine here.
    """
    values = segment.values if isinstance(segment, PeakSegment) else np.asarray(segment, float)
    if values.ndim != 1 or values.size == 0:
        raise ValueError("spectrum input must be a non-empty 1-D array")
    if not np.all(np.isfinite(values)):
        raise ValueError("non-finite segment value in spectrum input")
    magnitudes = np.abs(np.fft.fft(values))
    l1 = float(magnitudes.sum())
    l2 = float(np.sqrt((magnitudes**2).sum()))
    return SpectrumResult(
        magnitudes=magnitudes,
        l1=l1,
        l1_over_l2=l1 / l2 if l2 > 0 else 0.0,
    )


def prd(reference, reconstruction, retained_m: int | None = None) -> QualityMetrics:
    """Percent root-mean-square difference and max-abs error.

    PRD = 100 * ||reference - reconstruction||_2 / ||reference||_2; invariant
    to a common positive rescaling of both signals.  An all-zero reference
    has no defined PRD and is rejected.
    """
    reference = np.asarray(reference, dtype=float)
    reconstruction = np.asarray(reconstruction, dtype=float)
    if reference.shape != reconstruction.shape:
        raise ValueError(
            f"length mismatch: reference {reference.shape} vs "
            f"reconstruction {reconstruction.shape}"
        )
    ref_energy = float(np.sqrt((reference**2).sum()))
    if ref_energy == 0.0:
        raise ValueError("PRD undefined for an all-zero reference")
    err = reference - reconstruction
    return QualityMetrics(
        prd_percent=100.0 * float(np.sqrt((err**2).sum())) / ref_energy,
        max_abs_err=float(np.abs(err).max()),
        retained_m=retained_m,
    )


def top_k_energy_curve(coeffs) -> np.ndarray:
    """Fraction of l2 energy captured by the k largest entries, k = 1..len."""
    energies = np.sort(np.asarray(coeffs, dtype=float) ** 2)[::-1]
    total = energies.sum()
    return np.cumsum(energies) / total


def concentration_report(
    segment: PeakSegment, ht: HtResult, spectrum: SpectrumResult
) -> dict:
    """Side-by-side concentration of one beat in the two transform domains.

    Returns per-domain l1 and l1/l2 plus both top-k energy curves.  A
    zero-energy segment has no meaningful curves and is flagged degenerate.
    """
    ht_l2 = float(np.sqrt((ht.coeffs**2).sum()))
    ft_l2 = float(np.sqrt((spectrum.magnitudes**2).sum()))
    if ht_l2 == 0.0 or ft_l2 == 0.0:
        return {
            "degenerate": "zero energy",
            "ht": {"l1": ht.l1, "l1_over_l2": None},
            "ft": {"l1": spectrum.l1, "l1_over_l2": None},
            "top_k": {"ht": None, "ft": None},
        }
    return {
        "ht": {"l1": ht.l1, "l1_over_l2": ht.l1 / ht_l2},
        "ft": {"l1": spectrum.l1, "l1_over_l2": spectrum.l1_over_l2},
        "top_k": {
            "ht": [float(x) for x in top_k_energy_curve(ht.coeffs)],
            "ft": [float(x) for x in top_k_energy_curve(spectrum.magnitudes)],
        },
    }
