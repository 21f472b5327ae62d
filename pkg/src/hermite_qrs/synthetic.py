"""Synthetic QRS records with known Hermite-domain content.

The paper-style datasets are private clinical recordings; the generator here
stands in for them as the test and demo signal source.  A beat is a sum of
scaled Hermite functions evaluated on the integer sample axis, so its exact
coefficient vector (and therefore the optimal scaling factor) is known by
construction.
"""

from __future__ import annotations

import numpy as np

from .errors import AdmissibilityError
from .hermite import hermite_function, max_admissible_delta
from .records import EcgRecord


def qrs_waveform(coeff_spec, delta_true: float, window: int) -> np.ndarray:
    """Sum of amplitude * HF_n(t / delta_true) on the integer axis -C..C."""
    if window % 2 == 0 or window < 3:
        raise ValueError(f"window {window} must be odd and >= 3")
    c = (window - 1) // 2
    axis = np.arange(-c, c + 1, dtype=float)
    values = np.zeros(window)
    for order, amplitude in coeff_spec:
        if order >= window:
            raise ValueError(f"order {order} >= window {window}")
        values += amplitude * hermite_function(order, axis / delta_true)
    return values


def synthesize_qrs(
    coeff_spec,
    delta_true: float,
    window: int,
    noise_sigma: float = 0.0,
    seed: int = 0,
    flank: int = 0,
    annotation_offset: int = 0,
    record_id: str = "synthetic",
    label: str = "healthy",
    fs_hz: float = 250.0,
) -> EcgRecord:
    """Single-beat record whose centered segment is a known Hermite mixture.

    ``coeff_spec`` is a list of (order, amplitude) pairs; the beat occupies a
    window of the given odd length, optionally padded by ``flank`` zero
    samples on each side, with white Gaussian noise of std ``noise_sigma``
    over the whole record.  Deterministic for a fixed seed.

    The annotated R peak sits at the true waveform center plus
    ``annotation_offset`` samples, which lets tests plant a known alignment
    error for the shift search to recover.

    Raises AdmissibilityError when ``delta_true`` would place analysis nodes
    outside the window, since such a beat could never be transformed at its
    own scale.
    """
    if noise_sigma < 0:
        raise ValueError(f"noise_sigma must be >= 0, got {noise_sigma}")
    limit = max_admissible_delta(window)
    if delta_true > limit + 1e-12:
        raise AdmissibilityError(
            f"delta_true {delta_true:g} inadmissible for window {window}: "
            f"max admissible delta is {limit:.6g}",
            max_delta=limit,
        )
    c = (window - 1) // 2
    samples = np.zeros(window + 2 * flank)
    samples[flank : flank + window] = qrs_waveform(coeff_spec, delta_true, window)
    if noise_sigma > 0:
        rng = np.random.default_rng(seed)
        samples = samples + noise_sigma * rng.standard_normal(samples.size)
    peak = flank + c + annotation_offset
    if peak < 0 or peak >= samples.size:
        raise ValueError(f"annotation_offset {annotation_offset} pushes peak out of record")
    return EcgRecord(
        id=record_id,
        label=label,
        fs_hz=fs_hz,
        samples=samples,
        r_peaks=np.array([peak]),
    )


def synthesize_beat_train(
    coeff_spec,
    delta_true: float,
    n_beats: int = 5,
    spacing: int = 17,
    noise_sigma: float = 0.0,
    seed: int = 0,
    annotation_offset: int = 0,
    record_id: str = "synthetic-train",
    label: str = "healthy",
    fs_hz: float = 250.0,
) -> EcgRecord:
    """Record of identical beats at a fixed spacing, like a steady rhythm.

    The shift search needs neighbouring signal: on a lone beat over silent
    flanks, sliding the window off the beat empties it and drives the l1
    measure toward zero, so the argmin escapes to the largest shift.  Real
    recordings never present an empty window; adjacent beats here play that
    role.  Spacing around 17 samples keeps every candidate window non-empty
    for the default search ranges at a 31-sample window.

    Only the interior beats are annotated (the outermost on each side serve
    as context), each at its true center plus ``annotation_offset``.  Noise,
    determinism, and admissibility behave as in :func:`synthesize_qrs`.
    """
    if noise_sigma < 0:
        raise ValueError(f"noise_sigma must be >= 0, got {noise_sigma}")
    if n_beats < 3:
        raise ValueError(f"n_beats must be >= 3 to leave annotated interiors, got {n_beats}")
    if spacing < 1:
        raise ValueError(f"spacing must be >= 1, got {spacing}")
    margin = 2 * spacing
    length = (n_beats - 1) * spacing + 2 * margin
    axis = np.arange(length, dtype=float)
    samples = np.zeros(length)
    centers = [margin + k * spacing for k in range(n_beats)]
    for center in centers:
        for order, amplitude in coeff_spec:
            samples += amplitude * hermite_function(order, axis - center, delta_true)
    if noise_sigma > 0:
        rng = np.random.default_rng(seed)
        samples = samples + noise_sigma * rng.standard_normal(samples.size)
    peaks = np.array([c + annotation_offset for c in centers[1:-1]])
    if peaks[0] < 0 or peaks[-1] >= length:
        raise ValueError(f"annotation_offset {annotation_offset} pushes a peak out of record")
    return EcgRecord(
        id=record_id,
        label=label,
        fs_hz=fs_hz,
        samples=samples,
        r_peaks=peaks,
    )
