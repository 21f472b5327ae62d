"""Exhaustive (delta, tau) search minimizing the l1 concentration measure.

The scaling factor runs over an endpoint-inclusive arithmetic grid (default
step 0.1) and the window shift over an integer range; every admissible cell
is evaluated and the argmin taken with a fixed tie-break, so results are
deterministic and parallel evaluation order could never change them.  l1 of
the coefficient vector need not be unimodal in delta, which is why nothing
cleverer than the full grid is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AdmissibilityError, SearchError
from .hermite import HtResult, forward_ht, max_admissible_delta
from .records import EcgRecord, extract_segment


@dataclass(frozen=True)
class SearchSpec:
    """Grid bounds for the scaling factor and window shift."""

    delta0: float
    delta_max: float
    delta_step: float = 0.1
    tau_min: int = -10
    tau_max: int = 10

    def __post_init__(self):
        if self.delta0 <= 0:
            raise ValueError(f"delta0 must be positive, got {self.delta0}")
        if self.delta_step <= 0:
            raise ValueError(f"delta_step must be positive, got {self.delta_step}")
        if self.delta_max < self.delta0:
            raise ValueError(
                f"delta_max {self.delta_max} < delta0 {self.delta0}"
            )
        if self.tau_max < self.tau_min:
            raise ValueError(f"tau_max {self.tau_max} < tau_min {self.tau_min}")

    def delta_grid(self) -> np.ndarray:
        """delta0, delta0+step, ... up to the largest value <= delta_max + step/2.

        The endpoint test carries half-step tolerance so a span that is a
        whole number of steps keeps its upper endpoint despite float error.
        """
        count = int(np.floor((self.delta_max - self.delta0) / self.delta_step + 0.5)) + 1
        return self.delta0 + self.delta_step * np.arange(count)

    def tau_range(self) -> range:
        return range(self.tau_min, self.tau_max + 1)

    def to_dict(self) -> dict:
        return {
            "delta0": self.delta0,
            "delta_max": self.delta_max,
            "delta_step": self.delta_step,
            "tau_min": self.tau_min,
            "tau_max": self.tau_max,
        }


@dataclass(frozen=True)
class GridPoint:
    """One evaluated search cell; l1 is None when the cell is inadmissible."""

    tau: int
    delta: float
    l1: float | None
    admissible: bool


@dataclass(frozen=True)
class TauMeasure:
    """Best delta and minimal l1 for one value of the shift."""

    tau: int
    best_delta: float
    min_l1: float


@dataclass(frozen=True)
class OptimizationReport:
    """Full outcome of the grid search for one peak."""

    spec: SearchSpec
    measure_vector_L: tuple[TauMeasure, ...]
    best: HtResult
    baseline: HtResult | None
    full_grid: tuple[GridPoint, ...]

    def to_dict(self, include_full_grid: bool = False) -> dict:
        payload = {
            "spec": self.spec.to_dict(),
            "measure_vector_L": [
                {"tau": m.tau, "best_delta": m.best_delta, "min_l1": m.min_l1}
                for m in self.measure_vector_L
            ],
            "best": self.best.to_dict(),
            "baseline": self.baseline.to_dict() if self.baseline is not None else None,
        }
        if include_full_grid:
            payload["full_grid"] = [
                {"tau": p.tau, "delta": p.delta, "l1": p.l1, "admissible": p.admissible}
                for p in self.full_grid
            ]
        return payload


def l1_measure(coeffs) -> float:
    """Sum of absolute coefficient values (the concentration measure)."""
    coeffs = np.asarray(coeffs, dtype=float)
    if not np.all(np.isfinite(coeffs)):
        raise ValueError("non-finite coefficient in l1 measure")
    return float(np.abs(coeffs).sum())


def optimize_delta(segment, spec: SearchSpec):
    """Scan the delta grid for one segment / one shift.

    Returns (delta_star, l1_star, trace) where the trace records every grid
    value as a GridPoint.  Inadmissible deltas are skipped; ties break toward
    the smaller delta.  Raises SearchError when no grid delta is admissible.
    """
    limit = max_admissible_delta(segment.window)
    trace: list[GridPoint] = []
    best_delta = None
    best_l1 = None
    for delta in spec.delta_grid():
        delta = float(delta)
        if delta > limit + 1e-12:
            trace.append(GridPoint(segment.tau, delta, None, False))
            continue
        result = forward_ht(segment, delta)
        trace.append(GridPoint(segment.tau, delta, result.l1, True))
        if best_l1 is None or result.l1 < best_l1:
            best_delta, best_l1 = delta, result.l1
    if best_delta is None:
        raise SearchError(
            f"no admissible delta in grid [{spec.delta0:g}, {spec.delta_max:g}] "
            f"for window {segment.window}; max admissible delta is {limit:.6g}"
        )
    return best_delta, best_l1, trace


def optimize(
    record: EcgRecord,
    peak_index: int,
    window: int,
    spec: SearchSpec,
    pad_policy: str = "error",
    demean: bool = False,
) -> OptimizationReport:
    """Joint shift/scale search around one annotated peak.

    For every shift the window is re-extracted and the delta grid scanned;
    the per-shift minima form the measure vector and the global argmin is
    taken with ties broken toward smaller |tau|, then smaller tau, then
    smaller delta.  The baseline entry is the standard transform at
    (delta=1, tau=0), or None for windows so short that delta=1 itself is
    inadmissible.
    """
    measures: list[TauMeasure] = []
    grid: list[GridPoint] = []
    best_key = None
    best_cell = None  # (tau, delta)
    for tau in spec.tau_range():
        segment = extract_segment(
            record, peak_index, window, tau=tau, pad_policy=pad_policy, demean=demean
        )
        try:
            delta_star, l1_star, trace = optimize_delta(segment, spec)
        except SearchError as exc:
            raise SearchError(f"{exc} (at tau={tau})") from exc
        measures.append(TauMeasure(tau=tau, best_delta=delta_star, min_l1=l1_star))
        grid.extend(trace)
        key = (l1_star, abs(tau), tau)
        if best_key is None or key < best_key:
            best_key = key
            best_cell = (tau, delta_star)
    tau_star, delta_star = best_cell
    best_segment = extract_segment(
        record, peak_index, window, tau=tau_star, pad_policy=pad_policy, demean=demean
    )
    best = forward_ht(best_segment, delta_star)

    baseline = None
    if max_admissible_delta(window) >= 1.0:
        baseline_segment = extract_segment(
            record, peak_index, window, tau=0, pad_policy=pad_policy, demean=demean
        )
        baseline = forward_ht(baseline_segment, 1.0)

    return OptimizationReport(
        spec=spec,
        measure_vector_L=tuple(measures),
        best=best,
        baseline=baseline,
        full_grid=tuple(grid),
    )
