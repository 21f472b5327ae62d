"""Single-peak analysis payload shared by the CLI and the HTTP service.

Both front ends must emit field-for-field identical results for identical
inputs, so the assembly lives here and nowhere else.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hermite import build_basis, forward_ht, resample_to_nodes, top_k_reconstruction
from .optimize import OptimizationReport, SearchSpec, optimize
from .records import EcgRecord, extract_segment
from .spectral import concentration_report, dft_spectrum, prd


@dataclass(frozen=True)
class AnalysisConfig:
    """User-settable parameters for one analysis run."""

    window: int = 31
    delta0: float = 1.0
    delta_max: float = 3.0
    delta_step: float = 0.1
    tau_min: int = -10
    tau_max: int = 10
    pad_policy: str = "error"
    demean: bool = False
    full_grid: bool = False

    def search_spec(self) -> SearchSpec:
        return SearchSpec(
            delta0=self.delta0,
            delta_max=self.delta_max,
            delta_step=self.delta_step,
            tau_min=self.tau_min,
            tau_max=self.tau_max,
        )


def truncated_prd(report: OptimizationReport, record, peak_index, config, k: int):
    """PRD of the k-strongest-coefficient reconstruction at the winning cell."""
    best = report.best
    segment = extract_segment(
        record,
        peak_index,
        config.window,
        tau=best.tau,
        pad_policy=config.pad_policy,
        demean=config.demean,
    )
    basis = build_basis(config.window, best.delta)
    reference = resample_to_nodes(segment, basis)
    if not np.any(reference):
        return None
    reconstruction = top_k_reconstruction(best, k)
    return prd(reference, reconstruction, retained_m=k)


def analyze_peak(record: EcgRecord, peak_index: int, config: AnalysisConfig) -> dict:
    """Everything the explorer plots for one peak, as one JSON-ready dict."""
    segment = extract_segment(
        record,
        peak_index,
        config.window,
        tau=0,
        pad_policy=config.pad_policy,
        demean=config.demean,
    )
    report = optimize(
        record,
        peak_index,
        config.window,
        config.search_spec(),
        pad_policy=config.pad_policy,
        demean=config.demean,
    )
    spectrum = dft_spectrum(segment)
    top2 = truncated_prd(report, record, peak_index, config, k=2)
    return {
        "record_id": record.id,
        "label": record.label,
        "peak_index": peak_index,
        "window": config.window,
        "segment": [float(v) for v in segment.values],
        "standard": report.baseline.to_dict() if report.baseline is not None else None,
        "optimization": report.to_dict(include_full_grid=config.full_grid),
        "spectrum": spectrum.to_dict(),
        "concentration": concentration_report(segment, report.best, spectrum),
        "prd_top2": top2.to_dict() if top2 is not None else None,
    }


def summarize_peak(record: EcgRecord, peak_index: int, config: AnalysisConfig) -> dict:
    """One batch-summary row: winning parameters and compression quality."""
    report = optimize(
        record,
        peak_index,
        config.window,
        config.search_spec(),
        pad_policy=config.pad_policy,
        demean=config.demean,
    )
    top2 = truncated_prd(report, record, peak_index, config, k=2)
    top5 = truncated_prd(report, record, peak_index, config, k=5)
    return {
        "record_id": record.id,
        "peak_index": peak_index,
        "label": record.label,
        "delta_star": report.best.delta,
        "tau_star": report.best.tau,
        "baseline_l1": report.baseline.l1 if report.baseline is not None else None,
        "optimized_l1": report.best.l1,
        "prd_top2": top2.prd_percent if top2 is not None else None,
        "prd_top5": top5.prd_percent if top5 is not None else None,
    }
