"""HTTP facade serving the explorer UI.

Stateless request handlers over an immutable dataset snapshot loaded at
startup (restart to re-ingest).  POST /api/analyze returns exactly the CLI
``analyze`` payload plus the user-shifted overlay trace, so the two front
ends can never drift apart.

Error bodies are ``{"error": str, "field": optional str}`` with 400 for
invalid parameters, 404 for unknown records/peaks, and 422 when the delta
grid contains no admissible point (the body names the admissible maximum).
"""

from __future__ import annotations

import argparse
import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .analysis import AnalysisConfig, analyze_peak
from .errors import SearchError, WindowBoundsError
from .records import extract_segment, load_dataset


class AnalyzeRequest(BaseModel):
    record_id: str
    peak_index: int
    window: int | None = None
    delta0: float | None = None
    delta_max: float | None = None
    delta_step: float | None = None
    tau_min: int | None = None
    tau_max: int | None = None
    tau_display: int = 0
    demean: bool | None = None
    pad_policy: str | None = None
    full_grid: bool | None = None


def _error(status: int, message: str, field: str | None = None) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message, "field": field})


def _merge_config(req: AnalyzeRequest, defaults: AnalysisConfig) -> AnalysisConfig:
    take = lambda value, fallback: fallback if value is None else value
    return AnalysisConfig(
        window=take(req.window, defaults.window),
        delta0=take(req.delta0, defaults.delta0),
        delta_max=take(req.delta_max, defaults.delta_max),
        delta_step=take(req.delta_step, defaults.delta_step),
        tau_min=take(req.tau_min, defaults.tau_min),
        tau_max=take(req.tau_max, defaults.tau_max),
        pad_policy=take(req.pad_policy, defaults.pad_policy),
        demean=take(req.demean, defaults.demean),
        full_grid=take(req.full_grid, defaults.full_grid),
    )


def _validate_config(config: AnalysisConfig, tau_display: int) -> tuple[str, str] | None:
    """Returns (message, field) for the first violated request rule."""
    if config.window % 2 == 0 or config.window < 3:
        return "window must be odd and >= 3", "window"
    if config.delta0 <= 0:
        return "delta0 must be positive", "delta0"
    if config.delta_step <= 0:
        return "delta_step must be positive", "delta_step"
    if config.delta_max < config.delta0:
        return "delta_max must be >= delta0", "delta_max"
    if config.tau_max < config.tau_min:
        return "tau_max must be >= tau_min", "tau_max"
    if config.pad_policy not in ("error", "zero_pad"):
        return "pad_policy must be 'error' or 'zero_pad'", "pad_policy"
    if abs(tau_display) > config.window:
        return f"tau_display must lie in [-{config.window}, {config.window}]", "tau_display"
    return None


def create_app(
    dataset_dir,
    defaults: AnalysisConfig | None = None,
    ui_dist: str | None = None,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    app = FastAPI(title="hermite-qrs analysis service")
    app.state.dataset = load_dataset(dataset_dir)
    app.state.defaults = defaults or AnalysisConfig()
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _on_bad_request(request: Request, exc: RequestValidationError):
        first = exc.errors()[0] if exc.errors() else {}
        loc = first.get("loc", ())
        field = str(loc[-1]) if loc else None
        return _error(400, first.get("msg", "invalid request"), field)

    @app.get("/api/records")
    def list_records():
        dataset = app.state.dataset
        return {
            "records": [
                {
                    "id": rec.id,
                    "label": rec.label,
                    "n_samples": int(rec.samples.size),
                    "n_peaks": rec.n_peaks,
                    "fs_hz": rec.fs_hz,
                }
                for rec in dataset.records
            ],
            "warnings": list(dataset.warnings),
        }

    @app.get("/api/records/{record_id}/peaks")
    def peak_previews(record_id: str, window: int = 31):
        if window % 2 == 0 or window < 3:
            return _error(400, "window must be odd and >= 3", "window")
        record = app.state.dataset.by_id(record_id)
        if record is None:
            return _error(404, f"unknown record '{record_id}'")
        previews = []
        for peak_index in range(record.n_peaks):
            try:
                segment = extract_segment(record, peak_index, window, tau=0)
                previews.append(
                    {"peak_index": peak_index, "values": [float(v) for v in segment.values]}
                )
            except WindowBoundsError:
                previews.append({"peak_index": peak_index, "out_of_bounds": True})
        return previews

    @app.post("/api/analyze")
    def analyze(req: AnalyzeRequest):
        record = app.state.dataset.by_id(req.record_id)
        if record is None:
            return _error(404, f"unknown record '{req.record_id}'", "record_id")
        if req.peak_index < 0 or req.peak_index >= record.n_peaks:
            return _error(
                404,
                f"peak {req.peak_index} out of range for {record.n_peaks} peaks",
                "peak_index",
            )
        config = _merge_config(req, app.state.defaults)
        violation = _validate_config(config, req.tau_display)
        if violation is not None:
            return _error(400, violation[0], violation[1])
        try:
            payload = analyze_peak(record, req.peak_index, config)
        except SearchError as exc:
            return _error(422, str(exc), "delta0")
        except WindowBoundsError as exc:
            return _error(400, str(exc), "tau_min")
        try:
            shifted = extract_segment(
                record,
                req.peak_index,
                config.window,
                tau=req.tau_display,
                pad_policy=config.pad_policy,
                demean=config.demean,
            )
            payload["display_shifted_segment"] = [float(v) for v in shifted.values]
            payload["display_tau"] = req.tau_display
        except WindowBoundsError:
            payload["display_shifted_segment"] = None
            payload["display_tau"] = req.tau_display
            payload["display_out_of_bounds"] = True
        return payload

    if ui_dist and Path(ui_dist).is_dir():
        app.mount("/", StaticFiles(directory=ui_dist, html=True), name="ui")

    return app


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="hermite-qrs-service", description=__doc__)
    parser.add_argument("--dataset", default=os.environ.get("HERMITE_QRS_DATASET"),
                        help="dataset directory (env HERMITE_QRS_DATASET)")
    parser.add_argument("--host", default=os.environ.get("HERMITE_QRS_HOST", "127.0.0.1"))
    parser.add_argument("--port", type=int, default=int(os.environ.get("HERMITE_QRS_PORT", "8000")))
    parser.add_argument("--ui-dist", default=os.environ.get("HERMITE_QRS_UI_DIST"),
                        help="built explorer bundle to serve at /")
    parser.add_argument("--window", type=int, default=31)
    parser.add_argument("--delta0", type=float, default=1.0)
    parser.add_argument("--delta-max", type=float, default=3.0)
    parser.add_argument("--delta-step", type=float, default=0.1)
    parser.add_argument("--tau-min", type=int, default=-10)
    parser.add_argument("--tau-max", type=int, default=10)
    args = parser.parse_args(argv)
    if not args.dataset:
        parser.error("--dataset (or HERMITE_QRS_DATASET) is required")
    defaults = AnalysisConfig(
        window=args.window,
        delta0=args.delta0,
        delta_max=args.delta_max,
        delta_step=args.delta_step,
        tau_min=args.tau_min,
        tau_max=args.tau_max,
    )
    app = create_app(args.dataset, defaults=defaults, ui_dist=args.ui_dist)
    import uvicorn

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
