"""Regenerates the recorded service payloads used by the UI tests.

Builds a small deterministic dataset, runs the real HTTP service against
it in-process, and saves selected response bodies next to this script.
The UI tests bind DOM marks to these payloads field for field, so the
files must stay byte-true recordings rather than hand-written samples.

Run from the repository root with the package installed:

    python frontend/tests/fixtures/make_fixtures.py
"""

from __future__ import annotations

import json
import tempfile
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient

from hermite_qrs.records import EcgRecord, save_record
from hermite_qrs.service import create_app
from hermite_qrs.synthetic import synthesize_beat_train, synthesize_qrs

HERE = Path(__file__).resolve().parent


def build_dataset(root: Path) -> None:
    healthy = root / "healthy"
    diseased = root / "diseased"

    save_record(
        synthesize_beat_train(
            [(0, 1.0), (3, 0.35)],
            delta_true=1.6,
            n_beats=5,
            spacing=17,
            noise_sigma=0.02,
            seed=11,
            record_id="fix_healthy",
            label="healthy",
        ),
        healthy / "fix_healthy.json",
    )
    save_record(
        synthesize_qrs(
            [(0, 0.9), (2, 0.3)],
            delta_true=1.5,
            window=31,
            flank=25,
            record_id="fix_single",
            label="healthy",
        ),
        healthy / "fix_single.json",
    )
    rng = np.random.default_rng(404)
    save_record(
        EcgRecord(
            id="fix_edge",
            label="healthy",
            fs_hz=250.0,
            samples=0.05 * rng.standard_normal(60),
            r_peaks=np.array([5, 30]),
        ),
        healthy / "fix_edge.json",
    )
    save_record(
        EcgRecord(
            id="fix_zero",
            label="healthy",
            fs_hz=250.0,
            samples=np.zeros(81),
            r_peaks=np.array([40]),
        ),
        healthy / "fix_zero.json",
    )
    save_record(
        synthesize_beat_train(
            [(1, 0.9), (2, 0.5), (4, 0.25)],
            delta_true=1.9,
            n_beats=5,
            spacing=17,
            noise_sigma=0.02,
            seed=3,
            record_id="fix_diseased",
            label="diseased",
        ),
        diseased / "fix_diseased.json",
    )
    save_record(
        synthesize_beat_train(
            [(1, 4.0), (2, 1.6)],
            delta_true=1.8,
            n_beats=5,
            spacing=21,
            noise_sigma=0.01,
            seed=7,
            record_id="fix_aligned",
            label="diseased",
        ),
        diseased / "fix_aligned.json",
    )


def dump(name: str, body) -> None:
    (HERE / name).write_text(json.dumps(body, indent=2) + "\n")
    print(f"wrote {name}")


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        root = Path(tmp)
        build_dataset(root)
        client = TestClient(create_app(root))

        listing = client.get("/api/records")
        listing.raise_for_status()
        assert listing.json()["warnings"] == []
        dump("records.json", listing.json())

        previews = {}
        for rec in listing.json()["records"]:
            res = client.get(f"/api/records/{rec['id']}/peaks")
            res.raise_for_status()
            previews[rec["id"]] = res.json()
            dump(f"previews_{rec['id'].removeprefix('fix_')}.json", res.json())
        assert len(previews["fix_healthy"]) == 3
        assert len(previews["fix_single"]) == 1
        assert previews["fix_edge"][0] == {"peak_index": 0, "out_of_bounds": True}

        base_req = {
            "record_id": "fix_healthy",
            "peak_index": 1,
            "window": 31,
            "delta0": 1.0,
            "delta_max": 3.0,
            "delta_step": 0.1,
            "tau_min": -10,
            "tau_max": 10,
            "tau_display": 4,
        }
        healthy = client.post("/api/analyze", json=base_req)
        healthy.raise_for_status()
        body = healthy.json()
        assert body["display_tau"] == 4
        assert body["display_shifted_segment"] != body["segment"]
        assert body["optimization"]["baseline"] is not None
        dump("analyze_healthy.json", body)

        aligned = client.post(
            "/api/analyze",
            json={**base_req, "record_id": "fix_aligned", "tau_display": 0},
        )
        aligned.raise_for_status()
        coeffs = aligned.json()["optimization"]["best"]["coeffs"]
        mass = sorted((abs(c) for c in coeffs), reverse=True)
        assert sum(mass[:2]) >= 0.9 * sum(mass), "surrogate is not 2-sparse enough"
        dump("analyze_aligned.json", aligned.json())

        # the baseline is the standard transform at delta 1, so a grid with
        # that single cell is the case where best and baseline must tie
        pinned = client.post(
            "/api/analyze",
            json={
                **base_req,
                "tau_display": 0,
                "delta0": 1.0,
                "delta_max": 1.0,
                "tau_min": 0,
                "tau_max": 0,
            },
        )
        pinned.raise_for_status()
        report = pinned.json()["optimization"]
        assert report["best"] == report["baseline"], "single-cell grid must tie"
        dump("analyze_singlepoint.json", pinned.json())

        sweeps = {}
        for dmax in (10, 5, 3):
            res = client.post(
                "/api/analyze",
                json={**base_req, "record_id": "fix_aligned", "tau_display": 0, "delta_max": dmax},
            )
            res.raise_for_status()
            sweeps[dmax] = res.json()
            dump(f"analyze_dmax{dmax}.json", res.json())
        baselines = [sweeps[d]["optimization"]["baseline"] for d in (10, 5, 3)]
        assert baselines[0] == baselines[1] == baselines[2], "baseline must ignore delta_max"

        zero = client.post(
            "/api/analyze",
            json={**base_req, "record_id": "fix_zero", "peak_index": 0, "tau_display": 0},
        )
        zero.raise_for_status()
        assert zero.json()["concentration"]["degenerate"] == "zero energy"
        dump("analyze_degenerate.json", zero.json())


if __name__ == "__main__":
    main()
