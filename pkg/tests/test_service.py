"""HTTP facade: listings, previews, analysis parity with the CLI payload."""

import json
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from hermite_qrs import AnalysisConfig, extract_segment, load_dataset
from hermite_qrs.analysis import analyze_peak
from hermite_qrs.service import create_app


@pytest.fixture(scope="module")
def client(dataset_dir):
    return TestClient(create_app(dataset_dir))


@pytest.fixture(scope="module")
def edge_client(edge_dataset_dir):
    return TestClient(create_app(edge_dataset_dir))


class TestRecordListing:
    def test_full_fixture_set(self, client):
        body = client.get("/api/records").json()
        records = body["records"]
        assert len(records) == 18
        assert sum(r["label"] == "healthy" for r in records) == 9
        assert sum(r["label"] == "diseased" for r in records) == 9
        assert body["warnings"] == []
        first = records[0]
        assert set(first) == {"id", "label", "n_samples", "n_peaks", "fs_hz"}
        assert first["n_peaks"] == 3

    def test_empty_dataset(self, tmp_path):
        empty = TestClient(create_app(tmp_path))
        body = empty.get("/api/records").json()
        assert body["records"] == []

    def test_corrupt_record_omitted_with_warning(self, corrupt_dataset_dir):
        spotty = TestClient(create_app(corrupt_dataset_dir))
        body = spotty.get("/api/records").json()
        assert len(body["records"]) == 2
        assert any("broken.json" in w for w in body["warnings"])


class TestPeakPreviews:
    def test_three_previews_of_window_length(self, client):
        resp = client.get("/api/records/healthy_01/peaks", params={"window": 31})
        assert resp.status_code == 200
        previews = resp.json()
        assert [p["peak_index"] for p in previews] == [0, 1, 2]
        assert all(len(p["values"]) == 31 for p in previews)

    def test_window_is_a_query_knob(self, client):
        previews = client.get("/api/records/healthy_01/peaks", params={"window": 15}).json()
        assert all(len(p["values"]) == 15 for p in previews)

    def test_even_window_rejected(self, client):
        resp = client.get("/api/records/healthy_01/peaks", params={"window": 30})
        assert resp.status_code == 400
        body = resp.json()
        assert "window must be odd" in body["error"]
        assert body["field"] == "window"

    def test_unknown_record(self, client):
        resp = client.get("/api/records/ghost/peaks")
        assert resp.status_code == 404
        assert "ghost" in resp.json()["error"]

    def test_edge_peak_flagged_not_served(self, edge_client):
        previews = edge_client.get("/api/records/edge/peaks").json()
        assert previews[0] == {"peak_index": 0, "out_of_bounds": True}
        assert len(previews[1]["values"]) == 31


class TestAnalyze:
    def test_defaults_satisfy_report_invariant(self, client):
        resp = client.post(
            "/api/analyze", json={"record_id": "healthy_01", "peak_index": 0}
        )
        assert resp.status_code == 200
        body = resp.json()
        best = body["optimization"]["best"]
        baseline = body["optimization"]["baseline"]
        assert best["l1"] <= baseline["l1"]
        assert body["display_tau"] == 0
        assert len(body["display_shifted_segment"]) == 31

    def test_matches_library_payload_field_for_field(self, client, dataset_dir):
        record = load_dataset(dataset_dir).by_id("diseased_02")
        expected = analyze_peak(record, 1, AnalysisConfig())
        expected = json.loads(json.dumps(expected))  # normalize via the same wire format
        body = client.post(
            "/api/analyze", json={"record_id": "diseased_02", "peak_index": 1}
        ).json()
        overlay = {
            k: body.pop(k)
            for k in ("display_shifted_segment", "display_tau")
        }
        assert body == expected
        assert overlay["display_tau"] == 0
        assert overlay["display_shifted_segment"] == expected["segment"]

    def test_oversized_delta_grid_skips_marked_cells(self, client):
        resp = client.post(
            "/api/analyze",
            json={
                "record_id": "healthy_01",
                "peak_index": 0,
                "delta_max": 10.0,
                "full_grid": True,
                "tau_min": -2,
                "tau_max": 2,
            },
        )
        assert resp.status_code == 200
        grid = resp.json()["optimization"]["full_grid"]
        assert len(grid) == 91 * 5
        dead = [cell for cell in grid if not cell["admissible"]]
        assert dead and all(cell["l1"] is None for cell in dead)
        assert all(cell["delta"] > 2.1 for cell in dead)

    def test_display_overlay_equals_shifted_extraction(self, client, dataset_dir):
        body = client.post(
            "/api/analyze",
            json={"record_id": "healthy_03", "peak_index": 2, "tau_display": 4},
        ).json()
        record = load_dataset(dataset_dir).by_id("healthy_03")
        shifted = extract_segment(record, 2, 31, tau=4)
        assert body["display_tau"] == 4
        assert body["display_shifted_segment"] == pytest.approx(shifted.values)

    def test_small_shift_reconstructs_better_than_large(self, client):
        # pin the search at one shift to quantify how alignment degrades
        def prd_at(pin):
            body = client.post(
                "/api/analyze",
                json={
                    "record_id": "healthy_01",
                    "peak_index": 0,
                    "tau_min": pin,
                    "tau_max": pin,
                    "tau_display": pin,
                },
            ).json()
            return body["prd_top2"]["prd_percent"]

        assert prd_at(1) < prd_at(10)

    def test_unknown_record_404(self, client):
        resp = client.post("/api/analyze", json={"record_id": "ghost", "peak_index": 0})
        assert resp.status_code == 404
        assert resp.json()["field"] == "record_id"

    def test_peak_out_of_range_404(self, client):
        resp = client.post("/api/analyze", json={"record_id": "healthy_01", "peak_index": 99})
        assert resp.status_code == 404
        assert resp.json()["field"] == "peak_index"

    @pytest.mark.parametrize(
        "patch,field",
        [
            ({"window": 30}, "window"),
            ({"delta0": 0.0}, "delta0"),
            ({"delta_step": -0.1}, "delta_step"),
            ({"delta0": 2.0, "delta_max": 1.0}, "delta_max"),
            ({"tau_min": 5, "tau_max": -5}, "tau_max"),
            ({"pad_policy": "wrap"}, "pad_policy"),
            ({"tau_display": 40}, "tau_display"),
        ],
    )
    def test_invalid_parameters_400(self, client, patch, field):
        resp = client.post(
            "/api/analyze", json={"record_id": "healthy_01", "peak_index": 0, **patch}
        )
        assert resp.status_code == 400
        assert resp.json()["field"] == field

    def test_type_errors_are_400_not_422(self, client):
        resp = client.post("/api/analyze", json={"record_id": "healthy_01", "peak_index": "x"})
        assert resp.status_code == 400
        assert resp.json()["field"] == "peak_index"

    def test_unsatisfiable_grid_422_names_the_limit(self, client):
        resp = client.post(
            "/api/analyze",
            json={"record_id": "healthy_01", "peak_index": 0, "delta0": 5.0, "delta_max": 6.0},
        )
        assert resp.status_code == 422
        assert "max admissible" in resp.json()["error"]
        assert "2.1" in resp.json()["error"]

    def test_shift_range_off_the_record_edge_400(self, client):
        resp = client.post(
            "/api/analyze",
            json={"record_id": "healthy_01", "peak_index": 0, "tau_min": -40, "tau_max": 0},
        )
        assert resp.status_code == 400
        assert resp.json()["field"] == "tau_min"

    def test_display_shift_off_the_edge_flagged(self, edge_client):
        # analysis at tau range ±10 stays inside; only the overlay exits
        resp = edge_client.post(
            "/api/analyze",
            json={"record_id": "edge", "peak_index": 1, "tau_display": -16},
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["display_out_of_bounds"] is True
        assert body["display_shifted_segment"] is None

    def test_concurrent_identical_requests_agree(self, client):
        request = {"record_id": "diseased_01", "peak_index": 0, "full_grid": True}
        with ThreadPoolExecutor(max_workers=8) as pool:
            bodies = list(pool.map(lambda _: client.post("/api/analyze", json=request).text, range(8)))
        assert len(set(bodies)) == 1

    def test_requests_do_not_mutate_the_dataset(self, client):
        before = client.get("/api/records").text
        client.post("/api/analyze", json={"record_id": "healthy_05", "peak_index": 1})
        client.get("/api/records/healthy_05/peaks")
        assert client.get("/api/records").text == before


class TestStaticUi:
    def test_bundle_served_at_root(self, dataset_dir, tmp_path):
        (tmp_path / "index.html").write_text("<!doctype html><title>explorer</title>")
        ui_client = TestClient(create_app(dataset_dir, ui_dist=str(tmp_path)))
        resp = ui_client.get("/")
        assert resp.status_code == 200
        assert "explorer" in resp.text

    def test_no_bundle_no_root_route(self, dataset_dir):
        bare = TestClient(create_app(dataset_dir))
        assert bare.get("/").status_code == 404
        assert bare.get("/api/records").status_code == 200
