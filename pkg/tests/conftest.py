"""Shared fixtures: deterministic on-disk datasets built from beat trains.

Record parameters are frozen, not random per run, so CSV/JSON outputs are
byte-stable and the optimizer's behavior on every fixture peak is a fixed
fact the tests can assert exactly.
"""

from __future__ import annotations

import json

import pytest

from hermite_qrs import save_record, synthesize_beat_train

HEALTHY_PARAMS = [
    # (order, delta_true, amplitude)
    (0, 1.3, 1.0),
    (2, 1.4, 1.2),
    (0, 1.5, 0.9),
    (2, 1.6, 1.1),
    (0, 1.7, 1.3),
    (2, 1.3, -1.0),
    (0, 1.5, 1.05),
    (2, 1.7, 0.95),
    (0, 1.4, 1.15),
]

DISEASED_PARAMS = [
    (1, 1.4, 1.1),
    (3, 1.5, -1.0),
    (1, 1.6, 1.2),
    (3, 1.7, 0.9),
    (1, 1.4, -1.15),
    (3, 1.6, 1.05),
    (1, 1.5, 1.3),
    (3, 1.7, -0.95),
    (1, 1.6, 1.0),
]


def build_fixture_records():
    records = []
    for i, (order, delta, amp) in enumerate(HEALTHY_PARAMS):
        records.append(
            synthesize_beat_train(
                [(order, amp)],
                delta,
                noise_sigma=0.002,
                seed=100 + i,
                record_id=f"healthy_{i + 1:02d}",
                label="healthy",
            )
        )
    for i, (order, delta, amp) in enumerate(DISEASED_PARAMS):
        records.append(
            synthesize_beat_train(
                [(order, amp)],
                delta,
                noise_sigma=0.003,
                seed=200 + i,
                record_id=f"diseased_{i + 1:02d}",
                label="diseased",
            )
        )
    return records


@pytest.fixture(scope="session")
def fixture_records():
    return build_fixture_records()


@pytest.fixture(scope="session")
def dataset_dir(tmp_path_factory, fixture_records):
    """18 records on disk, alternating JSON and CSV to exercise both loaders."""
    root = tmp_path_factory.mktemp("dataset")
    for i, rec in enumerate(fixture_records):
        ext = "json" if i % 2 == 0 else "csv"
        save_record(rec, root / rec.label / f"{rec.id}.{ext}")
    return root


@pytest.fixture(scope="session")
def miscentered_dataset_dir(tmp_path_factory):
    """One record whose annotations sit 3 samples right of the true centers."""
    root = tmp_path_factory.mktemp("miscentered")
    rec = synthesize_beat_train(
        [(0, 1.0)],
        1.6,
        annotation_offset=3,
        record_id="miscentered",
        label="healthy",
    )
    save_record(rec, root / "healthy" / "miscentered.json")
    return root


@pytest.fixture(scope="session")
def corrupt_dataset_dir(tmp_path_factory, fixture_records):
    """Two good records plus one file that cannot parse."""
    root = tmp_path_factory.mktemp("corrupt")
    save_record(fixture_records[0], root / "healthy" / "good_a.json")
    save_record(fixture_records[9], root / "diseased" / "good_b.json")
    bad = root / "healthy" / "broken.json"
    bad.write_text("{ not json")
    return root


@pytest.fixture(scope="session")
def edge_peak_record():
    """A record whose single annotated peak sits 5 samples from the start."""
    from hermite_qrs import EcgRecord
    import numpy as np

    rng = np.random.default_rng(7)
    samples = rng.normal(0.0, 0.1, 60)
    return EcgRecord(
        id="edge", label="healthy", fs_hz=250.0, samples=samples, r_peaks=np.array([5, 30])
    )


@pytest.fixture(scope="session")
def edge_dataset_dir(tmp_path_factory, edge_peak_record):
    root = tmp_path_factory.mktemp("edge")
    save_record(edge_peak_record, root / "healthy" / "edge.json")
    return root
