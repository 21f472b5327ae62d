"""ECG records, dataset files, and QRS window extraction.

A record is a labeled sample array with known R-peak indices; peak detection
is deliberately out of scope, the peaks are part of the input data.  Two file
formats are supported:

* JSON: ``{"id", "label", "fs_hz", "samples", "r_peaks"}`` in one file.
* CSV: ``<name>.csv`` with header ``index,sample``, peak indices in
  ``<name>.peaks.csv`` (header ``r_peak``), label and sampling rate in a
  sidecar ``<name>.meta.json``.

A dataset is a directory with ``healthy/`` and ``diseased/`` subdirectories,
each holding record files in either format.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import RecordParseError, RecordValidationError, WindowBoundsError

LABELS = ("healthy", "diseased")
PAD_POLICIES = ("error", "zero_pad")


@dataclass(frozen=True, eq=False)
class EcgRecord:
    """A labeled ECG signal with sample array and R-peak annotations."""

    id: str
    label: str
    fs_hz: float
    samples: np.ndarray
    r_peaks: np.ndarray

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        r_peaks = np.asarray(self.r_peaks, dtype=int)
        if samples.ndim != 1:
            raise RecordValidationError(f"samples must be 1-D (record '{self.id}')")
        if r_peaks.ndim != 1:
            raise RecordValidationError(f"r_peaks must be 1-D (record '{self.id}')")
        samples.flags.writeable = False
        r_peaks.flags.writeable = False
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "r_peaks", r_peaks)
        object.__setattr__(self, "fs_hz", float(self.fs_hz))
        self._validate()

    def _validate(self):
        rid = self.id
        if self.label not in LABELS:
            raise RecordValidationError(
                f"label {self.label!r} not in {LABELS} (record '{rid}')"
            )
        if not np.isfinite(self.fs_hz) or self.fs_hz <= 0:
            raise RecordValidationError(f"fs_hz {self.fs_hz} must be > 0 (record '{rid}')")
        if self.samples.size < 3:
            raise RecordValidationError(
                f"samples length {self.samples.size} < 3 (record '{rid}')"
            )
        bad = np.flatnonzero(~np.isfinite(self.samples))
        if bad.size:
            raise RecordValidationError(
                f"non-finite sample at index {bad[0]} (record '{rid}')"
            )
        n = self.samples.size
        for k, p in enumerate(self.r_peaks):
            if p < 0 or p >= n:
                raise RecordValidationError(
                    f"r_peak {p} out of range for {n} samples (record '{rid}', r_peaks[{k}])"
                )
        if self.r_peaks.size > 1 and np.any(np.diff(self.r_peaks) <= 0):
            k = int(np.flatnonzero(np.diff(self.r_peaks) <= 0)[0])
            raise RecordValidationError(
                f"r_peaks not strictly increasing at r_peaks[{k + 1}] (record '{rid}')"
            )

    @property
    def n_peaks(self) -> int:
        return int(self.r_peaks.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EcgRecord):
            return NotImplemented
        return (
            self.id == other.id
            and self.label == other.label
            and self.fs_hz == other.fs_hz
            and np.array_equal(self.samples, other.samples)
            and np.array_equal(self.r_peaks, other.r_peaks)
        )


@dataclass(frozen=True, eq=False)
class PeakSegment:
    """Odd-length window of samples centered on a (tau-shifted) R peak.

    The implied time axis is the integer grid n in [-C, C] with
    C = (len(values) - 1) / 2 and a sampling period of one sample.
    """

    record_id: str
    peak_index: int
    tau: int
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1:
            raise RecordValidationError("segment values must be 1-D")
        if values.size < 3 or values.size % 2 == 0:
            raise RecordValidationError(
                f"segment length {values.size} must be odd and >= 3"
            )
        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            raise RecordValidationError(f"non-finite segment value at index {bad[0]}")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "peak_index", int(self.peak_index))
        object.__setattr__(self, "tau", int(self.tau))

    @property
    def window(self) -> int:
        return int(self.values.size)

    @property
    def half_width(self) -> int:
        return (self.values.size - 1) // 2

    @property
    def axis(self) -> np.ndarray:
        """Integer time axis n = -C..C, peak at n = 0."""
        c = self.half_width
        return np.arange(-c, c + 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PeakSegment):
            return NotImplemented
        return (
            self.record_id == other.record_id
            and self.peak_index == other.peak_index
            and self.tau == other.tau
            and np.array_equal(self.values, other.values)
        )


def extract_segment(
    record: EcgRecord,
    peak_index: int,
    window: int,
    tau: int = 0,
    pad_policy: str = "error",
    demean: bool = False,
) -> PeakSegment:
    """Cut the window-length segment centered at ``r_peaks[peak_index] + tau``.

    Under ``pad_policy='zero_pad'`` indices outside the record contribute 0;
    under ``'error'`` an out-of-range window raises WindowBoundsError.
    ``demean`` subtracts the segment mean (off by default; no detrending is
    ever applied implicitly).
    """
    if pad_policy not in PAD_POLICIES:
        raise ValueError(f"pad_policy {pad_policy!r} not in {PAD_POLICIES}")
    if window % 2 == 0 or window < 3:
        raise RecordValidationError(f"window {window} must be odd and >= 3")
    if peak_index < 0 or peak_index >= record.n_peaks:
        raise RecordValidationError(
            f"peak_index {peak_index} out of range for {record.n_peaks} peaks "
            f"(record '{record.id}')"
        )
    c = (window - 1) // 2
    center = int(record.r_peaks[peak_index]) + int(tau)
    lo, hi = center - c, center + c
    n = record.samples.size
    if lo < 0 or hi >= n:
        if pad_policy == "error":
            raise WindowBoundsError(
                f"window [{lo}, {hi}] out of bounds for {n} samples "
                f"(record '{record.id}', peak {peak_index}, tau {tau})"
            )
        values = np.zeros(window)
        src_lo, src_hi = max(lo, 0), min(hi, n - 1)
        if src_lo <= src_hi:
            values[src_lo - lo : src_hi - lo + 1] = record.samples[src_lo : src_hi + 1]
    else:
        values = record.samples[lo : hi + 1].copy()
    if demean:
        values = values - values.mean()
    return PeakSegment(record.id, peak_index, int(tau), values)


# ---------------------------------------------------------------------------
# File formats


def _record_from_dict(data: dict, source: str) -> EcgRecord:
    for key in ("id", "label", "fs_hz", "samples", "r_peaks"):
        if key not in data:
            raise RecordParseError(f"missing field '{key}' in {source}")
    try:
        return EcgRecord(
            id=str(data["id"]),
            label=data["label"],
            fs_hz=data["fs_hz"],
            samples=np.asarray(data["samples"], dtype=float),
            r_peaks=np.asarray(data["r_peaks"], dtype=int),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, RecordValidationError):
            raise
        raise RecordParseError(f"malformed field in {source}: {exc}") from exc


def _csv_companions(path: Path) -> tuple[Path, Path]:
    return path.with_suffix(".peaks.csv"), path.with_suffix(".meta.json")


def load_record(path, format: str | None = None) -> EcgRecord:
    """Load and validate a record from a JSON or CSV file.

    ``format`` is inferred from the extension when omitted.
    """
    path = Path(path)
    if format is None:
        format = "csv" if path.suffix.lower() == ".csv" else "json"
    if format not in ("json", "csv"):
        raise ValueError(f"format {format!r} not in ('json', 'csv')")
    if not path.exists():
        raise RecordParseError(f"record file not found: {path}")

    if format == "json":
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise RecordParseError(f"invalid JSON in {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise RecordParseError(f"expected a JSON object in {path}")
        return _record_from_dict(data, str(path))

    peaks_path, meta_path = _csv_companions(path)
    for p in (peaks_path, meta_path):
        if not p.exists():
            raise RecordParseError(f"missing companion file {p} for {path}")
    try:
        meta = json.loads(meta_path.read_text())
    except json.JSONDecodeError as exc:
        raise RecordParseError(f"invalid JSON in {meta_path}: {exc}") from exc
    samples = _read_csv_column(path, "sample", float)
    r_peaks = _read_csv_column(peaks_path, "r_peak", int)
    data = {
        "id": meta.get("id", path.stem),
        "label": meta.get("label"),
        "fs_hz": meta.get("fs_hz"),
        "samples": samples,
        "r_peaks": r_peaks,
    }
    return _record_from_dict(data, str(path))


def _read_csv_column(path: Path, column: str, cast) -> list:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or column not in reader.fieldnames:
            raise RecordParseError(f"expected column '{column}' in {path}")
        try:
            return [cast(row[column]) for row in reader]
        except (TypeError, ValueError) as exc:
            raise RecordParseError(f"malformed value in {path}: {exc}") from exc


def save_record(record: EcgRecord, path, format: str | None = None) -> Path:
    """Write a record so that ``load_record`` round-trips it exactly."""
    path = Path(path)
    if format is None:
        format = "csv" if path.suffix.lower() == ".csv" else "json"
    path.parent.mkdir(parents=True, exist_ok=True)
    if format == "json":
        payload = {
            "id": record.id,
            "label": record.label,
            "fs_hz": record.fs_hz,
            "samples": [float(x) for x in record.samples],
            "r_peaks": [int(p) for p in record.r_peaks],
        }
        path.write_text(json.dumps(payload) + "\n")
        return path
    if format != "csv":
        raise ValueError(f"format {format!r} not in ('json', 'csv')")
    peaks_path, meta_path = _csv_companions(path)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "sample"])
        for i, x in enumerate(record.samples):
            writer.writerow([i, repr(float(x))])
    with open(peaks_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["r_peak"])
        for p in record.r_peaks:
            writer.writerow([int(p)])
    meta_path.write_text(
        json.dumps({"id": record.id, "label": record.label, "fs_hz": record.fs_hz}) + "\n"
    )
    return path


# ---------------------------------------------------------------------------
# Datasets


@dataclass(frozen=True)
class Dataset:
    """Immutable snapshot of a two-class record directory."""

    root: str
    records: tuple[EcgRecord, ...]
    warnings: tuple[str, ...] = field(default_factory=tuple)

    def by_id(self, record_id: str) -> EcgRecord | None:
        for rec in self.records:
            if rec.id == record_id:
                return rec
        return None

    def by_label(self, label: str) -> tuple[EcgRecord, ...]:
        return tuple(r for r in self.records if r.label == label)


def _is_record_file(path: Path) -> bool:
    name = path.name.lower()
    if name.endswith(".meta.json") or name.endswith(".peaks.csv"):
        return False
    return name.endswith(".json") or name.endswith(".csv")


def load_dataset(root) -> Dataset:
    """Load every record under ``root/healthy`` and ``root/diseased``.

    Unparseable or invalid files are skipped and reported in
    ``Dataset.warnings`` so one corrupt record cannot take down a listing.
    """
    root = Path(root)
    if not root.is_dir():
        raise RecordParseError(f"dataset directory not found: {root}")
    records: list[EcgRecord] = []
    warnings: list[str] = []
    for label in LABELS:
        sub = root / label
        if not sub.is_dir():
            continue
        for path in sorted(p for p in sub.iterdir() if _is_record_file(p)):
            try:
                records.append(load_record(path))
            except (RecordParseError, RecordValidationError) as exc:
                warnings.append(f"{path.name}: {exc}")
    records.sort(key=lambda r: (r.label, r.id))
    return Dataset(root=str(root), records=tuple(records), warnings=tuple(warnings))
