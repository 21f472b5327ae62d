"""
End-to-end dataset workflow: build, list, analyze, batch
========================================================

Writes a small two-class dataset to a temp directory, then drives the same
code paths the command line exposes.
"""

import json
import tempfile
from pathlib import Path

from hermite_qrs import save_record, synthesize_beat_train
from hermite_qrs.cli import main

root = Path(tempfile.mkdtemp(prefix="hermite_qrs_demo_"))

# two records per class; even orders play healthy, odd orders diseased
specs = [
    ("healthy", "h_01", 0, 1.4, 1.0),
    ("healthy", "h_02", 2, 1.6, 1.1),
    ("diseased", "d_01", 1, 1.5, 1.2),
    ("diseased", "d_02", 3, 1.7, -0.9),
]
for seed, (label, rid, order, delta, amp) in enumerate(specs):
    rec = synthesize_beat_train(
        [(order, amp)], delta, noise_sigma=0.002, seed=seed,
        record_id=rid, label=label,
    )
    save_record(rec, root / label / f"{rid}.json")

print("== list ==")
main(["list", str(root)])

print("\n== analyze one peak ==")
out = root / "out"
main(["analyze", str(root), "h_01", "0", "--output", str(out)])
payload = json.loads((out / "h_01_peak0.json").read_text())
best = payload["optimization"]["best"]
print("winning shift/scale:", best["tau"], best["delta"])
print("top-2 PRD:", round(payload["prd_top2"]["prd_percent"], 3), "%")

print("\n== batch summary ==")
main(["batch", str(root), "--output", str(out)])
print((out / "batch_summary.csv").read_text().splitlines()[0])
print("(full CSV in", out / "batch_summary.csv", ")")
