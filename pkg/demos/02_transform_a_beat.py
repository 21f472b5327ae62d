"""Forward and inverse transform of a single synthetic beat."""

import numpy as np

from hermite_qrs import (
    extract_segment,
    forward_ht,
    inverse_ht,
    prd,
    resample_to_nodes,
    build_basis,
    synthesize_qrs,
    top_k_reconstruction,
)

# a beat made of two basis shapes, so we know the answer in advance
rec = synthesize_qrs([(0, 1.0), (2, 0.5)], delta_true=1.8, window=31)
segment = extract_segment(rec, peak_index=0, window=31)

result = forward_ht(segment, delta=1.8)
print("coefficients 0..5:", np.round(result.coeffs[:6], 4))
print("l1 measure:", round(result.l1, 4))

# full-order reconstruction returns the node samples to rounding error
basis = build_basis(31, 1.8)
nodes = resample_to_nodes(segment, basis)
full = inverse_ht(result)
print("full round trip error:", np.abs(full - nodes).max())

# keeping just the two strongest coefficients already carries the beat
top2 = top_k_reconstruction(result, 2)
quality = prd(nodes, top2, retained_m=2)
print(f"top-2 PRD = {quality.prd_percent:.3f}%   max abs err = {quality.max_abs_err:.2e}")

# a mismatched scaling factor spreads energy over many more coefficients
mismatched = forward_ht(segment, delta=1.0)
print("l1 at delta=1.0:", round(mismatched.l1, 4), "(higher, less concentrated)")
