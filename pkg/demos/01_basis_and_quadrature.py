"""
Building an orthonormal Hermite basis on a sampled window
=========================================================

"""

import numpy as np

from hermite_qrs import build_basis, hermite_function, hermite_roots, max_admissible_delta

# the basis lives on the roots of the highest-order polynomial, scaled by delta
n = 31
delta = 1.5
basis = build_basis(n, delta)
print(f"{n}-point basis at delta={delta}")
print("node span:", basis.node_positions.min(), "..", basis.node_positions.max())

# analysis followed by synthesis must be the identity: that is the whole
# point of evaluating on this particular node set
identity_error = np.abs(basis.analysis_weights @ basis.synthesis_values - np.eye(n)).max()
print(f"max |A.S - I| = {identity_error:.3e}")

# the nodes are symmetric and interlace like any orthogonal-polynomial roots
roots = hermite_roots(n)
print("symmetry:", np.abs(roots + roots[::-1]).max())

# each window length caps how far the basis can stretch before its outer
# nodes fall off the window; delta above the cap is rejected outright
for w in (5, 15, 31, 63):
    print(f"W={w:3d}  max usable delta = {max_admissible_delta(w):.3f}")

# individual basis functions are available directly, vectorized over time
t = np.linspace(-6, 6, 7)
print("order 4 at a few points:", np.round(hermite_function(4, t, delta), 4))
