"""Hermite basis construction and the forward/inverse heartbeat transform.

The analysis/synthesis pair is built on Gauss-Hermite quadrature: a segment of
odd length N is resampled (truncated-sinc interpolation) at the N zeros of the
physicists' Hermite polynomial of order N, scaled by the dilation factor
``delta``, and the coefficient of order n is the quadrature inner product with
the n-th orthonormal Hermite function.  Evaluation goes through the normalized
three-term recurrence throughout; the raw polynomial-times-Gaussian form
overflows long before the orders used here.

Scaling convention: ``delta`` is absorbed into the node positions
``p_z = delta * t_z`` at which the signal is read, and the quadrature matrices
always use unit-scale functions.  One unit basis per N is therefore enough,
and it is memoized.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import AdmissibilityError, RecordValidationError
from .records import PeakSegment

MAX_ORDER = 512
MAX_ROOTS = 256

_sinc_lock = threading.Lock()
_sinc_cache: dict[tuple[int, float], np.ndarray] = {}


def hermite_polynomial(n: int, t):
    """Physicists' Hermite polynomial HP_n(t).

    Three-term recurrence HP_n = 2t*HP_{n-1} - 2(n-1)*HP_{n-2} with HP_0 = 1,
    HP_1 = 2t.  Accepts scalars or arrays.  Orders above 512 are rejected:
    the values overflow float64 at moderate |t| anyway.
    """
    if n < 0 or n > MAX_ORDER:
        raise ValueError(f"order n={n} outside [0, {MAX_ORDER}]")
    t = np.asarray(t, dtype=float)
    h_prev = np.ones_like(t)
    if n == 0:
        return h_prev if h_prev.ndim else float(h_prev)
    h = 2.0 * t
    for k in range(2, n + 1):
        h_prev, h = h, 2.0 * t * h - 2.0 * (k - 1) * h_prev
    return h if h.ndim else float(h)


def _unit_hermite_functions(x: np.ndarray, nmax: int) -> np.ndarray:
    """HF_0..HF_nmax at points x (unit delta), stacked along axis 0.

    Normalized recurrence HF_n = x*sqrt(2/n)*HF_{n-1} - sqrt((n-1)/n)*HF_{n-2}
    with the Gaussian weight folded into HF_0; stable where the direct
    polynomial form is not.
    """
    x = np.asarray(x, dtype=float)
    out = np.empty((nmax + 1,) + x.shape)
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if nmax >= 1:
        out[1] = math.sqrt(2.0) * x * out[0]
    for k in range(2, nmax + 1):
        out[k] = x * math.sqrt(2.0 / k) * out[k - 1] - math.sqrt((k - 1) / k) * out[k - 2]
    return out


def hermite_function(n: int, t, delta: float = 1.0):
    """Orthonormal Hermite function of order n with scaling factor delta.

    Equals exp(-t^2/(2*delta^2)) * HP_n(t/delta) / sqrt(delta * 2^n * n! * sqrt(pi)),
    computed via the normalized recurrence on x = t/delta with a 1/sqrt(delta)
    prefactor.  Accepts scalars or arrays.
    """
    if n < 0 or n > MAX_ORDER:
        raise ValueError(f"order n={n} outside [0, {MAX_ORDER}]")
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    t = np.asarray(t, dtype=float)
    x = t / delta
    value = _unit_hermite_functions(x, n)[n] / math.sqrt(delta)
    return value if value.ndim else float(value)


def hermite_roots(n: int) -> np.ndarray:
    """The n real zeros of HP_n, ascending and symmetric about 0.

    Eigenvalues of the symmetric tridiagonal Jacobi matrix give the starting
    points; Newton steps on the normalized-recurrence HF_n polish them.  Each
    returned root satisfies |HP_n(t_z)| < 1e-8 * |HP_n'(t_z)|.
    """
    if n < 1 or n > MAX_ROOTS:
        raise ValueError(f"root count n={n} outside [1, {MAX_ROOTS}]")
    if n == 1:
        return np.zeros(1)
    off_diag = np.sqrt(np.arange(1, n) / 2.0)
    roots = np.sort(eigh_tridiagonal(np.zeros(n), off_diag, eigvals_only=True))
    for _ in range(3):
        hf = _unit_hermite_functions(roots, n)
        # HF_n'(x) = sqrt(2n)*HF_{n-1}(x) - x*HF_n(x)
        deriv = math.sqrt(2.0 * n) * hf[n - 1] - roots * hf[n]
        roots = roots - hf[n] / deriv
    roots = (roots - roots[::-1]) / 2.0  # enforce exact symmetry
    steps = root_residuals(n, roots)
    if np.any(steps >= 1e-8):
        raise RuntimeError(f"Hermite root refinement failed for n={n}")
    return roots


def root_residuals(n: int, roots: np.ndarray | None = None) -> np.ndarray:
    """|HP_n(t_z)| / |HP_n'(t_z)| for each candidate root, evaluated stably.

    Uses HP_n' = 2n*HP_{n-1} and the normalized functions, which reduce the
    ratio to |HF_n| / (sqrt(2n) * |HF_{n-1}|).  With ``roots`` omitted the
    computed roots are checked, giving their a-posteriori accuracy.
    """
    if roots is None:
        roots = hermite_roots(n)
    hf = _unit_hermite_functions(np.asarray(roots, dtype=float), n)
    return np.abs(hf[n]) / (math.sqrt(2.0 * n) * np.abs(hf[n - 1]))


def max_admissible_delta(n: int) -> float:
    """Largest delta keeping every node position inside the window [-C, C]."""
    return ((n - 1) / 2.0) / float(hermite_roots(n)[-1]) if n > 1 else math.inf


@dataclass(frozen=True)
class HermiteBasis:
    """Quadrature data for an N-point analysis/synthesis pair at one delta.

    ``analysis_weights[n, z] = (1/N) * HF_n(t_z) / HF_{N-1}(t_z)**2`` and
    ``synthesis_values[z, n] = HF_n(t_z)`` (unit-scale functions at the raw
    roots); their product is the identity by quadrature exactness.  The
    scaling factor only moves the node positions ``delta * t_z``.
    """

    n: int
    delta: float
    roots: np.ndarray
    node_positions: np.ndarray
    analysis_weights: np.ndarray
    synthesis_values: np.ndarray


@lru_cache(maxsize=None)
def _unit_basis(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(roots, analysis matrix, synthesis matrix) for unit delta, memoized."""
    roots = hermite_roots(n)
    hf = _unit_hermite_functions(roots, n - 1)
    synthesis = hf.T.copy()  # S[z, n] = HF_n(t_z)
    analysis = hf / (n * hf[n - 1] ** 2)  # A[n, z]
    for arr in (roots, analysis, synthesis):
        arr.flags.writeable = False
    return roots, analysis, synthesis


def build_basis(n: int, delta: float) -> HermiteBasis:
    """Construct the N-point basis for the given scaling factor.

    Raises AdmissibilityError when ``delta * max|t_z|`` exceeds the window
    half-width (N-1)/2: such nodes would only ever read zero padding.
    """
    if n < 1:
        raise ValueError(f"basis size n={n} must be positive")
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    roots, analysis, synthesis = _unit_basis(n)
    max_abs_root = float(roots[-1]) if n > 1 else 0.0
    half_width = (n - 1) / 2.0
    if max_abs_root * delta > half_width + 1e-12:
        limit = max_admissible_delta(n)
        raise AdmissibilityError(
            f"delta {delta:g} inadmissible for window {n}: nodes reach "
            f"{max_abs_root * delta:.3f} > {half_width:g}; "
            f"max admissible delta is {limit:.6g}",
            max_delta=limit,
        )
    node_positions = delta * roots
    node_positions.flags.writeable = False
    return HermiteBasis(
        n=n,
        delta=float(delta),
        roots=roots,
        node_positions=node_positions,
        analysis_weights=analysis,
        synthesis_values=synthesis,
    )


def _sinc_matrix(n: int, delta: float) -> np.ndarray:
    """Truncated-sinc interpolation matrix from the integer axis to the nodes.

    Row z holds sinc(p_z - k) for k = -C..C, so ``matrix @ values`` evaluates
    the band-limited interpolant of the segment at every node position.
    Cached per (n, delta); concurrent duplicate construction is harmless
    because the value is deterministic.
    """
    key = (n, float(delta))
    cached = _sinc_cache.get(key)
    if cached is not None:
        return cached
    nodes = build_basis(n, delta).node_positions
    c = (n - 1) // 2
    axis = np.arange(-c, c + 1)
    matrix = np.sinc(nodes[:, None] - axis[None, :])
    matrix.flags.writeable = False
    with _sinc_lock:
        _sinc_cache[key] = matrix
    return matrix


def resample_to_nodes(segment: PeakSegment, basis: HermiteBasis) -> np.ndarray:
    """Segment values at the node positions via truncated sinc interpolation.

    Samples outside the window contribute zero; node positions that land
    exactly on integers reproduce the stored samples.
    """
    if segment.window != basis.n:
        raise ValueError(
            f"segment length {segment.window} != basis size {basis.n}"
        )
    return _sinc_matrix(basis.n, basis.delta) @ segment.values


@dataclass(frozen=True, eq=False)
class HtResult:
    """Hermite coefficient vector plus the parameters it was computed under."""

    coeffs: np.ndarray
    delta: float
    tau: int
    l1: float
    segment_ref: tuple[str, int, int]  # (record_id, peak_index, window)

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=float)
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self) -> int:
        return int(self.coeffs.size)

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "tau": self.tau,
            "l1": self.l1,
            "coeffs": [float(c) for c in self.coeffs],
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, HtResult):
            return NotImplemented
        return (
            self.delta == other.delta
            and self.tau == other.tau
            and self.l1 == other.l1
            and self.segment_ref == other.segment_ref
            and np.array_equal(self.coeffs, other.coeffs)
        )


def forward_ht(segment: PeakSegment, delta: float = 1.0) -> HtResult:
    """All N Hermite coefficients of a segment at the given scaling factor.

    The full vector is always produced; truncation to fewer functions is a
    reconstruction-time choice (see ``inverse_ht``).
    """
    basis = build_basis(segment.window, delta)
    node_samples = resample_to_nodes(segment, basis)
    coeffs = basis.analysis_weights @ node_samples
    if not np.all(np.isfinite(coeffs)):
        raise RecordValidationError(
            f"non-finite Hermite coefficients for record '{segment.record_id}'"
        )
    return HtResult(
        coeffs=coeffs,
        delta=float(delta),
        tau=segment.tau,
        l1=float(np.abs(coeffs).sum()),
        segment_ref=(segment.record_id, segment.peak_index, segment.window),
    )


def inverse_ht(result: HtResult, m: int | None = None) -> np.ndarray:
    """Reconstruction at the node grid from the first m coefficients.

    m = N reproduces the resampled node values to rounding; m < N truncates
    the expansion to the lowest m orders.
    """
    n = result.n
    if m is None:
        m = n
    if m < 1 or m > n:
        raise ValueError(f"truncation order m={m} outside [1, {n}]")
    basis = build_basis(n, result.delta)
    return basis.synthesis_values[:, :m] @ result.coeffs[:m]


def top_k_reconstruction(result: HtResult, k: int) -> np.ndarray:
    """Reconstruction at the node grid keeping only the k strongest coefficients.

    Strength is |coefficient|; ties resolve toward lower order so the
    selection is deterministic.
    """
    n = result.n
    if k < 1 or k > n:
        raise ValueError(f"k={k} outside [1, {n}]")
    order = np.lexsort((np.arange(n), -np.abs(result.coeffs)))
    kept = np.zeros(n)
    kept[order[:k]] = result.coeffs[order[:k]]
    basis = build_basis(n, result.delta)
    return basis.synthesis_values @ kept
