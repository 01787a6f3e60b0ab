"""Brute-force oracles, structurally independent of the analytic path.

Two independent verification routes:

* Enumeration: iterate all 2^n ring configurations, classify each by
  (twos, d) directly from its bits, and build thermal sums per
  configuration.  Never touches degeneracy counting or the wall-summed
  weights, so it checks both the counting and the reductions.

* Dense: assemble the full (2^(n+1))-dimensional Hamiltonian from the
  action of the spin operators on raw product-basis indices, diagonalize
  it with an in-house cyclic Jacobi eigensolver, and form exp(-beta H)
  spectrally.  Nothing here knows that the Hamiltonian block-factorizes,
  which is exactly what makes the comparison a real test.

Basis layout for the dense route: index = t * 2^n + a, where t is the
target bit (1 = excited) and bit i of a is ring site i+1 (1 = excited).
A z operator has eigenvalue +1 on a set bit.

Enumeration accumulates in configuration-index order with numpy's
pairwise reduction on a single thread, so results are deterministic.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from .model import ModelParams, as_temperature
from .observables import Rho0
from .spectrum import branch_gap

ENUM_CAP = 20   # 2^20 configurations
DENSE_CAP = 8   # 2^9 = 512 dimensional Hamiltonian


class DimensionTooLargeError(ValueError):
    """Requested brute-force size exceeds the supported cap."""


class NoConvergenceError(RuntimeError):
    """The Jacobi sweep limit was reached before the off-norm target."""


def classify(bits: int, n: int) -> tuple[int, int]:
    """(twos, d) of the ring configuration encoded by the low n bits."""
    if not 1 <= n <= ENUM_CAP:
        raise DimensionTooLargeError(f"n must be in 1..{ENUM_CAP}, got {n}")
    if not 0 <= bits < (1 << n):
        raise ValueError(f"bits={bits} out of range for n={n}")
    rotated = (bits >> 1) | ((bits & 1) << (n - 1))
    walls = (bits ^ rotated).bit_count()
    assert walls % 2 == 0
    return 2 * bits.bit_count() - n, walls // 2


def _config_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized classify for all 2^n configurations, index order."""
    if not 1 <= n <= ENUM_CAP:
        raise DimensionTooLargeError(f"n must be in 1..{ENUM_CAP}, got {n}")
    codes = np.arange(1 << n, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(n)) & 1).astype(np.int8)
    twos = 2 * bits.sum(axis=1, dtype=np.int64) - n
    walls = (bits != np.roll(bits, -1, axis=1)).sum(axis=1, dtype=np.int64)
    return twos, walls // 2


def enum_census(n: int) -> dict[tuple[int, int], int]:
    """Exact histogram of (twos, d) over all 2^n configurations."""
    twos, d = _config_table(n)
    census: dict[tuple[int, int], int] = {}
    for key in zip(twos.tolist(), d.tolist()):
        census[key] = census.get(key, 0) + 1
    return census


def _enum_weights(p: ModelParams, beta: float):
    """Per-configuration Boltzmann weights for both branches, shifted."""
    twos, d = _config_table(p.n)
    gap = np.hypot(p.omega0, p.gamma * twos.astype(np.float64))
    base = p.omega_a * twos / 2.0 - p.j * (p.n - 4 * d) / 2.0
    e_minus = base - gap / 2.0
    e_plus = base + gap / 2.0
    shift = e_minus.min()
    w_minus = np.exp(-beta * (e_minus - shift))
    w_plus = np.exp(-beta * (e_plus - shift))
    return twos, gap, w_minus, w_plus, shift


def enum_log_partition(p: ModelParams, t) -> float:
    """log Z by summing exp(-beta E) over every configuration and branch."""
    tt = as_temperature(t)
    if tt.is_zero:
        raise ValueError("enum_log_partition requires t > 0")
    _, _, w_minus, w_plus, shift = _enum_weights(p, tt.beta)
    return math.log(w_minus.sum() + w_plus.sum()) - tt.beta * shift


def enum_coherence(p: ModelParams, t) -> float:
    """Coherence by direct configuration sum; the primary equivalence oracle."""
    tt = as_temperature(t)
    if tt.is_zero:
        raise ValueError("enum_coherence requires t > 0")
    twos, gap, w_minus, w_plus, _ = _enum_weights(p, tt.beta)
    cross_minus = -p.gamma * (twos / 2.0) / gap
    z = w_minus.sum() + w_plus.sum()
    off = (cross_minus * w_minus).sum() + (-cross_minus * w_plus).sum()
    return abs(2.0 * off / z)


def dense_hamiltonian(p: ModelParams) -> np.ndarray:
    """Full coupled Hamiltonian on the 2^(n+1) product basis."""
    if p.n > DENSE_CAP:
        raise DimensionTooLargeError(f"dense route supports n <= {DENSE_CAP}, got {p.n}")
    twos, d = _config_table(p.n)
    twos = twos.astype(np.float64)
    eps = (p.n - 4 * d).astype(np.float64)
    ring_diag = p.omega_a * twos / 2.0 - p.j * eps / 2.0
    half = 1 << p.n
    dim = 2 * half
    h = np.zeros((dim, dim))
    diag = np.concatenate((ring_diag - p.omega0 / 2.0, ring_diag + p.omega0 / 2.0))
    np.fill_diagonal(h, diag)
    flip = p.gamma * twos / 2.0
    idx = np.arange(half)
    h[idx + half, idx] = flip
    h[idx, idx + half] = flip
    return h


@njit(cache=True)
def _jacobi_kernel(a, v, target_off, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off2 += a[i, j] * a[i, j]
        if math.sqrt(2.0 * off2) <= target_off:
            return sweep
        skip = 0.1 * target_off / n
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    tangent = 1.0 / (2.0 * theta)
                else:
                    sign = 1.0 if theta >= 0.0 else -1.0
                    tangent = sign / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(tangent * tangent + 1.0)
                s = tangent * c
                for k in range(n):
                    akp = a[p, k]
                    akq = a[q, k]
                    a[p, k] = c * akp - s * akq
                    a[q, k] = s * akp + c * akq
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    off2 = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            off2 += a[i, j] * a[i, j]
    if math.sqrt(2.0 * off2) <= target_off:
        return max_sweeps
    return -1


def jacobi_eigh(m: np.ndarray, tol: float = 1e-12,
                max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a real symmetric matrix by cyclic Jacobi.

    Rotations run until the off-diagonal Frobenius norm falls below
    tol * ||m||_F.  Returns (eigenvalues ascending, eigenvector columns
    in matching order).  Deliberately library-free: this is the
    verification-grade solver for the dense oracle.
    """
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    norm = float(np.linalg.norm(m))
    if not np.allclose(m, m.T, atol=1e-12 * max(1.0, norm)):
        raise ValueError("matrix is not symmetric")
    a = np.array(m, dtype=np.float64, order="C", copy=True)
    a = 0.5 * (a + a.T)
    v = np.eye(a.shape[0])
    if norm > 0.0:
        result = _jacobi_kernel(a, v, tol * norm, max_sweeps)
        if result < 0:
            raise NoConvergenceError(
                f"Jacobi did not reach off-norm {tol:g}*||m|| in {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def dense_spectrum(p: ModelParams) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and eigenvectors of the dense Hamiltonian via Jacobi."""
    return jacobi_eigh(dense_hamiltonian(p))


def dense_rho0(p: ModelParams, t) -> Rho0:
    """Reduced target state from exp(-beta H) built spectrally, then a partial trace."""
    tt = as_temperature(t)
    if tt.is_zero:
        raise ValueError("dense_rho0 requires t > 0")
    w, v = dense_spectrum(p)
    weights = np.exp(-tt.beta * (w - w.min()))
    rho = (v * weights) @ v.T / weights.sum()
    half = 1 << p.n
    blocks = rho.reshape(2, half, 2, half)
    reduced = np.einsum("iaja->ij", blocks)
    off = 0.5 * (reduced[0, 1] + reduced[1, 0])
    return Rho0(rho_e=float(reduced[1, 1]), rho_g=float(reduced[0, 0]),
                rho_ge=float(off))
