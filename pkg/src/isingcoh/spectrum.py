"""Exact spectrum of the coupled target-ring Hamiltonian.

At fixed ring class (twos, d) the target mixes with the collective ring
magnetization and the full Hamiltonian block is 2x2, giving the level
pair

    E_-/+ = omega_a twos / 2 - (j/2)(n - 4 d) -/+... see energy_pair

with gap sqrt(omega0^2 + (gamma twos)^2).  The minus branch always lies
below the plus branch by at least omega0, so ground-state structure is
decided entirely on the minus branch.

Ground-state bookkeeping uses the hybrid tolerance
tau = 1e-9 max(1, |E_ground|): levels within tau of the minimum form the
ground manifold, and the ferro/antiferro classification compares the two
competing minimum-energy candidates with the same tolerance.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .combinatorics import degeneracy, valid_level_indices
from .model import ModelParams


class PhaseLabel(enum.Enum):
    FERROMAGNETIC = "ferromagnetic"
    ANTIFERROMAGNETIC = "antiferromagnetic"
    CRITICAL = "critical"


@dataclass(frozen=True)
class SpectrumLevel:
    """One analytic level: ring class, branch, energy and multiplicity."""

    twos: int
    d: int
    branch: str  # "minus" or "plus"
    energy: float
    degeneracy: int


@dataclass(frozen=True)
class MixingWeights:
    """Target occupation weights within one (twos) block.

    p2_minus/p2_plus are the target ground-component weights of the
    minus and plus branch eigenvectors; cross_minus/cross_plus are the
    real off-diagonal products that feed the coherence.
    """

    p2_minus: float
    p2_plus: float
    cross_minus: float
    cross_plus: float


@dataclass(frozen=True)
class PhaseResult:
    label: PhaseLabel
    delta_e_min: float


def ground_tolerance(e_ground: float) -> float:
    """Degeneracy tolerance: 1e-9 on an absolute-or-relative scale."""
    return 1e-9 * max(1.0, abs(e_ground))


def branch_gap(p: ModelParams, twos: int) -> float:
    """Splitting between the plus and minus branch at magnetization twos/2."""
    return math.hypot(p.omega0, p.gamma * twos)


def energy_pair(p: ModelParams, twos: int, d: int) -> tuple[float, float]:
    """(E_minus, E_plus) for the ring class (twos, d)."""
    gap = branch_gap(p, twos)
    base = p.omega_a * twos / 2.0 - p.j * (p.n - 4 * d) / 2.0
    return base - gap / 2.0, base + gap / 2.0


def mixing_weights(p: ModelParams, twos: int) -> MixingWeights:
    gap = branch_gap(p, twos)
    ratio = p.omega0 / gap
    cross = p.gamma * (twos / 2.0) / gap
    return MixingWeights(
        p2_minus=0.5 * (1.0 + ratio),
        p2_plus=0.5 * (1.0 - ratio),
        cross_minus=-cross,
        cross_plus=cross,
    )


def ground_energy(p: ModelParams) -> float:
    """Lowest level energy (always on the minus branch)."""
    return min(energy_pair(p, twos, d)[0] for twos, d in valid_level_indices(p.n))


def ground_level(p: ModelParams) -> list[SpectrumLevel]:
    """All levels within the ground tolerance of the minimum, scan order."""
    e0 = ground_energy(p)
    tol = ground_tolerance(e0)
    manifold = []
    for twos, d in valid_level_indices(p.n):
        e_minus, _ = energy_pair(p, twos, d)
        if e_minus <= e0 + tol:
            manifold.append(SpectrumLevel(twos, d, "minus", e_minus,
                                          degeneracy(twos, d, p.n)))
    return manifold


def spectral_gap(p: ModelParams) -> float:
    """Distance from the ground energy to the first level above the manifold."""
    energies = []
    for twos, d in valid_level_indices(p.n):
        energies.extend(energy_pair(p, twos, d))
    e0 = min(energies)
    tol = ground_tolerance(e0)
    above = [e for e in energies if e > e0 + tol]
    if not above:
        raise ValueError("spectrum has a single degenerate level, no gap")
    return min(above) - e0


def phase_classify(p: ModelParams) -> PhaseResult:
    """Ferro/antiferro/critical from the two competing ground candidates.

    The aligned candidate has twos = -n, no walls; the alternating
    candidate has twos = 0 (even n) or -1 (odd n) with maximal wall
    count.  delta_e_min = E(alternating) - E(aligned); positive means the
    aligned state wins (ferromagnetic order in the ring).

    For n = 1 the two candidates coincide and the ring is trivially
    aligned, so the label is ferromagnetic with delta_e_min = +inf.
    """
    if p.n == 1:
        return PhaseResult(PhaseLabel.FERROMAGNETIC, math.inf)
    anti_twos = 0 if p.n % 2 == 0 else -1
    d_max = (p.n - abs(anti_twos)) // 2
    e_anti = energy_pair(p, anti_twos, d_max)[0]
    e_ferro = energy_pair(p, -p.n, 0)[0]
    delta = e_anti - e_ferro
    tol = ground_tolerance(min(e_anti, e_ferro))
    if delta > tol:
        label = PhaseLabel.FERROMAGNETIC
    elif delta < -tol:
        label = PhaseLabel.ANTIFERROMAGNETIC
    else:
        label = PhaseLabel.CRITICAL
    return PhaseResult(label, delta)


def transition_j(p: ModelParams) -> float:
    """Ising coupling at which the two ground candidates cross.

    delta_e_min is affine in j, so the root is closed form.  The value of
    p.j is ignored.  For n = 1 no crossing exists (delta_e_min does not
    depend on j) and a ValueError is raised.
    """
    if p.n == 1:
        raise ValueError("n = 1 has a single ground candidate, no transition")
    w0, g, n = p.omega0, p.gamma, p.n
    if p.n % 2 == 0:
        # (hypot(w0, g n) - w0) written cancellation-free
        rise = (g * n) ** 2 / (math.hypot(w0, g * n) + w0)
        return -p.omega_a / 2.0 - rise / (2.0 * n)
    rise = (g * g) * (n * n - 1.0) / (math.hypot(w0, g * n) + math.hypot(w0, g))
    return -p.omega_a / 2.0 - rise / (2.0 * (n - 1))
