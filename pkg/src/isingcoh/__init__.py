"""Exact thermal coherence of a two-level target coupled to an Ising ring.

The package computes, in closed form and with brute-force verification,
the equilibrium off-diagonal order (coherence) induced on a single
two-level system by transverse coupling to a periodic ring of Ising
interacting two-level systems.
"""

__version__ = "0.1.0"

from .combinatorics import (
    binomial,
    degeneracy,
    r_hypergeometric,
    r_weight,
    valid_level_indices,
)
from .limits import (
    AsymptoticEstimate,
    c0_ground,
    gamma_infinity_limit,
    high_t_asymptotic,
    lower_bound,
    omega_a_infinity_limit,
    small_gamma_slope,
    upper_bound,
)
from .model import ModelParams, Temperature, as_temperature, validate
from .observables import (
    Rho0,
    SweepPoint,
    SweepResult,
    coherence,
    coherence_signed_sum,
    ground_manifold_coherence,
    log_partition,
    rho0,
    sweep,
)
from .spectrum import (
    MixingWeights,
    PhaseLabel,
    PhaseResult,
    SpectrumLevel,
    energy_pair,
    ground_level,
    mixing_weights,
    phase_classify,
    spectral_gap,
    transition_j,
)

__all__ = [
    "__version__",
    "ModelParams", "Temperature", "as_temperature", "validate",
    "binomial", "degeneracy", "r_weight", "r_hypergeometric",
    "valid_level_indices",
    "energy_pair", "mixing_weights", "ground_level", "spectral_gap",
    "phase_classify", "transition_j",
    "MixingWeights", "PhaseLabel", "PhaseResult", "SpectrumLevel",
    "log_partition", "coherence", "coherence_signed_sum",
    "ground_manifold_coherence", "rho0", "sweep",
    "Rho0", "SweepPoint", "SweepResult",
    "upper_bound", "lower_bound", "c0_ground", "high_t_asymptotic",
    "gamma_infinity_limit", "omega_a_infinity_limit", "small_gamma_slope",
    "AsymptoticEstimate",
]
