"""Shared draw helpers for randomized checks.

All randomized tests seed numpy's Generator explicitly so every run sees
the same parameter sets.
"""

import numpy as np

from isingcoh import ModelParams


def draw_params(rng, n_max=12, n_min=1, gamma_min=0.0,
                j_lo=-6.0, j_hi=6.0) -> ModelParams:
    return ModelParams(
        omega0=float(rng.uniform(0.5, 20.0)),
        omega_a=float(rng.uniform(0.2, 8.0)),
        gamma=float(rng.uniform(gamma_min, 6.0)),
        j=float(rng.uniform(j_lo, j_hi)),
        n=int(rng.integers(n_min, n_max + 1)),
    )


def draw_temperature(rng, lo=0.1, hi=100.0) -> float:
    return float(10.0 ** rng.uniform(np.log10(lo), np.log10(hi)))
