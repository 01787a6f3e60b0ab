"""Parameters for a two-level target coupled to a periodic Ising ring.

The target two-level system (energy gap ``omega0``) couples with strength
``gamma`` to the z component of each of ``n`` identical ring spins (gap
``omega_a`` each).  Neighbouring ring spins interact through an Ising
coupling ``j``; j > 0 favours aligned neighbours, j < 0 favours
alternation.  Units: hbar = kB = 1, all energies in the same unit as
``omega0``.

Sign and normalization conventions used across the package:

* A ring configuration is summarized by ``twos``, twice the net
  magnetization (up-spin count minus down-spin count).  ``twos`` is an
  integer with the parity of ``n`` and ranges over -n..n in steps of 2.
* ``gamma`` must be nonnegative.  The equilibrium coherence depends on
  the coupling only through its magnitude, so callers with a negative
  microscopic coupling should pass ``abs(gamma)``.
* Temperature enters as ``beta = 1/t``.  ``t == 0`` is a legal input to
  the observables that have a well defined ground-state limit; it is
  dispatched to ground-manifold formulas rather than to ``beta``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

N_CAP = 64  # largest ring handled by the closed-form path


class NonPositiveGapError(ValueError):
    """A gap parameter that must be positive was zero or negative."""


class NegativeCouplingError(ValueError):
    """The target-ring coupling must be nonnegative."""


class NZeroError(ValueError):
    """The ring must contain at least one spin."""


class NTooLargeError(ValueError):
    """The ring size exceeds the supported cap."""


@dataclass(frozen=True)
class ModelParams:
    """Validated model parameters.

    omega0  : target gap, > 0
    omega_a : ring-spin gap, > 0
    gamma   : target-ring coupling, >= 0
    j       : nearest-neighbour Ising coupling, any sign
    n       : number of ring spins, 1 <= n <= N_CAP
    """

    omega0: float
    omega_a: float
    gamma: float
    j: float
    n: int

    def __post_init__(self):
        validate(self)


def validate(p: ModelParams, n_cap: int = N_CAP) -> ModelParams:
    """Check parameter ranges and return ``p`` unchanged.  Idempotent."""
    for name, value in (("omega0", p.omega0), ("omega_a", p.omega_a),
                        ("gamma", p.gamma), ("j", p.j)):
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")
    if p.omega0 <= 0:
        raise NonPositiveGapError(f"omega0 must be > 0, got {p.omega0!r}")
    if p.omega_a <= 0:
        raise NonPositiveGapError(f"omega_a must be > 0, got {p.omega_a!r}")
    if p.gamma < 0:
        raise NegativeCouplingError(
            f"gamma must be >= 0 (pass the magnitude), got {p.gamma!r}")
    if int(p.n) != p.n:
        raise ValueError(f"n must be an integer, got {p.n!r}")
    if p.n < 1:
        raise NZeroError(f"n must be >= 1, got {p.n!r}")
    if p.n > n_cap:
        raise NTooLargeError(f"n must be <= {n_cap}, got {p.n!r}")
    return p


@dataclass(frozen=True)
class Temperature:
    """Nonnegative temperature with zero treated as a first-class value."""

    t: float

    def __post_init__(self):
        if not (self.t >= 0) or not math.isfinite(self.t):
            raise ValueError(f"temperature must be finite and >= 0, got {self.t!r}")

    @property
    def is_zero(self) -> bool:
        return self.t == 0.0

    @property
    def beta(self) -> float:
        """Inverse temperature.  Defined only for t > 0."""
        if self.is_zero:
            raise ValueError("beta is undefined at t = 0; use the ground-state path")
        return 1.0 / self.t


def as_temperature(t) -> Temperature:
    """Coerce a float or Temperature to a validated Temperature."""
    if isinstance(t, Temperature):
        return t
    return Temperature(float(t))
