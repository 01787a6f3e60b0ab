"""Thermal-equilibrium observables of the target two-level system.

Everything here is exact: thermal traces over the ring reduce to sums
over magnetization classes weighted by r_weight, and the target's 2x2
reduced state follows from the per-class mixing weights.  The headline
quantity is the coherence

    C = |rho_ge + rho_eg| = 2 |rho_ge|,   C in [0, 1],

computed from the positive-magnetization reduction: one product of two
positive sinh factors per positive twos value.  Every exponential lives
in the log domain with a max shift, so arbitrarily large beta, j and n
combinations evaluate without overflow.  Term order is fixed (ascending
twos, then wall count, then branch) and mantissas are accumulated with
compensated summation, so results are reproducible bit for bit.

t = 0 is a first-class input: coherence() dispatches to the
ground-manifold average instead of touching beta.

The signed all-magnetization form coherence_signed_sum() keeps every
(twos, d) term with its sign and exists as an internal cross-check of
the reduction; it must agree with coherence() to near machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

from .combinatorics import degeneracy, positive_twos_values, r_weight, valid_level_indices
from .logdomain import NEG_INF, SignedLogReal, log_sinh, log_sum_exp, signed_log_sum
from .model import ModelParams, as_temperature
from .spectrum import branch_gap, energy_pair, ground_level, mixing_weights


@dataclass(frozen=True)
class Rho0:
    """Reduced 2x2 thermal state of the target, real in the energy basis.

    Basis order is (e, g); the off-diagonal is real and symmetric so a
    single value rho_ge is stored.
    """

    rho_e: float
    rho_g: float
    rho_ge: float

    def as_matrix(self):
        import numpy as np

        return np.array([[self.rho_e, self.rho_ge],
                         [self.rho_ge, self.rho_g]], dtype=float)

    @property
    def coherence(self) -> float:
        return 2.0 * abs(self.rho_ge)


@dataclass(frozen=True)
class SweepPoint:
    value: float
    coherence: float
    upper: float | None = None
    lower: float | None = None
    asym_leading: float | None = None
    asym_two_term: float | None = None


@dataclass(frozen=True)
class SweepResult:
    variable: str
    points: list[SweepPoint]
    params: ModelParams
    temperature: float | None


def log_partition(p: ModelParams, t) -> float:
    """log Z of the full coupled system.  Requires t > 0."""
    tt = as_temperature(t)
    if tt.is_zero:
        raise ValueError("log_partition requires t > 0")
    beta = tt.beta
    terms = []
    for twos in positive_twos_values(p.n):
        lr = r_weight(twos, p.n, beta * p.j)
        a = beta * p.omega_a * twos / 2.0
        b = beta * branch_gap(p, twos) / 2.0
        terms.extend((lr + a + b, lr + a - b, lr - a + b, lr - a - b))
    if p.n % 2 == 0:
        lr0 = r_weight(0, p.n, beta * p.j)
        b0 = beta * p.omega0 / 2.0
        terms.extend((lr0 + b0, lr0 - b0))
    return log_sum_exp(terms)


def coherence(p: ModelParams, t) -> float:
    """Equilibrium coherence of the target.  t = 0 uses the ground manifold."""
    tt = as_temperature(t)
    if tt.is_zero:
        return ground_manifold_coherence(p)
    if p.gamma == 0.0:
        return 0.0
    beta = tt.beta
    log_z = log_partition(p, tt)
    terms = []
    for twos in positive_twos_values(p.n):
        gap = branch_gap(p, twos)
        prefactor = 8.0 * p.gamma * (twos / 2.0) / gap
        terms.append(math.log(prefactor)
                     + r_weight(twos, p.n, beta * p.j)
                     + log_sinh(beta * p.omega_a * twos / 2.0)
                     + log_sinh(beta * gap / 2.0))
    return math.exp(log_sum_exp(terms) - log_z)


def coherence_signed_sum(p: ModelParams, t) -> float:
    """Coherence from the full signed sum over every (twos, d) class.

    Reference path for cross-checking the positive-twos reduction used
    by coherence(); sign bookkeeping goes through SignedLogReal.
    """
    tt = as_temperature(t)
    if tt.is_zero:
        return ground_manifold_coherence(p)
    if p.gamma == 0.0:
        return 0.0
    beta = tt.beta
    signs: list[int] = []
    mags: list[float] = []
    for twos, d in valid_level_indices(p.n):
        if twos == 0:
            continue
        gap = branch_gap(p, twos)
        base = p.omega_a * twos / 2.0 - p.j * (p.n - 4 * d) / 2.0
        mag = (math.log(4.0 * p.gamma * abs(twos / 2.0) / gap)
               + math.log(degeneracy(twos, d, p.n))
               - beta * base
               + log_sinh(beta * gap / 2.0))
        signs.append(1 if twos > 0 else -1)
        mags.append(mag)
    total: SignedLogReal = signed_log_sum(signs, mags)
    if total.sign == 0:
        return 0.0
    return abs(math.exp(total.log_magnitude - log_partition(p, tt)))


def ground_manifold_coherence(p: ModelParams) -> float:
    """Zero-temperature coherence: degeneracy-weighted manifold average."""
    manifold = ground_level(p)
    num = math.fsum(
        float(level.degeneracy) * 2.0 * mixing_weights(p, level.twos).cross_minus
        for level in manifold)
    den = math.fsum(float(level.degeneracy) for level in manifold)
    return abs(num) / den


def rho0(p: ModelParams, t) -> Rho0:
    """Reduced thermal state of the target.  Requires t > 0.

    Populations and the off-diagonal are accumulated over every level of
    every (twos, d) class, independently of the positive-twos reduction
    used by coherence(), so 2 |rho_ge| == coherence() is a nontrivial
    internal consistency statement.
    """
    tt = as_temperature(t)
    if tt.is_zero:
        raise ValueError("rho0 requires t > 0; use ground_manifold_coherence at t = 0")
    beta = tt.beta
    z_terms: list[float] = []
    g_terms: list[float] = []
    e_terms: list[float] = []
    cross_signs: list[int] = []
    cross_mags: list[float] = []
    for twos, d in valid_level_indices(p.n):
        w = mixing_weights(p, twos)
        log_omega = math.log(degeneracy(twos, d, p.n))
        e_minus, e_plus = energy_pair(p, twos, d)
        for log_boltz, p_ground, cross in (
                (log_omega - beta * e_minus, w.p2_minus, w.cross_minus),
                (log_omega - beta * e_plus, w.p2_plus, w.cross_plus)):
            z_terms.append(log_boltz)
            if p_ground > 0.0:
                g_terms.append(log_boltz + math.log(p_ground))
            p_excited = 1.0 - p_ground
            if p_excited > 0.0:
                e_terms.append(log_boltz + math.log(p_excited))
            if cross != 0.0:
                cross_signs.append(1 if cross > 0 else -1)
                cross_mags.append(log_boltz + math.log(abs(cross)))
    log_z = log_sum_exp(z_terms)
    rho_g = math.exp(log_sum_exp(g_terms) - log_z)
    rho_e = math.exp(log_sum_exp(e_terms) - log_z)
    off = signed_log_sum(cross_signs, cross_mags)
    rho_ge = 0.0 if off.sign == 0 else off.sign * math.exp(off.log_magnitude - log_z)
    return Rho0(rho_e=rho_e, rho_g=rho_g, rho_ge=rho_ge)


_SWEEP_VARIABLES = ("t", "j", "omega_a", "gamma", "n")


def sweep(p: ModelParams, variable: str, grid: Sequence[float], *,
          temperature: float | None = None,
          with_bounds: bool = False,
          with_asymptotics: bool = False) -> SweepResult:
    """Coherence along a grid of one variable, optional envelope columns.

    variable is one of "t", "j", "omega_a", "gamma", "n".  For every
    variable other than "t" a fixed temperature must be supplied.
    Validation failures are re-raised with the offending grid value
    named.  Points are evaluated in grid order, serially.
    """
    from . import limits  # local import, limits depends on this module

    if variable not in _SWEEP_VARIABLES:
        raise ValueError(f"unknown sweep variable {variable!r}, "
                         f"expected one of {_SWEEP_VARIABLES}")
    if variable != "t" and temperature is None:
        raise ValueError(f"sweep over {variable!r} needs a fixed temperature")
    points = []
    for value in grid:
        try:
            if variable == "t":
                pt_params, pt_t = p, as_temperature(value)
            elif variable == "n":
                pt_params, pt_t = replace(p, n=int(value)), as_temperature(temperature)
            else:
                pt_params = replace(p, **{variable: float(value)})
                pt_t = as_temperature(temperature)
            c = coherence(pt_params, pt_t)
            upper = lower = asym1 = asym2 = None
            if with_bounds:
                upper = limits.upper_bound(pt_params, pt_t)
                lower = limits.lower_bound(pt_params, pt_t)
            if with_asymptotics and not pt_t.is_zero:
                asym1 = limits.high_t_asymptotic(
                    pt_params, pt_t, include_interaction_term=False).value
                asym2 = limits.high_t_asymptotic(pt_params, pt_t).value
        except ValueError as exc:
            raise type(exc)(f"sweep point {variable}={value!r}: {exc}") from exc
        points.append(SweepPoint(value=float(value), coherence=c, upper=upper,
                                 lower=lower, asym_leading=asym1,
                                 asym_two_term=asym2))
    return SweepResult(variable=variable, points=points, params=p,
                       temperature=None if variable == "t" else float(temperature))
