import math

import pytest
from hypothesis import given, strategies as st

from isingcoh.model import (
    ModelParams,
    N_CAP,
    NegativeCouplingError,
    NonPositiveGapError,
    NTooLargeError,
    NZeroError,
    Temperature,
    as_temperature,
    validate,
)


def test_valid_params_construct():
    p = ModelParams(omega0=10.0, omega_a=2.0, gamma=3.0, j=4.0, n=8)
    assert p.n == 8
    assert validate(p) is p


def test_validate_is_idempotent():
    p = ModelParams(omega0=1.0, omega_a=1.0, gamma=0.0, j=-2.0, n=3)
    assert validate(validate(p)) is p


@pytest.mark.parametrize("kwargs, err", [
    (dict(omega0=0.0), NonPositiveGapError),
    (dict(omega0=-1.0), NonPositiveGapError),
    (dict(omega_a=0.0), NonPositiveGapError),
    (dict(omega_a=-0.5), NonPositiveGapError),
    (dict(gamma=-1e-9), NegativeCouplingError),
    (dict(n=0), NZeroError),
    (dict(n=-2), NZeroError),
    (dict(n=N_CAP + 1), NTooLargeError),
    (dict(j=math.nan), ValueError),
    (dict(omega0=math.inf), ValueError),
    (dict(n=2.5), ValueError),
])
def test_invalid_params_raise(kwargs, err):
    base = dict(omega0=10.0, omega_a=2.0, gamma=3.0, j=4.0, n=8)
    base.update(kwargs)
    with pytest.raises(err):
        ModelParams(**base)


def test_gamma_zero_and_negative_j_are_legal():
    ModelParams(omega0=1.0, omega_a=1.0, gamma=0.0, j=-100.0, n=2)


def test_n_cap_boundary():
    ModelParams(omega0=1.0, omega_a=1.0, gamma=1.0, j=0.0, n=N_CAP)
    with pytest.raises(NTooLargeError):
        ModelParams(omega0=1.0, omega_a=1.0, gamma=1.0, j=0.0, n=N_CAP + 1)


def test_temperature_zero_is_first_class():
    t = Temperature(0.0)
    assert t.is_zero
    with pytest.raises(ValueError):
        _ = t.beta


def test_temperature_beta():
    assert Temperature(2.0).beta == 0.5
    assert not Temperature(2.0).is_zero


@pytest.mark.parametrize("bad", [-1.0, -1e-300, math.nan, math.inf])
def test_temperature_rejects_bad_values(bad):
    with pytest.raises(ValueError):
        Temperature(bad)


def test_as_temperature_coerces():
    assert as_temperature(3.0).t == 3.0
    t = Temperature(1.5)
    assert as_temperature(t) is t


@given(
    omega0=st.floats(1e-3, 1e3),
    omega_a=st.floats(1e-3, 1e3),
    gamma=st.floats(0.0, 1e3),
    j=st.floats(-1e3, 1e3),
    n=st.integers(1, N_CAP),
)
def test_any_in_range_params_validate(omega0, omega_a, gamma, j, n):
    p = ModelParams(omega0=omega0, omega_a=omega_a, gamma=gamma, j=j, n=n)
    assert validate(p) is p
