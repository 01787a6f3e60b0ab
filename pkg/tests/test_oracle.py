import math

import numpy as np
import pytest

from conftest import draw_params, draw_temperature
from isingcoh.combinatorics import degeneracy, valid_level_indices
from isingcoh.model import ModelParams
from isingcoh.observables import coherence, log_partition, rho0
from isingcoh.oracle import (
    DENSE_CAP,
    DimensionTooLargeError,
    ENUM_CAP,
    NoConvergenceError,
    classify,
    dense_hamiltonian,
    dense_rho0,
    dense_spectrum,
    enum_census,
    enum_coherence,
    enum_log_partition,
    jacobi_eigh,
)
from isingcoh.spectrum import energy_pair


def four_level_rho(p: ModelParams, t: float):
    """In-test n = 1 oracle: explicit 4x4 matrix exponential via LAPACK.

    Built by hand from the two-level algebra, shares nothing with the
    package's dense assembly or its Jacobi solver.
    """
    w0, wa, g, j = p.omega0, p.omega_a, p.gamma, p.j
    # basis (t, a): index = 2 t + a, z eigenvalue +1 on a set bit
    h = np.zeros((4, 4))
    for t_bit in (0, 1):
        for a_bit in (0, 1):
            i = 2 * t_bit + a_bit
            h[i, i] = (w0 * (2 * t_bit - 1) / 2.0
                       + wa * (2 * a_bit - 1) / 2.0
                       - j / 2.0)
    for a_bit in (0, 1):
        h[2 + a_bit, a_bit] = h[a_bit, 2 + a_bit] = g * (2 * a_bit - 1) / 2.0
    w, v = np.linalg.eigh(h)
    boltz = np.exp(-(w - w.min()) / t)
    rho = (v * boltz) @ v.T / boltz.sum()
    rho_g = rho[0, 0] + rho[1, 1]
    rho_e = rho[2, 2] + rho[3, 3]
    rho_ge = rho[2, 0] + rho[3, 1]
    return rho_e, rho_g, rho_ge


# ---------------------------------------------------------------------------
# configuration classification
# ---------------------------------------------------------------------------


def test_classify_examples():
    assert classify(0b1100, 4) == (0, 1)
    assert classify(0b1010, 4) == (0, 2)
    assert classify(0b0000, 4) == (-4, 0)
    assert classify(0b1111, 4) == (4, 0)
    assert classify(0b0001, 4) == (-2, 1)
    assert classify(1, 1) == (1, 0)
    assert classify(0, 1) == (-1, 0)


def test_classify_range_checks():
    with pytest.raises(ValueError):
        classify(4, 2)
    with pytest.raises(DimensionTooLargeError):
        classify(0, 0)
    with pytest.raises(DimensionTooLargeError):
        classify(0, ENUM_CAP + 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_enum_census_matches_closed_counts(n):
    census = enum_census(n)
    expected = {(twos, d): degeneracy(twos, d, n)
                for twos, d in valid_level_indices(n)}
    assert census == expected
    assert sum(census.values()) == 2 ** n


def test_enum_census_cap():
    with pytest.raises(DimensionTooLargeError):
        enum_census(ENUM_CAP + 1)


# ---------------------------------------------------------------------------
# enumeration thermodynamics
# ---------------------------------------------------------------------------


def test_enum_agrees_with_closed_forms():
    rng = np.random.default_rng(41)
    for _ in range(20):
        p = draw_params(rng, n_max=8)
        t = draw_temperature(rng)
        assert enum_log_partition(p, t) == pytest.approx(log_partition(p, t),
                                                         abs=1e-12)
        assert enum_coherence(p, t) == pytest.approx(coherence(p, t), abs=1e-13)


def test_enum_rejects_zero_temperature():
    p = ModelParams(omega0=10.0, omega_a=2.0, gamma=3.0, j=4.0, n=4)
    with pytest.raises(ValueError):
        enum_log_partition(p, 0.0)
    with pytest.raises(ValueError):
        enum_coherence(p, 0.0)


def test_enum_rejects_oversized_ring():
    p = ModelParams(omega0=10.0, omega_a=2.0, gamma=3.0, j=4.0, n=ENUM_CAP + 1)
    with pytest.raises(DimensionTooLargeError):
        enum_coherence(p, 1.0)


def test_single_site_against_explicit_four_level_matrix():
    rng = np.random.default_rng(42)
    for _ in range(20):
        p = draw_params(rng, n_max=1)
        t = draw_temperature(rng, lo=0.2, hi=50.0)
        rho_e, rho_g, rho_ge = four_level_rho(p, t)
        closed = rho0(p, t)
        assert closed.rho_e == pytest.approx(rho_e, abs=1e-13)
        assert closed.rho_g == pytest.approx(rho_g, abs=1e-13)
        assert abs(closed.rho_ge) == pytest.approx(abs(rho_ge), abs=1e-13)
        assert enum_coherence(p, t) == pytest.approx(2.0 * abs(rho_ge), abs=1e-13)
        dense = dense_rho0(p, t)
        assert dense.rho_e == pytest.approx(rho_e, abs=1e-11)
        assert abs(dense.rho_ge) == pytest.approx(abs(rho_ge), abs=1e-11)


# ---------------------------------------------------------------------------
# dense Hamiltonian
# ---------------------------------------------------------------------------


def test_dense_hamiltonian_frozen_two_site():
    p = ModelParams(omega0=2.0, omega_a=3.0, gamma=5.0, j=7.0, n=2)
    h = dense_hamiltonian(p)
    assert h.shape == (8, 8)
    np.testing.assert_allclose(h, h.T)
    # ring diagonal: a = 00, 01, 10, 11 -> twos -2, 0, 0, 2; d = 0, 1, 1, 0
    np.testing.assert_allclose(np.diag(h), [-11.0, 6.0, 6.0, -5.0,
                                            -9.0, 8.0, 8.0, -3.0])
    np.testing.assert_allclose(h[4:, :4], np.diag([-5.0, 0.0, 0.0, 5.0]))


def test_dense_hamiltonian_traceless_for_multi_site():
    p = ModelParams(omega0=9.0, omega_a=2.5, gamma=1.0, j=-3.0, n=3)
    assert np.trace(dense_hamiltonian(p)) == pytest.approx(0.0, abs=1e-12)


def test_dense_hamiltonian_single_site_decoupled_levels():
    p = ModelParams(omega0=6.0, omega_a=4.0, gamma=0.0, j=2.0, n=1)
    w = np.sort(np.diag(dense_hamiltonian(p)))
    expected = np.sort([s0 * 3.0 + s1 * 2.0 - 1.0 for s0 in (-1, 1) for s1 in (-1, 1)])
    np.testing.assert_allclose(w, expected)


def test_dense_hamiltonian_cap():
    p = ModelParams(omega0=10.0, omega_a=2.0, gamma=3.0, j=4.0, n=DENSE_CAP + 1)
    with pytest.raises(DimensionTooLargeError):
        dense_hamiltonian(p)


# ---------------------------------------------------------------------------
# Jacobi eigensolver
# ---------------------------------------------------------------------------


def test_jacobi_diagonal_passthrough():
    w, v = jacobi_eigh(np.diag([3.0, -1.0, 2.0]))
    np.testing.assert_allclose(w, [-1.0, 2.0, 3.0])
    np.testing.assert_allclose(np.abs(v), np.eye(3)[:, [1, 2, 0]])


def test_jacobi_two_by_two():
    w, v = jacobi_eigh(np.array([[1.0, 0.5], [0.5, 1.0]]))
    np.testing.assert_allclose(w, [0.5, 1.5], atol=1e-14)
    np.testing.assert_allclose(np.abs(v), np.full((2, 2), math.sqrt(0.5)),
                               atol=1e-14)


def test_jacobi_zero_matrix():
    w, v = jacobi_eigh(np.zeros((4, 4)))
    np.testing.assert_allclose(w, np.zeros(4))
    np.testing.assert_allclose(v, np.eye(4))


def test_jacobi_random_dense():
    rng = np.random.default_rng(43)
    m = rng.standard_normal((64, 64))
    m = 0.5 * (m + m.T)
    norm = np.linalg.norm(m)
    w, v = jacobi_eigh(m)
    assert np.all(np.diff(w) >= 0.0)
    np.testing.assert_allclose(v @ np.diag(w) @ v.T, m, atol=1e-10 * norm)
    np.testing.assert_allclose(v.T @ v, np.eye(64), atol=1e-12)
    # column-by-column residual, not just the global reconstruction
    residual = m @ v - v * w
    assert np.abs(residual).max() <= 1e-10 * norm
    np.testing.assert_allclose(w, np.linalg.eigvalsh(m), atol=1e-10 * norm)


def test_jacobi_input_validation():
    with pytest.raises(ValueError):
        jacobi_eigh(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        jacobi_eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_jacobi_reports_nonconvergence():
    rng = np.random.default_rng(44)
    m = rng.standard_normal((16, 16))
    m = 0.5 * (m + m.T)
    with pytest.raises(NoConvergenceError):
        jacobi_eigh(m, max_sweeps=0)


def test_jacobi_does_not_mutate_input():
    m = np.array([[1.0, 0.5], [0.5, 1.0]])
    keep = m.copy()
    jacobi_eigh(m)
    np.testing.assert_array_equal(m, keep)


# ---------------------------------------------------------------------------
# dense spectra and states
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dense_spectrum_matches_analytic_multiset(n):
    p = ModelParams(omega0=4.5, omega_a=1.7, gamma=2.2, j=-1.1, n=n)
    analytic = []
    for twos, d in valid_level_indices(n):
        lo, hi = energy_pair(p, twos, d)
        analytic.extend([lo] * degeneracy(twos, d, n))
        analytic.extend([hi] * degeneracy(twos, d, n))
    w, _ = dense_spectrum(p)
    np.testing.assert_allclose(w, np.sort(analytic), atol=1e-10)


def test_dense_rho0_matches_closed_form():
    rng = np.random.default_rng(45)
    for _ in range(10):
        p = draw_params(rng, n_max=5)
        t = draw_temperature(rng, lo=0.2, hi=100.0)
        dense = dense_rho0(p, t)
        closed = rho0(p, t)
        assert dense.rho_e == pytest.approx(closed.rho_e, abs=1e-8)
        assert dense.rho_g == pytest.approx(closed.rho_g, abs=1e-8)
        assert dense.rho_ge == pytest.approx(closed.rho_ge, abs=1e-8)


def test_dense_rho0_infinite_temperature_is_maximally_mixed():
    p = ModelParams(omega0=10.0, omega_a=2.0, gamma=3.0, j=4.0, n=3)
    out = dense_rho0(p, 1e9)
    assert out.rho_e == pytest.approx(0.5, abs=1e-8)
    assert out.rho_g == pytest.approx(0.5, abs=1e-8)
    assert out.rho_ge == pytest.approx(0.0, abs=1e-8)


def test_dense_rho0_rejects_zero_temperature():
    p = ModelParams(omega0=10.0, omega_a=2.0, gamma=3.0, j=4.0, n=2)
    with pytest.raises(ValueError):
        dense_rho0(p, 0.0)


def test_three_routes_agree_on_log_partition():
    p = ModelParams(omega0=3.0, omega_a=1.0, gamma=1.5, j=0.8, n=4)
    t = 1.7
    via_closed = log_partition(p, t)
    via_enum = enum_log_partition(p, t)
    w, _ = dense_spectrum(p)
    shifted = -(w - w.min()) / t
    via_dense = math.log(np.exp(shifted).sum()) - w.min() / t
    assert via_enum == pytest.approx(via_closed, abs=1e-12)
    assert via_dense == pytest.approx(via_closed, abs=1e-10)
