"""Wavepackets: shapes, truncation, and analytic free-particle moments."""

import math

import numpy as np
import pytest

from clocksim.dynamics import evolve_subspace
from clocksim.hamiltonian import subspace_operator
from clocksim.metrics import chain_position_moments
from clocksim.packets import (
    GaussianParams,
    analytic_gaussian_moments,
    cosine_profile,
    make_cosine_packet,
    make_gaussian,
)


def test_gaussian_is_normalized_and_centered():
    params = GaussianParams(sigma=0.05, x0=0.2, p0=240.0, cutoff=4.0)
    psi = make_gaussian(500, params)
    assert abs(np.linalg.norm(psi) - 1) < 1e-12
    mean, std = chain_position_moments(psi)
    assert abs(mean / 500 - 0.2) < 1e-3
    # density std is the amplitude width over sqrt(2)
    assert abs(std / 500 - 0.05 / math.sqrt(2)) < 1e-3


def test_gaussian_truncation():
    params = GaussianParams(sigma=0.05, x0=0.2, p0=0.0, cutoff=4.0)
    psi = make_gaussian(1000, params)
    sites = np.flatnonzero(np.abs(psi))
    assert sites.min() >= 0 and sites.max() <= 400  # support within x0 +- 4 sigma
    # mild truncation barely changes the state
    loose = make_gaussian(1000, GaussianParams(sigma=0.04, x0=0.2, p0=0.0, cutoff=0.0))
    tight = make_gaussian(1000, GaussianParams(sigma=0.04, x0=0.2, p0=0.0, cutoff=4.0))
    assert abs(np.vdot(loose, tight)) >= 1 - 1e-4


def test_gaussian_window_validation():
    with pytest.raises(ValueError):
        GaussianParams(sigma=0.1, x0=0.2, p0=0.0, cutoff=4.0)  # window exits [0, 1]
    with pytest.raises(ValueError):
        GaussianParams(sigma=-0.1)


def test_cosine_profile_shape():
    u = np.linspace(0, 1, 301)
    w = cosine_profile(u)
    assert np.all(w[u > 1 / 3] == 0)
    assert w[0] == 0
    assert abs(w[np.argmin(np.abs(u - 1 / 6))] - 2 * math.sqrt(2)) < 1e-6
    # unit L2 norm of the continuum profile
    assert abs(np.trapezoid(w**2, u) - 1.0) < 1e-3


def test_cosine_packet_structure():
    g = 600
    psi = make_cosine_packet(g)
    assert len(psi) == g + 2
    assert abs(np.linalg.norm(psi) - 1) < 1e-12
    # the two sublattices carry the same profile, in quadrature
    assert np.allclose(psi[1::2], 1j * psi[0::2])
    # support confined to the first third of the chain
    assert np.all(np.abs(psi[g // 3 + 2 :]) == 0)
    with pytest.raises(ValueError):
        make_cosine_packet(601)
    with pytest.raises(ValueError):
        make_cosine_packet(8)


def test_analytic_moments_examples():
    params = GaussianParams(sigma=0.05, x0=0.2, p0=240.0, cutoff=4.0)
    g = 500
    m0 = analytic_gaussian_moments(params, g, 0.0)
    assert (m0.center, m0.width) == (0.2, 0.05)
    assert m0.mass == g**2 / 2
    # at t = m sigma^2 the width has grown by sqrt(2)
    t = m0.mass * params.sigma**2
    assert abs(analytic_gaussian_moments(params, g, t).width - 0.05 * math.sqrt(2)) < 1e-12
    # the standard duration carries the center from 1/5 to 4/5
    T = 3 * g**2 / (10 * params.p0)
    mt = analytic_gaussian_moments(params, g, T)
    assert abs(mt.center - 0.8) < 1e-12
    assert abs(mt.width - math.sqrt(2) / 20) < 1e-12


def test_moments_match_simulation():
    """Low-momentum packet on a long chain follows the free-particle law."""
    g = 1000
    params = GaussianParams(sigma=0.05, x0=0.2, p0=60.0, cutoff=4.0)
    op = subspace_operator("fk", g)
    psi0 = make_gaussian(g, params)
    T = 3 * g**2 / (10 * params.p0)
    traj = evolve_subspace(op, psi0, T, samples=9)
    # probe mid-flight, before the spreading tails reach the chain boundary
    for k in (2, 4):
        ref = analytic_gaussian_moments(params, g, float(traj.times[k]))
        mean, std = chain_position_moments(traj.states[k])
        assert abs(mean / g - ref.center) < 2.0 / g * 10
        # measured density std times sqrt(2) approximates the amplitude width
        assert abs(std / g * math.sqrt(2) - ref.width) / ref.width < 0.05


def test_cosine_packet_translates_rigidly():
    """On the linear-dispersion chain the packet shifts without spreading."""
    g = 1200
    op = subspace_operator("lin", g)
    psi0 = make_cosine_packet(g)
    t = g // 8  # integer shift: 2 chain sites per unit time
    traj = evolve_subspace(op, psi0, float(t), samples=2)
    shifted = np.zeros_like(psi0)
    shifted[2 * t :] = psi0[: len(psi0) - 2 * t]
    overlap = abs(np.vdot(shifted, traj.states[-1]))
    assert overlap > 0.995
