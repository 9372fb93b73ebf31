"""Broad clock wavepackets and their analytic free-particle moments.

Packets are expressed on the history chain of a clock Hamiltonian: an
array of complex amplitudes, one per chain site, normalized to unit
2-norm.  Positions are measured in units of the chain length, so packet
shapes are scale-invariant as the gate count grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GaussianParams:
    """Gaussian packet in scaled coordinates u = x / G on [0, 1].

    ``sigma`` is the amplitude width, ``x0`` the initial center, ``p0``
    the momentum in scaled units, and ``cutoff`` the truncation radius in
    units of ``sigma`` (0 disables truncation).
    """

    sigma: float = 0.05
    x0: float = 0.2
    p0: float = 240.0
    cutoff: float = 4.0

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        if self.cutoff < 0:
            raise ValueError("cutoff must be non-negative")
        if self.cutoff > 0:
            lo = self.x0 - self.cutoff * self.sigma
            hi = self.x0 + self.cutoff * self.sigma
            if lo < 0 or hi > 1:
                raise ValueError(
                    f"truncation window [{lo:.3f}, {hi:.3f}] leaves [0, 1]"
                )


def make_gaussian(g: int, params: GaussianParams) -> np.ndarray:
    """Gaussian history-chain packet on the g + 1 sites of an fk chain."""
    if g < 1:
        raise ValueError("need at least one gate")
    u = np.arange(g + 1) / g
    amp = np.exp(
        -((u - params.x0) ** 2) / (2 * params.sigma**2) + 1j * params.p0 * u
    )
    if params.cutoff > 0:
        amp[np.abs(u - params.x0) > params.cutoff * params.sigma] = 0.0
    norm = np.linalg.norm(amp)
    if norm == 0:
        raise ValueError("packet vanished after truncation")
    return amp / norm


def cosine_profile(u) -> np.ndarray:
    """sqrt(2) (1 - cos 6 pi u) on [0, 1/3], zero elsewhere."""
    u = np.asarray(u, dtype=float)
    w = np.where(
        (u >= 0) & (u <= 1.0 / 3.0),
        math.sqrt(2.0) * (1.0 - np.cos(6.0 * np.pi * u)),
        0.0,
    )
    return w


def make_cosine_packet(g: int) -> np.ndarray:
    """Smooth right-moving packet on the g + 2 chain sites of a lin chain.

    Sites alternate (Phi_0, Psi_0, Phi_1, Psi_1, ...); both sublattices
    carry the cosine profile sampled at x / (g / 2), with the Psi
    amplitudes exactly i times the Phi amplitudes so the packet rides the
    right-moving branch of the dispersion.  Requires g divisible by 6 so
    the profile support covers an integer number of sites.
    """
    if g < 6 or g % 6 != 0:
        raise ValueError(f"gate count must be a positive multiple of 6, got {g}")
    half = g // 2
    x = np.arange(half + 1)
    w = cosine_profile(x / half)
    amp = np.zeros(g + 2, dtype=complex)
    amp[0::2] = w
    amp[1::2] = 1j * w
    return amp / np.linalg.norm(amp)


@dataclass(frozen=True)
class GaussianMoments:
    """Free-particle center and amplitude width in scaled coordinates."""

    center: float
    width: float
    mass: float


def analytic_gaussian_moments(params: GaussianParams, g: int, t: float) -> GaussianMoments:
    """Ballistic spreading of a Gaussian on the quadratic-dispersion chain.

    Near the band bottom the chain behaves as a free particle of mass
    m = g^2 / 2 in scaled coordinates: the center drifts at p0 / m and
    the amplitude width grows as sqrt(sigma^2 + (t / (m sigma))^2).
    """
    m = g**2 / 2.0
    center = params.x0 + params.p0 * t / m
    width = math.sqrt(params.sigma**2 + (t / (m * params.sigma)) ** 2)
    return GaussianMoments(center=center, width=width, mass=m)
