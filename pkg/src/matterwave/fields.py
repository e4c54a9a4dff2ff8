"""Plane-wave matter fields F, G, A and their wave-equation verification.

The fields are stored as amplitude plus the phase convention
F(x,t) = F0*sin(k*x - omega0*t); sampling onto grids happens only inside
the residual check and the CLI scan output.  The scalar 1-D pairing fixes
G0 = (k/omega0)*F0 = k*A0 so the first-order (telegrapher-form) pair and
the second-order wave equation hold together.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridResolutionError
from .mode import MatterWaveMode, MediumConstants


@dataclass(frozen=True)
class PlaneWaveField:
    A0: float      # m/s, vector-potential amplitude
    F0: float      # m/s^2
    G0: float      # 1/s
    k: float       # 1/m
    omega0: float  # rad/s


@dataclass(frozen=True)
class FieldSample:
    A: np.ndarray | float
    F: np.ndarray | float
    G: np.ndarray | float


@dataclass(frozen=True)
class ResidualReport:
    """Max normalized residuals of the wave equation and the first-order pair."""

    wave_equation: float
    telegrapher_pair: float


def fields_from_potential(A0: float, mode: MatterWaveMode) -> PlaneWaveField:
    """Field amplitudes driven by a vector potential of amplitude A0 >= 0."""
    if A0 < 0:
        raise ValueError("A0 must be non-negative")
    return PlaneWaveField(A0=A0, F0=mode.omega0 * A0, G0=mode.k * A0,
                          k=mode.k, omega0=mode.omega0)


def evaluate(field: PlaneWaveField, x, t) -> FieldSample:
    """Sample A, F, G at (x, t); accepts scalars or numpy arrays."""
    phase = field.k * np.asarray(x) - field.omega0 * np.asarray(t)
    return FieldSample(A=field.A0 * np.cos(phase),
                       F=field.F0 * np.sin(phase),
                       G=field.G0 * np.sin(phase))


def wave_equation_residual(field: PlaneWaveField, medium: MediumConstants,
                           x_span: float, t_span: float,
                           nx: int, nt: int) -> ResidualReport:
    """Centered-finite-difference check of d2F/dt2 = (1/(upsilon*xi)) d2F/dx2.

    Returns the max interior residual normalized by omega0^2*F0, together
    with the residual of the first-order pair dF/dx = -dG/dt and
    dG/dx = -upsilon*xi*dF/dt normalized by k*F0.
    """
    if nx < 4 or nt < 4:
        raise GridResolutionError("need at least 4 points per axis")
    if not (x_span > 0 and t_span > 0):
        raise GridResolutionError("grid spans must be positive")
    if field.A0 == 0.0:
        return ResidualReport(0.0, 0.0)
    x = np.linspace(0.0, x_span, nx)
    t = np.linspace(0.0, t_span, nt)
    hx = x[1] - x[0]
    ht = t[1] - t[0]
    X, T = np.meshgrid(x, t, indexing="ij")
    phase = field.k * X - field.omega0 * T
    F = field.F0 * np.sin(phase)
    G = field.G0 * np.sin(phase)
    ux = medium.upsilon * medium.xi  # 1/v_a^2 for a consistent pair

    Ftt = (F[:, 2:] - 2.0 * F[:, 1:-1] + F[:, :-2]) / ht**2
    Fxx = (F[2:, :] - 2.0 * F[1:-1, :] + F[:-2, :]) / hx**2
    wave_res = Ftt[1:-1, :] - Fxx[:, 1:-1] / ux
    wave_max = float(np.max(np.abs(wave_res))) / (field.omega0**2 * field.F0)

    Fx = (F[2:, :] - F[:-2, :]) / (2.0 * hx)
    Ft = (F[:, 2:] - F[:, :-2]) / (2.0 * ht)
    Gx = (G[2:, :] - G[:-2, :]) / (2.0 * hx)
    Gt = (G[:, 2:] - G[:, :-2]) / (2.0 * ht)
    pair1 = (Fx[:, 1:-1] + Gt[1:-1, :]) / (field.k * field.F0)
    pair2 = (Gx[:, 1:-1] + ux * Ft[1:-1, :]) / (field.k * field.G0)
    pair_max = max(float(np.max(np.abs(pair1))),
                   float(np.max(np.abs(pair2))))
    return ResidualReport(wave_equation=wave_max, telegrapher_pair=pair_max)
