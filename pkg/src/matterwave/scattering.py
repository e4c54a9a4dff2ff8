"""Step and multilayer scattering in the Maxwell and de Broglie conventions.

Both conventions describe the same physical flux of particles hitting the
same potential landscape, so they must (and do) predict identical flux
reflectance and transmittance; the amplitudes differ.  The transfer matrix
uses each convention's indices in the interface (Fresnel) factors while
the propagation phase across a layer is the physical transit phase of the
particle wave, q(U)*d with q(U) = sqrt(2m(E-U))/hbar continued to positive
imaginary values inside barriers.  An independent Numerov integration of
the stationary Schrodinger equation serves as the oracle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import GridResolutionError, OpacityError, SingularPotentialError
from .mode import MatterWaveMode

MAXWELL = "maxwell"
DEBROGLIE = "debroglie"

_SINGULAR_RTOL = 1e-12
_OPACITY_LIMIT = 700.0  # log-scale cap before exp() overflows


def _check_convention(convention: str) -> str:
    if convention not in (MAXWELL, DEBROGLIE):
        raise ValueError("unknown convention %r" % (convention,))
    return convention


@dataclass(frozen=True)
class GeneralizedIndex:
    """Refractive index of a constant-potential region, per convention.

    Propagating regions have a real positive value; evanescent regions
    (U above the particle energy) carry a purely imaginary value with
    positive imaginary part, the decaying branch.
    """

    value: complex
    evanescent: bool

    @property
    def propagating(self) -> bool:
        return not self.evanescent


@dataclass(frozen=True)
class Layer:
    potential: float  # J
    length: float     # m

    def __post_init__(self):
        if not self.length > 0:
            raise ValueError("layer length must be positive")
        if not math.isfinite(self.potential):
            raise ValueError("layer potential must be finite")


@dataclass(frozen=True)
class LayerStack:
    """Incident region at U = 0, finite layers, then a semi-infinite exit."""

    layers: tuple = ()
    exit_potential: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if not math.isfinite(self.exit_potential):
            raise ValueError("exit potential must be finite")

    def reversed(self) -> "LayerStack":
        return LayerStack(layers=tuple(reversed(self.layers)),
                          exit_potential=self.exit_potential)


@dataclass(frozen=True)
class ScatterResult:
    r: complex
    t: complex
    R: float
    T: float
    convention: str


def generalized_index(mode: MatterWaveMode, U: float, convention: str = MAXWELL) -> GeneralizedIndex:
    """n(U) = n * (1 - U/(hbar*omega_v))^(-1/2), or its reciprocal convention.

    U equal to the particle energy is a hard error: the index diverges and
    behavior there is undefined.
    """
    _check_convention(convention)
    energy = mode.hbar * mode.omega_v
    ratio = U / energy
    if abs(1.0 - ratio) <= _SINGULAR_RTOL:
        raise SingularPotentialError(
            "potential U = %.17g J equals the particle energy: index singular" % U)
    if ratio < 1.0:
        value = mode.n / math.sqrt(1.0 - ratio)
        evanescent = False
    else:
        value = 1j * mode.n / math.sqrt(ratio - 1.0)
        evanescent = True
    if convention == DEBROGLIE:
        # reciprocal index; evanescent branch keeps the decaying (positive
        # imaginary) sign rather than literal 1/value
        value = 1.0 / value if not evanescent else 1j / abs(value)
    return GeneralizedIndex(value=value, evanescent=evanescent)


def _amplitude_pair(eta1: complex, eta2: complex):
    r = (eta1 - eta2) / (eta1 + eta2)
    t = 2.0 * eta1 / (eta1 + eta2)
    return r, t


def step_coefficients(n1: GeneralizedIndex, n2: GeneralizedIndex,
                      convention: str = MAXWELL) -> ScatterResult:
    """Fresnel amplitudes and flux R, T for a single interface.

    The flux transmittance carries the standard index weight
    T = Re(n2)/n1 * |t|^2, which makes both conventions agree and keeps
    R + T = 1; |t|^2 alone is available from the amplitude.
    """
    _check_convention(convention)
    if n1.evanescent:
        raise ValueError("incident-side index must be propagating")
    r, t = _amplitude_pair(n1.value, n2.value)
    R = abs(r) ** 2
    if n2.evanescent:
        T = 0.0
    else:
        T = (n2.value.real / n1.value.real) * abs(t) ** 2
    return ScatterResult(r=r, t=t, R=R, T=T, convention=convention)


def _region_potentials(stack: LayerStack):
    return [0.0] + [layer.potential for layer in stack.layers] + [stack.exit_potential]


def transfer_matrix(stack: LayerStack, mode: MatterWaveMode,
                    convention: str = MAXWELL) -> ScatterResult:
    """Compose interface and propagation matrices across the stack.

    Finite layers may be evanescent (tunneling); incident and exit regions
    must be propagating for flux accounting.  Interface factors use the
    convention's indices; the propagation phase is the particle transit
    phase q(U)*length shared by both conventions, which is what makes
    their fluxes identical and equal to the Schrodinger result.
    """
    _check_convention(convention)
    potentials = _region_potentials(stack)
    indices = [generalized_index(mode, U, convention) for U in potentials]
    if indices[0].evanescent or indices[-1].evanescent:
        raise ValueError("incident and exit regions must be propagating")

    # physical per-region wavenumber, positive imaginary inside barriers
    energy = mode.hbar * mode.omega_v
    qs = [mode.k_v * cmath.sqrt(complex(1.0 - U / energy)) for U in potentials]

    opacity = sum(abs(q.imag) * layer.length
                  for q, layer in zip(qs[1:-1], stack.layers))
    if opacity > _OPACITY_LIMIT:
        raise OpacityError(
            "tunneling product saturates double precision: sum kappa*L = %.3g" % opacity)

    M = np.eye(2, dtype=complex)
    for i in range(len(potentials) - 1):
        r, t = _amplitude_pair(indices[i].value, indices[i + 1].value)
        M = M @ (np.array([[1.0, r], [r, 1.0]], dtype=complex) / t)
        if i + 1 < len(potentials) - 1:
            phi = qs[i + 1] * stack.layers[i].length
            M = M @ np.array([[cmath.exp(-1j * phi), 0.0],
                              [0.0, cmath.exp(1j * phi)]])
    r_tot = M[1, 0] / M[0, 0]
    t_tot = 1.0 / M[0, 0]
    R = abs(r_tot) ** 2
    T = (indices[-1].value.real / indices[0].value.real) * abs(t_tot) ** 2
    return ScatterResult(r=r_tot, t=t_tot, R=R, T=T, convention=convention)


# --- independent Schrodinger oracle --------------------------------------

# one-sided 7-point first-derivative stencil, O(h^6)
_D7 = np.array([-49 / 20, 6.0, -15 / 2, 20 / 3, -15 / 4, 6 / 5, -1 / 6])


def _numerov_region_backward(psi_right: complex, dpsi_right: complex,
                             f: float, length: float, h_max: float):
    """March psi'' = f*psi from the right edge to the left edge of a region.

    Returns (psi_left, dpsi_left).  f is constant within the region.
    """
    n_steps = max(int(math.ceil(length / h_max)), 20)
    h = length / n_steps
    sig = h * h * f
    # 6th-order Taylor starter for the second seed, using psi'' = f*psi
    psi_prev = (psi_right * (1.0 + sig / 2 + sig * sig / 24 + sig ** 3 / 720)
                - h * dpsi_right * (1.0 + sig / 6 + sig * sig / 120))
    psis = np.empty(n_steps + 1, dtype=complex)
    psis[n_steps] = psi_right
    psis[n_steps - 1] = psi_prev
    a = 2.0 * (1.0 + 5.0 * sig / 12) / (1.0 - sig / 12)
    for idx in range(n_steps - 1, 0, -1):
        psis[idx - 1] = a * psis[idx] - psis[idx + 1]
    dpsi_left = np.dot(_D7, psis[:7]) / h
    return psis[0], dpsi_left


def numerov_oracle(stack: LayerStack, mode: MatterWaveMode,
                   points_per_wavelength: int = 400,
                   pad_wavelengths: float = 2.0) -> dict:
    """Flux R, T from a Numerov integration of the Schrodinger equation.

    Integrates backward from a unit-amplitude outgoing wave in the exit
    region, through the layers and an incident-side matching pad, then
    projects onto incoming/outgoing plane waves.  Requires grid spacing
    of at most lambda_min/50 (points_per_wavelength >= 50).
    """
    if points_per_wavelength < 50:
        raise GridResolutionError(
            "grid must resolve the shortest wavelength to at least 1/50")
    m = mode.species.mass
    hbar = mode.hbar
    energy = hbar * mode.omega_v
    potentials = _region_potentials(stack)
    if stack.exit_potential >= energy:
        raise ValueError("exit region must be propagating")

    def f_of(U):
        return 2.0 * m * (U - energy) / hbar ** 2

    k_in = math.sqrt(2.0 * m * energy) / hbar
    q_exit = math.sqrt(2.0 * m * (energy - stack.exit_potential)) / hbar
    x_exit = sum(layer.length for layer in stack.layers)

    def h_max_for(f, length):
        scale = 2.0 * math.pi / math.sqrt(abs(f)) if f != 0.0 else length
        return min(scale / points_per_wavelength, length / 20.0)

    psi = cmath.exp(1j * q_exit * x_exit)
    dpsi = 1j * q_exit * psi
    for layer in reversed(stack.layers):
        f = f_of(layer.potential)
        psi, dpsi = _numerov_region_backward(psi, dpsi, f, layer.length,
                                             h_max_for(f, layer.length))
    pad = pad_wavelengths * 2.0 * math.pi / k_in
    f0 = f_of(0.0)
    psi, dpsi = _numerov_region_backward(psi, dpsi, f0, pad, h_max_for(f0, pad))
    x_match = -pad
    A_in = 0.5 * (psi + dpsi / (1j * k_in)) * cmath.exp(-1j * k_in * x_match)
    B_in = 0.5 * (psi - dpsi / (1j * k_in)) * cmath.exp(1j * k_in * x_match)
    R = abs(B_in / A_in) ** 2
    T = (q_exit / k_in) * abs(1.0 / A_in) ** 2
    return {"R": R, "T": T}
