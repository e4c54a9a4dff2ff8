"""Matter-wave modes and their derived analog-optics quantities.

A mode is fixed by (species, drive frequency omega0, particle velocity or
energy).  Everything else -- refractive index, wavenumbers, impedance,
wave velocity, permeability/permittivity analogs -- is computed once at
construction and frozen, so a mode can never be observed in a partially
updated state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quantities import CONSTANTS, ParticleSpecies, PhysicalConstants


@dataclass(frozen=True)
class MatterWaveMode:
    """A single mode of the matter-wave field with all derived quantities.

    n = sqrt(omega0/omega_v) plays the role of a refractive index.
    The Maxwell wavenumber is k = n*k0, the de Broglie wavenumber
    k_v = (2/n)*k0, and the dispersion k*v_v = omega0 holds exactly.
    """

    species: ParticleSpecies
    omega0: float      # rad/s, drive (matteron) frequency
    omega_v: float     # rad/s, particle vacuum frequency
    hbar: float
    n: float           # refractive index
    k0: float          # 1/m
    k: float           # 1/m, Maxwell wavenumber
    k_v: float         # 1/m, de Broglie wavenumber
    Z0: float          # m^2/(kg s), natural impedance
    Z: float           # m^2/(kg s), characteristic impedance
    v0: float          # m/s
    v_a: float         # m/s, wave (phase) velocity
    v_v: float         # m/s, particle group velocity


@dataclass(frozen=True)
class MediumConstants:
    """Permeability/permittivity analogs of the medium carrying a mode."""

    upsilon0: float  # m/kg
    upsilon: float   # m/kg, n^3 * upsilon0
    xi0: float       # kg s^2/m^3
    xi: float        # kg s^2/m^3, xi0/n


@dataclass(frozen=True)
class WaveAmplitudes:
    """Current/potential wave amplitudes for a given particle flux."""

    current0: float    # kg/s
    potential0: float  # m^2/s^2
    flux: float        # particles/s


@dataclass(frozen=True)
class Matteron:
    """Field quantum of a mode: energy hbar*omega0, momentum hbar*k."""

    energy: float    # J
    momentum: float  # kg m/s


def make_mode(species: ParticleSpecies, omega0: float, velocity: float | None = None,
              energy: float | None = None,
              constants: PhysicalConstants = CONSTANTS) -> MatterWaveMode:
    """Build a mode from the drive frequency and the particle velocity or energy.

    Exactly one of ``velocity`` (m/s) or ``energy`` (J) must be given; both
    map to the vacuum frequency omega_v.
    """
    if (velocity is None) == (energy is None):
        raise ValueError("give exactly one of velocity or energy")
    if not omega0 > 0:
        raise ValueError("omega0 must be positive")
    hbar = constants.hbar
    m = species.mass
    if velocity is not None:
        if not velocity > 0:
            raise ValueError("particle velocity must be positive")
        omega_v = m * velocity**2 / (2.0 * hbar)
        v_v = velocity
    else:
        if not energy > 0:
            raise ValueError("particle energy must be positive")
        omega_v = energy / hbar
        v_v = math.sqrt(2.0 * hbar * omega_v / m)
    if omega_v == 0.0:
        raise ValueError("particle energy below numerical floor")
    n = math.sqrt(omega0 / omega_v)
    Z0 = hbar / m**2
    k0 = math.sqrt(omega0 / (2.0 * m * Z0))
    v0 = math.sqrt(2.0 * m * omega0 * Z0)
    return MatterWaveMode(
        species=species,
        omega0=omega0,
        omega_v=omega_v,
        hbar=hbar,
        n=n,
        k0=k0,
        k=n * k0,
        k_v=2.0 * k0 / n,
        Z0=Z0,
        Z=n**2 * Z0,
        v0=v0,
        v_a=v0 / n,
        v_v=v_v,
    )


def medium_constants(mode: MatterWaveMode) -> MediumConstants:
    """Permeability/permittivity analogs; 1/sqrt(upsilon*xi) equals v_a."""
    m = mode.species.mass
    upsilon0 = math.sqrt(mode.Z0 / (2.0 * m * mode.omega0))
    xi0 = 1.0 / (mode.Z0 * math.sqrt(2.0 * m * mode.omega0 * mode.Z0))
    return MediumConstants(
        upsilon0=upsilon0,
        upsilon=mode.n**3 * upsilon0,
        xi0=xi0,
        xi=xi0 / mode.n,
    )


def amplitudes_from_flux(mode: MatterWaveMode, flux: float) -> WaveAmplitudes:
    """Current and potential amplitudes for a particle flux in particles/s."""
    if flux < 0:
        raise ValueError("flux must be non-negative")
    current0 = (mode.species.mass / mode.n) * math.sqrt(2.0 * mode.omega0 * flux)
    return WaveAmplitudes(current0=current0, potential0=mode.Z * current0, flux=flux)


def coherent_mean_energy(alpha_sq: float, mode: MatterWaveMode) -> float:
    """Mean energy of a coherent excitation: (|alpha|^2 + 1/2) * hbar * omega0."""
    if alpha_sq < 0:
        raise ValueError("alpha_sq must be non-negative")
    return (alpha_sq + 0.5) * mode.hbar * mode.omega0


def matteron(mode: MatterWaveMode) -> Matteron:
    return Matteron(energy=mode.hbar * mode.omega0, momentum=mode.hbar * mode.k)


# --- serialization -------------------------------------------------------

_INPUT_KEYS = ("species", "mass_kg", "omega0_rad_s", "v_v_m_s")
_DERIVED_KEYS = ("omega_v", "n", "k0", "k", "k_v", "Z0", "Z", "v0", "v_a")


def mode_to_record(mode: MatterWaveMode) -> dict:
    """Flat key/value record; derived fields included for human inspection."""
    rec = {
        "species": mode.species.name,
        "mass_kg": "%.17g" % mode.species.mass,
        "omega0_rad_s": "%.17g" % mode.omega0,
        "v_v_m_s": "%.17g" % mode.v_v,
    }
    for key in _DERIVED_KEYS:
        rec[key] = "%.17g" % getattr(mode, key)
    return rec


def mode_from_record(record: dict, constants: PhysicalConstants = CONSTANTS,
                     rtol: float = 1e-9) -> MatterWaveMode:
    """Recompute a mode from its inputs; reject records whose stored derived
    fields disagree with the recomputation."""
    missing = [key for key in _INPUT_KEYS if key not in record]
    if missing:
        raise ValueError("mode record missing keys: %s" % ", ".join(missing))
    species = ParticleSpecies(record["species"], float(record["mass_kg"]))
    mode = make_mode(species, float(record["omega0_rad_s"]),
                     velocity=float(record["v_v_m_s"]), constants=constants)
    for key in _DERIVED_KEYS:
        if key in record:
            stored = float(record[key])
            actual = getattr(mode, key)
            if abs(stored - actual) > rtol * abs(actual):
                raise ValueError(
                    "inconsistent mode record: %s = %s, recomputed %.17g"
                    % (key, record[key], actual))
    return mode


def dump_mode(mode: MatterWaveMode, fh) -> None:
    for key, value in mode_to_record(mode).items():
        fh.write("%s = %s\n" % (key, value))


def load_mode(fh, constants: PhysicalConstants = CONSTANTS) -> MatterWaveMode:
    record = {}
    for line in fh:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        record[key.strip()] = value.strip()
    return mode_from_record(record, constants=constants)
