"""Physical scales of the light-speed tick motion for a massive particle.

A particle of mass m reverses direction at the angular frequency

    omega = 2 m c^2 / hbar        (~1e21 rad/s for the electron),

twice the de Broglie clock rate, and the distance covered per tick is the
characteristic length

    lambda = c / omega = hbar / (2 m c)    (~1e-13 m for the electron),

half the reduced Compton wavelength.  SI in, SI out; the constants used are
pinned below and echoed in CLI output so results are auditable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

from .errors import NonPositiveMass

__all__ = [
    "SPEED_OF_LIGHT",
    "HBAR",
    "ParticleScale",
    "zitter_frequency",
    "zitter_length",
    "named_particles",
    "particle_mass",
    "scale_for_particle",
]

# Exact SI value of c and the 2018 CODATA reduced Planck constant.
SPEED_OF_LIGHT = 299_792_458.0  # m/s
HBAR = 1.054571817e-34  # J s


def _require_mass(mass_kg: float) -> float:
    m = float(mass_kg)
    if not math.isfinite(m) or m <= 0.0:
        raise NonPositiveMass(f"mass must be a positive number of kg, got {mass_kg!r}")
    return m


def zitter_frequency(mass_kg: float) -> float:
    """Tick angular frequency 2 m c^2 / hbar in rad/s."""
    m = _require_mass(mass_kg)
    return 2.0 * m * SPEED_OF_LIGHT**2 / HBAR


def zitter_length(mass_kg: float) -> float:
    """Characteristic length hbar / (2 m c) in meters; equals c / omega."""
    m = _require_mass(mass_kg)
    return HBAR / (2.0 * m * SPEED_OF_LIGHT)


@dataclass(frozen=True)
class ParticleScale:
    """Mass with its derived tick frequency and characteristic length."""

    mass_kg: float
    omega_rad_per_s: float
    length_m: float

    @classmethod
    def from_mass(cls, mass_kg: float) -> "ParticleScale":
        m = _require_mass(mass_kg)
        return cls(
            mass_kg=m,
            omega_rad_per_s=zitter_frequency(m),
            length_m=zitter_length(m),
        )

    @property
    def frequency_hz(self) -> float:
        """Cyclic tick frequency omega / 2 pi, for rad/s vs Hz clarity."""
        return self.omega_rad_per_s / (2.0 * math.pi)

    @property
    def tick_duration_s(self) -> float:
        """Duration of one tick, 1 / omega."""
        return 1.0 / self.omega_rad_per_s


def _load_particle_table() -> dict[str, float]:
    payload = json.loads(
        resources.files("zittersim.data").joinpath("particles.json").read_text()
    )
    return {name: float(m) for name, m in payload["masses_kg"].items()}


_PARTICLES = _load_particle_table()


def named_particles() -> tuple[str, ...]:
    """Names available to :func:`particle_mass`."""
    return tuple(_PARTICLES)


def particle_mass(name: str) -> float:
    """Rest mass in kg for a named particle (electron, muon, proton)."""
    try:
        return _PARTICLES[name.lower()]
    except KeyError:
        known = ", ".join(named_particles())
        raise KeyError(f"unknown particle {name!r}; known: {known}") from None


def scale_for_particle(name: str) -> ParticleScale:
    return ParticleScale.from_mass(particle_mass(name))
