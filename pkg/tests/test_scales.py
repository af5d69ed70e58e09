"""Mass to tick frequency / characteristic length mapping."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from zittersim import (
    HBAR,
    SPEED_OF_LIGHT,
    NonPositiveMass,
    ParticleScale,
    named_particles,
    particle_mass,
    scale_for_particle,
    zitter_frequency,
    zitter_length,
)

ELECTRON_MASS = 9.1093837015e-31
# 2 m c^2 / hbar and hbar / (2 m c) for the electron, from the pinned constants
ELECTRON_OMEGA = 1.552688142210022e21
ELECTRON_LAMBDA = 1.9307963386214167e-13

MASSES = st.floats(min_value=1e-31, max_value=1e-25, allow_nan=False)


class TestFrequency:
    def test_electron_value(self):
        omega = zitter_frequency(ELECTRON_MASS)
        assert omega == pytest.approx(ELECTRON_OMEGA, rel=1e-12)
        assert 1.0e21 <= omega <= 2.0e21

    def test_linear_in_mass(self):
        assert zitter_frequency(2.0 * ELECTRON_MASS) == 2.0 * zitter_frequency(ELECTRON_MASS)

    @pytest.mark.parametrize("mass", [0.0, -1.0, math.nan])
    def test_rejects_non_positive_mass(self, mass):
        with pytest.raises(NonPositiveMass):
            zitter_frequency(mass)


class TestLength:
    def test_electron_value(self):
        lam = zitter_length(ELECTRON_MASS)
        assert lam == pytest.approx(ELECTRON_LAMBDA, rel=1e-12)
        assert 1.5e-13 <= lam <= 2.5e-13

    def test_inverse_in_mass(self):
        assert zitter_length(2.0 * ELECTRON_MASS) == 0.5 * zitter_length(ELECTRON_MASS)

    @pytest.mark.parametrize("mass", [0.0, -3.0])
    def test_rejects_non_positive_mass(self, mass):
        with pytest.raises(NonPositiveMass):
            zitter_length(mass)

    @given(mass=MASSES)
    def test_length_times_frequency_is_c(self, mass):
        product = zitter_length(mass) * zitter_frequency(mass)
        assert abs(product - SPEED_OF_LIGHT) / SPEED_OF_LIGHT <= 1e-12


class TestParticleScale:
    def test_from_mass_consistency(self):
        scale = ParticleScale.from_mass(ELECTRON_MASS)
        assert scale.omega_rad_per_s == zitter_frequency(ELECTRON_MASS)
        assert scale.length_m == zitter_length(ELECTRON_MASS)
        assert scale.frequency_hz == pytest.approx(
            scale.omega_rad_per_s / (2.0 * math.pi), rel=1e-15
        )
        assert scale.tick_duration_s == pytest.approx(1.0 / scale.omega_rad_per_s, rel=1e-15)

    def test_constants_are_pinned(self):
        assert SPEED_OF_LIGHT == 299_792_458.0
        assert HBAR == 1.054571817e-34


class TestNamedParticles:
    def test_table_contents(self):
        assert set(named_particles()) == {"electron", "muon", "proton"}
        assert particle_mass("electron") == ELECTRON_MASS
        assert particle_mass("muon") == 1.883531627e-28
        assert particle_mass("proton") == 1.67262192369e-27

    def test_lookup_is_case_insensitive(self):
        assert particle_mass("Electron") == ELECTRON_MASS

    def test_unknown_particle(self):
        with pytest.raises(KeyError):
            particle_mass("tachyon")

    def test_scale_for_particle(self):
        scale = scale_for_particle("electron")
        assert scale.mass_kg == ELECTRON_MASS
        assert 1.0e21 <= scale.omega_rad_per_s <= 2.0e21
        assert 1.5e-13 <= scale.length_m <= 2.5e-13
