"""Self-verification suite: invariant checks runnable from the CLI.

Each check returns the observed deviation next to the tolerance it was held
to, so a report is auditable rather than a bare pass/fail.  Tolerances live
in module-level constants and are looked up at call time; the ``fast`` level
shrinks Monte Carlo sample sizes, the ``full`` level runs them at
acceptance scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import entropy as ent
from . import kinematics as kin
from .scales import SPEED_OF_LIGHT, ParticleScale, particle_mass
from .simulate import SimConfig, estimate_drift, generate_path, observe_from_moving_frame

__all__ = ["CheckResult", "VerificationReport", "run_verification", "LEVELS"]

LEVELS = ("fast", "full")

# Exact-arithmetic identities.
COMMUTATIVITY_TOL = 0.0
IDENTITY_TOL = 0.0
INVERSE_TOL = 1e-15
# Chained floating-point identities.
VELOCITY_GRID_TOL = 1e-12
ENTROPY_IDENTITY_TOL = 1e-12
ENTROPY_REST_TOL = 1e-15
SCALES_REL_TOL = 1e-12
# Transcendental route.
ASSOCIATIVITY_TOL = 1e-10
# Monte Carlo bound, in standard errors.
SIGMA_BOUND = 5.0

_GRID = np.linspace(-0.98, 0.98, 99)


@dataclass(frozen=True)
class CheckResult:
    name: str
    tolerance: float
    observed: float
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "tolerance": self.tolerance,
            "observed": self.observed,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    level: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, observed: float, tolerance: float, detail: str = "") -> None:
        self.checks.append(
            CheckResult(
                name=name,
                tolerance=tolerance,
                observed=observed,
                passed=observed <= tolerance,
                detail=detail,
            )
        )

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _check_velocity_grid(report: VerificationReport) -> None:
    worst = 0.0
    for u in _GRID:
        for v in _GRID:
            closed = kin.velocity_addition(u, v).value
            via_probs = kin.compose_velocity_via_probabilities(u, v).value
            worst = max(worst, abs(closed - via_probs))
    report.add(
        "velocity_addition_equals_probability_route",
        worst,
        VELOCITY_GRID_TOL,
        "max |closed form - probability route| on the 99x99 grid of [-0.98, 0.98]^2",
    )


def _check_group_laws(report: VerificationReport) -> None:
    comm = ident = inv = assoc = 0.0
    for u in _GRID:
        ident = max(ident, abs(kin.velocity_addition(u, 0.0).value - u))
        inv = max(inv, abs(kin.velocity_addition(u, -u).value))
        phi_u = kin.rapidity_from_beta(u).value
        for v in _GRID:
            w_uv = kin.velocity_addition(u, v).value
            comm = max(comm, abs(w_uv - kin.velocity_addition(v, u).value))
            phi_sum = phi_u + kin.rapidity_from_beta(v).value
            assoc = max(assoc, abs(kin.rapidity_from_beta(w_uv).value - phi_sum))
    report.add("group_law_commutativity", comm, COMMUTATIVITY_TOL)
    report.add("group_law_identity", ident, IDENTITY_TOL)
    report.add("group_law_inverse", inv, INVERSE_TOL)
    report.add(
        "group_law_associativity_via_rapidity",
        assoc,
        ASSOCIATIVITY_TOL,
        "max |rapidity(u (+) v) - (rapidity(u) + rapidity(v))| on the grid",
    )


def _check_entropy_identity(report: VerificationReport) -> None:
    worst = 0.0
    for b in np.linspace(-0.999, 0.999, 999):
        direct = ent.entropy_from_beta(b).value
        relativistic = ent.entropy_relativistic_form(b).value
        worst = max(worst, abs(direct - relativistic))
    report.add(
        "entropy_identity_relativistic_form",
        worst,
        ENTROPY_IDENTITY_TOL,
        "max |velocity route - log(2 gamma) - beta log(1+z) route| on 999 points",
    )
    report.add(
        "entropy_at_rest_is_log2",
        abs(ent.entropy_from_beta(0.0).value - math.log(2.0)),
        ENTROPY_REST_TOL,
    )
    boundary = max(ent.entropy_from_beta(1.0).value, ent.entropy_from_beta(-1.0).value)
    report.add("entropy_at_light_speed_is_zero", boundary, 0.0)


def _check_monte_carlo_drift(report: VerificationReport, ticks: int) -> None:
    worst_sigmas = 0.0
    for i, beta in enumerate((-0.9, -0.5, 0.0, 0.5, 0.9)):
        cfg = SimConfig(beta=beta, ticks=ticks, seed=20_000 + i)
        est = estimate_drift(generate_path(cfg))
        bound = math.sqrt((1.0 - beta * beta) / ticks)
        worst_sigmas = max(worst_sigmas, abs(est.mean - beta) / bound)
    report.add(
        "monte_carlo_drift_within_5_sigma",
        worst_sigmas,
        SIGMA_BOUND,
        f"worst |sample mean - beta| / sqrt((1-beta^2)/n) at n = {ticks}",
    )


def _check_frame_transform(report: VerificationReport, ticks: int) -> None:
    worst_drift = 0.0
    worst_accept = 0.0
    values = (-0.8, -0.4, 0.0, 0.4, 0.8)
    seed = 77_000
    for u in values:
        for v in values:
            seed += 1
            obs = observe_from_moving_frame(u, v, ticks=ticks, seed=seed)
            expected = kin.velocity_addition(u, v).value
            worst_drift = max(
                worst_drift, abs(obs.estimate.mean - expected) / obs.estimate.std_error
            )
            z = 0.5 * (1.0 + u * v)
            sigma = math.sqrt(z * (1.0 - z) / ticks)
            worst_accept = max(worst_accept, abs(obs.acceptance_rate - z) / sigma)
    report.add(
        "frame_transform_drift_within_5_sigma",
        worst_drift,
        SIGMA_BOUND,
        f"worst deviation from (u+v)/(1+uv) in estimated std errors, {ticks} ticks/pair",
    )
    report.add(
        "frame_transform_acceptance_rate_within_5_sigma",
        worst_accept,
        SIGMA_BOUND,
        "worst deviation of the retained fraction from (1+uv)/2 in binomial sigmas",
    )


def _check_telegraph_consistency(report: VerificationReport, ticks: int) -> None:
    beta = 0.3
    iid_est = estimate_drift(generate_path(SimConfig(beta=beta, ticks=ticks, seed=505)))
    tg_cfg = SimConfig(beta=beta, ticks=ticks, seed=606, dynamics="telegraph")
    tg_est = estimate_drift(generate_path(tg_cfg))
    # The persistent chain inflates the variance of the mean by the
    # integrated autocorrelation factor (1+rho)/(1-rho), rho = 1 - a - b.
    a, b = tg_cfg.flip_probabilities
    rho = 1.0 - (a + b)
    inflation = (1.0 + rho) / (1.0 - rho)
    base_var = (1.0 - beta * beta) / ticks
    sigma = math.sqrt(base_var * (1.0 + inflation))
    report.add(
        "telegraph_iid_drift_consistency",
        abs(tg_est.mean - iid_est.mean) / sigma,
        SIGMA_BOUND,
        f"|telegraph mean - iid mean| over combined sigma at matched beta = {beta}",
    )


def _check_determinism(report: VerificationReport) -> None:
    cfg = SimConfig(beta=0.25, ticks=10_000, seed=99)
    first = estimate_drift(generate_path(cfg))
    second = estimate_drift(generate_path(cfg))
    identical = first == second
    report.add(
        "determinism_same_config_same_estimate",
        0.0 if identical else 1.0,
        0.0,
        "two runs with one config and seed must match bitwise",
    )


def _check_scales(report: VerificationReport) -> None:
    electron = ParticleScale.from_mass(particle_mass("electron"))
    in_range = (
        1.0e21 <= electron.omega_rad_per_s <= 2.0e21
        and 1.5e-13 <= electron.length_m <= 2.5e-13
    )
    report.add(
        "electron_scales_in_expected_orders",
        0.0 if in_range else 1.0,
        0.0,
        f"omega = {electron.omega_rad_per_s:.6e} rad/s, lambda = {electron.length_m:.6e} m",
    )
    worst = 0.0
    for exponent in range(-31, -24):
        mass = 10.0**exponent
        scale = ParticleScale.from_mass(mass)
        worst = max(
            worst,
            abs(scale.omega_rad_per_s * scale.length_m - SPEED_OF_LIGHT) / SPEED_OF_LIGHT,
        )
    report.add(
        "length_times_frequency_is_c",
        worst,
        SCALES_REL_TOL,
        "relative |omega * lambda - c| over masses 1e-31..1e-25 kg",
    )


def run_verification(level: str = "fast") -> VerificationReport:
    """Run the invariant suite; ``fast`` keeps Monte Carlo runs small."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}, got {level!r}")
    mc_ticks = 100_000 if level == "fast" else 1_000_000
    report = VerificationReport(level=level)
    _check_velocity_grid(report)
    _check_group_laws(report)
    _check_entropy_identity(report)
    _check_monte_carlo_drift(report, mc_ticks)
    _check_frame_transform(report, mc_ticks)
    _check_telegraph_consistency(report, mc_ticks)
    _check_determinism(report)
    _check_scales(report)
    return report
