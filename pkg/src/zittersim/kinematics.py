"""Exact velocity/probability calculus for light-speed tick motion in 1+1D.

A particle whose instantaneous velocity is always exactly +c or -c has its
finite average velocity ``beta`` fully described by the pair of direction
probabilities

    Pr(R) = (1 + beta) / 2,      Pr(L) = (1 - beta) / 2,

with Pr(R) + Pr(L) = 1 and beta = Pr(R) - Pr(L).  Composing the view of a
second, drifting observer multiplies the direction probabilities pointwise
and renormalizes; written back in velocities this is the relativistic
addition rule

    w = (u + v) / (1 + u v)        (natural units, |c| = 1).

This module implements that calculus two independent ways (closed form and
the probability route) plus the rapidity parametrization under which the
composition is plain addition.  All functions are pure and thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import (
    IndeterminateComposition,
    InvalidBeta,
    InvalidDistribution,
    LightSpeedRapidity,
)

__all__ = [
    "Beta",
    "BetaLike",
    "DirectionDistribution",
    "Rapidity",
    "as_beta",
    "direction_distribution_from_beta",
    "beta_from_direction_distribution",
    "compose_frames",
    "velocity_addition",
    "compose_velocity_via_probabilities",
    "rapidity_from_beta",
    "beta_from_rapidity",
]

# Direction probabilities must sum to one within this additive tolerance.
DISTRIBUTION_SUM_TOL = 1e-12


@dataclass(frozen=True)
class Beta:
    """Signed average velocity in natural units, constrained to [-1, +1].

    Out-of-range or non-finite values are rejected, never clamped: a speed
    beyond c is meaningless in this model.
    """

    value: float

    def __post_init__(self) -> None:
        v = self.value
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise InvalidBeta(f"beta must be a real number, got {v!r}")
        v = float(v)
        if not math.isfinite(v) or v < -1.0 or v > 1.0:
            raise InvalidBeta(f"beta must lie in [-1, +1], got {v!r}")
        object.__setattr__(self, "value", v)

    def __float__(self) -> float:
        return self.value

    @property
    def at_light_speed(self) -> bool:
        return abs(self.value) == 1.0


BetaLike = Union[Beta, float, int]


def as_beta(v: BetaLike) -> Beta:
    """Coerce a raw number to a validated ``Beta`` (pass-through for Beta)."""
    return v if isinstance(v, Beta) else Beta(float(v))


@dataclass(frozen=True)
class DirectionDistribution:
    """Probabilities of instantaneous rightward/leftward light-speed motion."""

    p_right: float
    p_left: float

    def __post_init__(self) -> None:
        pr, pl = self.p_right, self.p_left
        if not (math.isfinite(pr) and math.isfinite(pl)):
            raise InvalidDistribution(
                f"probabilities must be finite, got ({pr!r}, {pl!r})"
            )
        if pr < 0.0 or pl < 0.0:
            raise InvalidDistribution(
                f"probabilities must be nonnegative, got ({pr!r}, {pl!r})"
            )
        if abs((pr + pl) - 1.0) > DISTRIBUTION_SUM_TOL:
            raise InvalidDistribution(
                f"probabilities must sum to 1 within {DISTRIBUTION_SUM_TOL}, "
                f"got {pr!r} + {pl!r} = {pr + pl!r}"
            )


@dataclass(frozen=True)
class Rapidity:
    """Hyperbolic angle atanh(beta); additive under velocity composition."""

    value: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise LightSpeedRapidity(
                f"rapidity must be finite, got {self.value!r}"
            )

    def __float__(self) -> float:
        return self.value


def direction_distribution_from_beta(v: BetaLike) -> DirectionDistribution:
    """Direction probabilities ((1+v)/2, (1-v)/2) for average velocity v.

    The left probability is evaluated as the complement of the right one,
    which makes p_right + p_left == 1.0 hold exactly in floating point.
    """
    b = as_beta(v).value
    p_right = 0.5 * (1.0 + b)
    return DirectionDistribution(p_right=p_right, p_left=1.0 - p_right)


def beta_from_direction_distribution(d: DirectionDistribution) -> Beta:
    """Average velocity Pr(R) - Pr(L) of a direction distribution."""
    return Beta(d.p_right - d.p_left)


def compose_frames(
    particle_in_o: DirectionDistribution,
    observer_prime_in_o: DirectionDistribution,
) -> DirectionDistribution:
    """Direction distribution of the particle as seen by a drifting observer.

    Given the particle's distribution and the observer's own distribution,
    both relative to the same base frame, the composed law is the pointwise
    product renormalized:

        Pr'(R) = Pr(R) q(R) / Z,   Pr'(L) = Pr(L) q(L) / Z,
        Z = Pr(R) q(R) + Pr(L) q(L).

    Raises IndeterminateComposition when Z = 0, which happens exactly when
    particle and observer move at the speed of light in opposite directions.
    """
    num_right = particle_in_o.p_right * observer_prime_in_o.p_right
    num_left = particle_in_o.p_left * observer_prime_in_o.p_left
    z = num_right + num_left
    if z == 0.0:
        raise IndeterminateComposition(
            "composition is 0/0: particle and observer move at the speed of "
            "light in opposite directions (the antipodal pair u = +/-1, "
            "v = -/+1)"
        )
    return DirectionDistribution(p_right=num_right / z, p_left=num_left / z)


def _reject_antipodal(u: float, v: float) -> None:
    if (u == 1.0 and v == -1.0) or (u == -1.0 and v == 1.0):
        raise IndeterminateComposition(
            f"velocity composition of u = {u:+g} and v = {v:+g} is "
            "indeterminate: opposite light-speed motions give 0/0"
        )


def velocity_addition(u: BetaLike, v: BetaLike) -> Beta:
    """Relativistic velocity addition w = (u + v) / (1 + u v), closed form.

    Defined for every pair in [-1, +1]^2 except the antipodal light-speed
    pair (+1, -1) / (-1, +1), which raises IndeterminateComposition.
    """
    uf = as_beta(u).value
    vf = as_beta(v).value
    _reject_antipodal(uf, vf)
    w = (uf + vf) / (1.0 + uf * vf)
    # |w| <= 1 holds in exact arithmetic; absorb a final-ulp rounding excursion
    # so the bound survives floating point.
    if w > 1.0:
        w = 1.0
    elif w < -1.0:
        w = -1.0
    return Beta(w)


def compose_velocity_via_probabilities(u: BetaLike, v: BetaLike) -> Beta:
    """Velocity composition computed strictly through direction probabilities.

    Converts u and v to direction distributions, composes the frames by the
    normalized product and reads the resulting average velocity back.  Serves
    as the independent route that must agree with ``velocity_addition``.
    """
    uf = as_beta(u)
    vf = as_beta(v)
    particle = direction_distribution_from_beta(vf)
    observer = direction_distribution_from_beta(uf)
    return beta_from_direction_distribution(compose_frames(particle, observer))


def rapidity_from_beta(v: BetaLike) -> Rapidity:
    """Rapidity atanh(v); raises LightSpeedRapidity at |v| = 1."""
    b = as_beta(v).value
    if abs(b) == 1.0:
        raise LightSpeedRapidity(f"rapidity diverges at beta = {b:+g}")
    return Rapidity(math.atanh(b))


def beta_from_rapidity(r: Rapidity) -> Beta:
    """Inverse map tanh(rapidity) back to an average velocity."""
    return Beta(math.tanh(float(r)))
