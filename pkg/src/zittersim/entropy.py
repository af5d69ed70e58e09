"""Observer-dependent Shannon entropy of the direction distribution.

The entropy of the binary right/left law is

    S = -Pr(R) log Pr(R) - Pr(L) log Pr(L),

maximal (log 2) for a particle at rest and zero at light speed, where the
motion is certain.  Because the direction probabilities depend on the
observer, so does S.  For |beta| < 1 the same quantity decomposes into
special-relativistic factors,

    S = log(2 gamma) - beta log(1 + z),

with gamma = (1 - beta^2)^(-1/2) and 1 + z = sqrt((1+beta)/(1-beta)).

Logarithm base only changes the unit; nats are the default, bits optional.
All functions are pure and thread-safe.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import LightSpeedSingularity
from .kinematics import BetaLike, DirectionDistribution, as_beta

__all__ = [
    "EntropyUnit",
    "EntropyValue",
    "RelativisticFactors",
    "entropy_from_distribution",
    "entropy_from_beta",
    "lorentz_gamma",
    "redshift_factor",
    "relativistic_factors",
    "entropy_relativistic_form",
]

# Upper-bound slack: rounding may land a hair above log 2 near beta = 0.
_RANGE_SLACK = 1e-12


class EntropyUnit(enum.Enum):
    NATS = "nats"
    BITS = "bits"

    @property
    def log(self):
        return math.log if self is EntropyUnit.NATS else math.log2

    @property
    def max_value(self) -> float:
        """Entropy of the fair coin, log 2 in this unit's base."""
        return math.log(2.0) if self is EntropyUnit.NATS else 1.0


@dataclass(frozen=True)
class EntropyValue:
    """A Shannon entropy together with its unit; bounded by [0, log 2]."""

    value: float
    unit: EntropyUnit

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise ValueError(f"entropy must be finite, got {self.value!r}")
        if self.value < 0.0 or self.value > self.unit.max_value + _RANGE_SLACK:
            raise ValueError(
                f"entropy of a binary law must lie in [0, log 2] "
                f"({self.unit.max_value} {self.unit.value}), got {self.value!r}"
            )

    def __float__(self) -> float:
        return self.value

    def to(self, unit: EntropyUnit) -> "EntropyValue":
        """Convert between nats and bits (value scales by ln 2)."""
        if unit is self.unit:
            return self
        if unit is EntropyUnit.NATS:
            return EntropyValue(self.value * math.log(2.0), unit)
        return EntropyValue(self.value / math.log(2.0), unit)


def _binary_entropy(p: float, q: float, unit: EntropyUnit) -> float:
    # 0 log 0 = 0 by convention; each term is >= 0, so S >= 0 exactly.
    log = unit.log
    t_right = p * log(p) if p > 0.0 else 0.0
    t_left = q * log(q) if q > 0.0 else 0.0
    # "+ 0.0" normalizes -0.0 at the certainty boundary.
    return -(t_right + t_left) + 0.0


def entropy_from_distribution(
    d: DirectionDistribution, unit: EntropyUnit = EntropyUnit.NATS
) -> EntropyValue:
    """Shannon entropy -p log p - q log q of a direction distribution."""
    return EntropyValue(_binary_entropy(d.p_right, d.p_left, unit), unit)


def entropy_from_beta(
    v: BetaLike, unit: EntropyUnit = EntropyUnit.NATS
) -> EntropyValue:
    """Entropy written directly in terms of the average velocity.

    Evaluates S = -(1+v)/2 log((1+v)/2) - (1-v)/2 log((1-v)/2) with both
    probabilities formed symmetrically from v, so S(v) == S(-v) holds exactly
    in floating point.
    """
    b = as_beta(v).value
    p = 0.5 * (1.0 + b)
    q = 0.5 * (1.0 - b)
    return EntropyValue(_binary_entropy(p, q, unit), unit)


def lorentz_gamma(v: BetaLike) -> float:
    """Lorentz factor (1 - beta^2)^(-1/2); diverges at |beta| = 1.

    Evaluated as 1/sqrt((1-beta)(1+beta)) to avoid the cancellation that
    squaring beta causes near light speed.
    """
    b = as_beta(v).value
    if abs(b) == 1.0:
        raise LightSpeedSingularity(
            f"Lorentz factor diverges at beta = {b:+g}"
        )
    return 1.0 / math.sqrt((1.0 - b) * (1.0 + b))


def redshift_factor(v: BetaLike) -> float:
    """Collinear Doppler factor 1 + z = sqrt((1+beta)/(1-beta)).

    Equals exp(rapidity); raises LightSpeedSingularity at |beta| = 1.
    """
    b = as_beta(v).value
    if abs(b) == 1.0:
        raise LightSpeedSingularity(
            f"redshift factor is singular at beta = {b:+g}"
        )
    return math.sqrt((1.0 + b) / (1.0 - b))


@dataclass(frozen=True)
class RelativisticFactors:
    """Lorentz factor and Doppler factor bundled with the velocity used."""

    beta: float
    gamma: float
    one_plus_z: float


def relativistic_factors(v: BetaLike) -> RelativisticFactors:
    b = as_beta(v)
    return RelativisticFactors(
        beta=b.value, gamma=lorentz_gamma(b), one_plus_z=redshift_factor(b)
    )


def entropy_relativistic_form(v: BetaLike) -> EntropyValue:
    """Entropy via the decomposition S = log(2 gamma) - beta log(1+z), nats.

    Term-by-term this diverges at |beta| = 1 even though S itself tends to 0
    there, so light speed raises LightSpeedSingularity; use
    ``entropy_from_beta`` at the boundary instead.
    """
    b = as_beta(v).value
    gamma = lorentz_gamma(b)
    one_plus_z = redshift_factor(b)
    s = math.log(2.0 * gamma) - b * math.log(one_plus_z)
    # Rounding of the difference may dip microscopically below zero near the
    # (excluded) boundary; the value is an entropy, keep it in range.
    if s < 0.0:
        s = 0.0
    return EntropyValue(s, EntropyUnit.NATS)
