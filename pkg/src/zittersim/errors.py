"""Exception hierarchy for zittersim.

Every error the package raises deliberately derives from ``ZitterError`` so
callers can catch domain failures without also swallowing programming errors.
Errors that signal invalid user input additionally derive from ``ValueError``.
"""

from __future__ import annotations


class ZitterError(Exception):
    """Base class for all zittersim errors."""


class InvalidBeta(ZitterError, ValueError):
    """Average velocity outside [-1, +1] (or not a finite number)."""


class InvalidDistribution(ZitterError, ValueError):
    """Direction probabilities are negative or do not sum to one."""


class IndeterminateComposition(ZitterError):
    """Frame composition is 0/0: particle and observer move at the speed
    of light in opposite directions, so the normalizer vanishes."""


class LightSpeedRapidity(ZitterError, ValueError):
    """Rapidity requested for |beta| = 1, where atanh diverges."""


class LightSpeedSingularity(ZitterError, ValueError):
    """Lorentz factor / redshift factor requested at |beta| = 1."""


class NonPositiveMass(ZitterError, ValueError):
    """Particle mass must be strictly positive."""


class InvalidConfig(ZitterError, ValueError):
    """Simulation configuration violates its invariants."""


class EmptyPath(ZitterError, ValueError):
    """Drift estimation requested for a path with no ticks."""


class NoAcceptedTicks(ZitterError):
    """Rejection-sampled frame transform retained zero ticks, so no
    drift estimate exists for this run."""
