"""Seeded Monte Carlo generation of +/-c tick processes and drift estimation.

Every step of a path is exactly +1 or -1: the model contains no speed other
than c, and any finite velocity only exists as the long-run average of the
tick directions.  Two dynamics share the same stationary law
Pr(R) = (1 + beta)/2:

* ``iid``       - each tick is an independent Bernoulli draw,
* ``telegraph`` - a two-state Markov chain started from its stationary
                  distribution, with per-tick flip probabilities whose
                  stationary right-probability matches (1 + beta)/2.

Only the stationary statistics are physically constrained; what causes a
reversal is deliberately left unmodeled, so the dynamics choice is a knob.

``observe_from_moving_frame`` realizes frame composition stochastically:
particle and observer directions are drawn per tick and a tick is retained
iff they coincide.  Conditioning on agreement is exactly the normalized
product law of the frame composition, so the retained-tick drift converges
to (u + v)/(1 + u v) and the acceptance rate to (1 + u v)/2.

All randomness flows from a single 64-bit seed through numpy's PCG64;
replicate streams are derived with the published SplitMix64 mixer, so runs
are reproducible within one implementation/platform.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import IO, Literal, Optional

import numpy as np

from .errors import (
    EmptyPath,
    IndeterminateComposition,
    InvalidConfig,
    NoAcceptedTicks,
)
from .kinematics import BetaLike, as_beta
from .scales import SPEED_OF_LIGHT, ParticleScale

__all__ = [
    "SimConfig",
    "ZitterPath",
    "DriftEstimate",
    "FrameObservation",
    "EnsembleResult",
    "derive_seed",
    "generate_path",
    "estimate_drift",
    "observe_from_moving_frame",
    "run_ensemble",
    "write_path_csv",
]

Dynamics = Literal["iid", "telegraph"]

# Telegraph flip probabilities must reproduce Pr(R) = (1+beta)/2 this closely.
STATIONARY_TOL = 1e-12

_MAX_SEED = 2**64

# Default telegraph flip scale s: (a, b) = s * (1 - p, p) keeps the
# stationary law at p for any s in (0, 1]; s = 1 would degenerate to iid.
_DEFAULT_FLIP_SCALE = 0.5


def _validate_seed(seed: int) -> int:
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise InvalidConfig(f"seed must be an integer, got {seed!r}")
    if not 0 <= seed < _MAX_SEED:
        raise InvalidConfig(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def derive_seed(seed: int, index: int) -> int:
    """Deterministic per-replicate seed: output ``index`` of the SplitMix64
    stream seeded at ``seed`` (Steele, Lea & Flood's published mixer)."""
    _validate_seed(seed)
    if index < 0:
        raise InvalidConfig(f"replicate index must be nonnegative, got {index}")
    mask = _MAX_SEED - 1
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & mask
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
    return z ^ (z >> 31)


@dataclass(frozen=True)
class SimConfig:
    """Validated configuration of one tick-process simulation.

    ``tick_duration`` defaults to 1/omega seconds when a ``scale`` is
    attached, else to 1.0 (natural units).  ``flip_asymmetry`` overrides the
    telegraph flip probabilities (from-right, from-left); it must keep the
    stationary right-probability at (1 + beta)/2.
    """

    beta: float
    ticks: int
    seed: int
    dynamics: Dynamics = "iid"
    flip_asymmetry: Optional[tuple[float, float]] = None
    tick_duration: Optional[float] = None
    scale: Optional[ParticleScale] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", as_beta(self.beta).value)
        if not isinstance(self.ticks, int) or isinstance(self.ticks, bool):
            raise InvalidConfig(f"ticks must be an integer, got {self.ticks!r}")
        if self.ticks < 1:
            raise InvalidConfig(f"ticks must be >= 1, got {self.ticks}")
        _validate_seed(self.seed)
        if self.dynamics not in ("iid", "telegraph"):
            raise InvalidConfig(
                f"dynamics must be 'iid' or 'telegraph', got {self.dynamics!r}"
            )
        if self.tick_duration is not None and not (
            math.isfinite(self.tick_duration) and self.tick_duration > 0.0
        ):
            raise InvalidConfig(
                f"tick_duration must be positive, got {self.tick_duration!r}"
            )
        if self.flip_asymmetry is not None:
            if self.dynamics != "telegraph":
                raise InvalidConfig("flip_asymmetry applies to telegraph dynamics only")
            a, b = self.flip_asymmetry
            object.__setattr__(self, "flip_asymmetry", (float(a), float(b)))
            self._check_stationary(float(a), float(b))

    def _check_stationary(self, a: float, b: float) -> None:
        if not (0.0 <= a <= 1.0 and 0.0 <= b <= 1.0):
            raise InvalidConfig(f"flip probabilities must lie in [0, 1], got ({a}, {b})")
        if a + b == 0.0:
            raise InvalidConfig("flip probabilities cannot both be zero")
        stationary_right = b / (a + b)
        if abs(stationary_right - self.p_right) > STATIONARY_TOL:
            raise InvalidConfig(
                f"flip probabilities ({a}, {b}) give stationary Pr(R) = "
                f"{stationary_right}, which misses (1+beta)/2 = {self.p_right} "
                f"by more than {STATIONARY_TOL}"
            )

    @property
    def p_right(self) -> float:
        """Per-tick probability of a +1 step under the stationary law."""
        return 0.5 * (1.0 + self.beta)

    @property
    def flip_probabilities(self) -> tuple[float, float]:
        """Telegraph (from-right, from-left) flip probabilities in use."""
        if self.flip_asymmetry is not None:
            return self.flip_asymmetry
        p = self.p_right
        return (_DEFAULT_FLIP_SCALE * (1.0 - p), _DEFAULT_FLIP_SCALE * p)

    @property
    def resolved_tick_duration(self) -> float:
        if self.tick_duration is not None:
            return self.tick_duration
        if self.scale is not None:
            return self.scale.tick_duration_s
        return 1.0

    @property
    def step_length(self) -> float:
        """Distance covered per tick: c * tick_duration, meters when a
        physical scale is attached, else natural units (c = 1)."""
        c = SPEED_OF_LIGHT if self.scale is not None else 1.0
        return c * self.resolved_tick_duration


@dataclass(frozen=True)
class ZitterPath:
    """A sample path of +/-1 tick directions.

    Positions are the running sums scaled by the per-tick step length, so
    they are in meters when the generating config carried a physical scale.
    """

    directions: np.ndarray
    tick_duration: float = 1.0
    step_length: float = 1.0
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        arr = np.asarray(self.directions, dtype=np.int8)
        if arr.ndim != 1:
            raise InvalidConfig("directions must be a one-dimensional sequence")
        if arr.size and not np.all(np.abs(arr) == 1):
            raise InvalidConfig("every step must be exactly +1 or -1")
        object.__setattr__(self, "directions", arr)

    def __len__(self) -> int:
        return int(self.directions.size)

    @property
    def positions(self) -> np.ndarray:
        return np.cumsum(self.directions, dtype=np.int64) * self.step_length


@dataclass(frozen=True)
class DriftEstimate:
    """Sample mean of tick directions with its binomial standard error."""

    mean: float
    std_error: float
    n: int
    seed: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "std_error": self.std_error,
            "n": self.n,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class FrameObservation:
    """Drift seen from a drifting frame plus the tick acceptance rate."""

    estimate: DriftEstimate
    acceptance_rate: float
    ticks_total: int

    def to_dict(self) -> dict:
        out = self.estimate.to_dict()
        out["acceptance_rate"] = self.acceptance_rate
        out["ticks_total"] = self.ticks_total
        return out


@dataclass(frozen=True)
class EnsembleResult:
    """Per-replicate drift estimates and their tick-weighted pooled estimate."""

    replicates: tuple[DriftEstimate, ...]
    pooled: DriftEstimate


def _iid_steps(rng: np.random.Generator, ticks: int, p_right: float) -> np.ndarray:
    return np.where(rng.random(ticks) < p_right, 1, -1).astype(np.int8)


def _telegraph_steps(
    rng: np.random.Generator, ticks: int, p_right: float, flips: tuple[float, float]
) -> np.ndarray:
    flip_from_right, flip_from_left = flips
    steps = np.empty(ticks, dtype=np.int8)
    u = rng.random(ticks + 1)
    state = 1 if u[0] < p_right else -1  # stationary initial state
    for i in range(ticks):
        steps[i] = state
        threshold = flip_from_right if state == 1 else flip_from_left
        if u[i + 1] < threshold:
            state = -state
    return steps


def generate_path(cfg: SimConfig) -> ZitterPath:
    """Generate a seeded sample path under the configured dynamics.

    Identical configs (including seed) produce identical paths within one
    implementation/platform.
    """
    rng = np.random.default_rng(cfg.seed)
    if cfg.dynamics == "iid":
        steps = _iid_steps(rng, cfg.ticks, cfg.p_right)
    else:
        steps = _telegraph_steps(rng, cfg.ticks, cfg.p_right, cfg.flip_probabilities)
    return ZitterPath(
        directions=steps,
        tick_duration=cfg.resolved_tick_duration,
        step_length=cfg.step_length,
        seed=cfg.seed,
    )


def _estimate_from_sum(total: int, n: int, seed: Optional[int]) -> DriftEstimate:
    mean = total / n
    std_error = math.sqrt(max(0.0, 1.0 - mean * mean) / n)
    return DriftEstimate(mean=mean, std_error=std_error, n=n, seed=seed)


def estimate_drift(path: ZitterPath) -> DriftEstimate:
    """Sample mean of the tick directions with std error sqrt((1-m^2)/n)."""
    n = len(path)
    if n == 0:
        raise EmptyPath("cannot estimate drift from an empty path")
    total = int(np.sum(path.directions, dtype=np.int64))
    return _estimate_from_sum(total, n, path.seed)


def observe_from_moving_frame(
    u: BetaLike, v: BetaLike, ticks: int, seed: int
) -> FrameObservation:
    """Rejection-sampled drift of a particle as seen by a drifting observer.

    Per tick, the particle direction D (right with probability (1+v)/2) and
    the observer direction E (right with probability (1+u)/2) are drawn
    independently; the tick is retained iff D = E.  The mean of D over
    retained ticks estimates (u+v)/(1+uv) and the retained fraction
    estimates (1+uv)/2.

    Raises IndeterminateComposition for the antipodal light-speed pair and
    NoAcceptedTicks when no tick is retained.
    """
    uf = as_beta(u).value
    vf = as_beta(v).value
    if (uf == 1.0 and vf == -1.0) or (uf == -1.0 and vf == 1.0):
        raise IndeterminateComposition(
            f"observer u = {uf:+g} and particle v = {vf:+g} move at the speed "
            "of light in opposite directions: no tick can ever be retained"
        )
    if not isinstance(ticks, int) or ticks < 1:
        raise InvalidConfig(f"ticks must be a positive integer, got {ticks!r}")
    _validate_seed(seed)

    rng = np.random.default_rng(seed)
    particle_right = rng.random(ticks) < 0.5 * (1.0 + vf)
    observer_right = rng.random(ticks) < 0.5 * (1.0 + uf)
    retained = particle_right == observer_right
    n_retained = int(np.count_nonzero(retained))
    if n_retained == 0:
        raise NoAcceptedTicks(
            f"0 of {ticks} ticks retained for u = {uf:+g}, v = {vf:+g}; "
            "increase ticks to estimate this composition"
        )
    n_right = int(np.count_nonzero(particle_right & retained))
    total = 2 * n_right - n_retained  # sum of +/-1 directions over retained
    return FrameObservation(
        estimate=_estimate_from_sum(total, n_retained, seed),
        acceptance_rate=n_retained / ticks,
        ticks_total=ticks,
    )


def run_ensemble(cfg: SimConfig, replicates: int) -> EnsembleResult:
    """Run independent replicates with SplitMix64-derived seeds and pool them.

    Replicate r reuses ``cfg`` with seed ``derive_seed(cfg.seed, r)``.  The
    pooled mean is the tick-weighted average; for +/-1 ticks it reduces to
    integer (step sum, tick count) accumulation, whose merge is associative
    and commutative exactly, so the pooling order cannot matter.
    """
    if not isinstance(replicates, int) or replicates < 1:
        raise InvalidConfig(f"replicates must be a positive integer, got {replicates!r}")
    estimates = []
    total_steps = 0
    total_ticks = 0
    for r in range(replicates):
        rep_cfg = SimConfig(
            beta=cfg.beta,
            ticks=cfg.ticks,
            seed=derive_seed(cfg.seed, r),
            dynamics=cfg.dynamics,
            flip_asymmetry=cfg.flip_asymmetry,
            tick_duration=cfg.tick_duration,
            scale=cfg.scale,
        )
        path = generate_path(rep_cfg)
        estimates.append(estimate_drift(path))
        total_steps += int(np.sum(path.directions, dtype=np.int64))
        total_ticks += len(path)
    pooled_estimate = _estimate_from_sum(total_steps, total_ticks, cfg.seed)
    return EnsembleResult(replicates=tuple(estimates), pooled=pooled_estimate)


def write_path_csv(path: ZitterPath, stream: IO[str]) -> None:
    """Dump a path as CSV rows ``tick,direction,position`` (direction +1/-1)."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["tick", "direction", "position"])
    positions = path.positions
    for tick, (direction, position) in enumerate(zip(path.directions, positions)):
        writer.writerow([tick, f"{int(direction):+d}", repr(float(position))])
