"""Single-pass streaming mean/variance with mergeable state.

Welford's update keeps (count, mean, M2) numerically stable in one pass;
Chan's pairwise rule merges two such triples, so partial accumulators from
parallel workers can be combined in any order (associative and commutative
up to floating-point rounding).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

__all__ = ["RunningMoments", "streaming_moments"]


@dataclass
class RunningMoments:
    """Streaming accumulator for mean and variance of a scalar sample."""

    count: int = 0
    _mean: float = field(default=0.0, repr=False)
    _m2: float = field(default=0.0, repr=False)

    def push(self, x: float) -> None:
        self.count += 1
        delta = x - self._mean
        self._mean += delta / self.count
        self._m2 += delta * (x - self._mean)

    def extend(self, xs: Iterable[float]) -> None:
        for x in xs:
            self.push(x)

    def merge(self, other: "RunningMoments") -> "RunningMoments":
        """Combine two accumulators as if their samples were concatenated."""
        if other.count == 0:
            return self
        if self.count == 0:
            self.count = other.count
            self._mean = other._mean
            self._m2 = other._m2
            return self
        n = self.count + other.count
        delta = other._mean - self._mean
        self._mean += delta * (other.count / n)
        self._m2 += other._m2 + delta * delta * (self.count * other.count / n)
        self.count = n
        return self

    @property
    def mean(self) -> float:
        if self.count == 0:
            raise ValueError("mean is undefined for a zero-count state")
        return self._mean

    @property
    def variance_population(self) -> float:
        """Variance with the 1/n convention."""
        if self.count == 0:
            raise ValueError("variance is undefined for a zero-count state")
        return self._m2 / self.count

    @property
    def variance_sample(self) -> float:
        """Unbiased variance with the 1/(n-1) convention; needs n >= 2."""
        if self.count < 2:
            raise ValueError("sample variance needs at least two samples")
        return self._m2 / (self.count - 1)


def streaming_moments(stream: Iterable[float]) -> RunningMoments:
    """Consume a stream of values and return the filled accumulator.

    An empty stream yields the explicit zero-count state rather than NaNs.
    """
    acc = RunningMoments()
    acc.extend(stream)
    return acc
