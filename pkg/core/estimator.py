"""
Budgeted Ulam estimation for OneCenter.

An estimator either certifies that two permutations are closer than a
threshold or returns a (1+eps)-approximation of their move distance. The
reference implementation is exact; faster estimators plug in behind the
same interface.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Hashable, Optional, Sequence, Union

from .errors import InvalidParameterError
from .ulam import ulam_moves


@dataclass(frozen=True)
class Below:
    """The true distance is strictly less than `threshold`."""
    threshold: int


@dataclass(frozen=True)
class Value:
    """An estimate u with D <= u <= (1+eps) * D, plus a certified lower bound on D."""
    value: int
    lower_bound: int


EstimateOutcome = Union[Below, Value]


def _check_budget(threshold: int, eps: float) -> None:
    if threshold < 1:
        raise InvalidParameterError(f"threshold must be >= 1, got {threshold}")
    if not eps > 0:
        raise InvalidParameterError(f"eps must be > 0, got {eps}")


class UlamEstimator(ABC):
    """Abstract base class for budgeted Ulam estimators."""

    name = "abstract"

    @abstractmethod
    def estimate(
        self,
        sigma: Sequence[Hashable],
        tau: Sequence[Hashable],
        threshold: int,
        eps: float,
    ) -> EstimateOutcome:
        """Return Below(threshold) or Value(u, lower_bound), in moves."""
        pass


class ExactUlamEstimator(UlamEstimator):
    """Computes the distance exactly and branches on the threshold."""

    name = "exact"

    def estimate(self, sigma, tau, threshold, eps):
        _check_budget(threshold, eps)
        distance = ulam_moves(sigma, tau)
        if distance < threshold:
            return Below(threshold)
        return Value(distance, distance)


def ulam_estimate(
    sigma: Sequence[Hashable],
    tau: Sequence[Hashable],
    threshold: int,
    eps: float,
    estimator: Optional[UlamEstimator] = None,
) -> EstimateOutcome:
    """Run `estimator` (exact by default) with argument validation."""
    _check_budget(threshold, eps)
    return (estimator or ExactUlamEstimator()).estimate(sigma, tau, threshold, eps)
