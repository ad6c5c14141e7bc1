import math
from dataclasses import dataclass, replace
from typing import List, Sequence, Tuple

from hoairy.utils.exception_utils import ConfigError


@dataclass(frozen=True)
class IntervalSystem:
    """
    Thresholds x_1 > ... > x_k cut the line into A_1 = (x_1, inf) and
    A_j = (x_j, x_(j-1)); A_j carries weight alpha_j and everything is
    shifted by t. alpha_(k+1) = 0 is implied.
    """

    thresholds: Tuple[float, ...]
    weights: Tuple[float, ...]
    shift: float = 0.0

    @classmethod
    def create(
        cls, thresholds: Sequence[float], weights: Sequence[float], shift: float = 0.0
    ) -> "IntervalSystem":
        system = cls(
            thresholds=tuple(float(x) for x in thresholds),
            weights=tuple(float(alpha) for alpha in weights),
            shift=float(shift),
        )
        system.validate()
        return system

    @property
    def k(self) -> int:
        return len(self.thresholds)

    def validate(self):
        if self.k < 1:
            raise ConfigError("At least one threshold is needed", {})
        if len(self.weights) != self.k:
            raise ConfigError(
                "Every threshold needs a weight",
                {"thresholds": self.k, "weights": len(self.weights)},
            )
        values = self.thresholds + self.weights + (self.shift,)
        if not all(math.isfinite(value) for value in values):
            raise ConfigError("Thresholds, weights and shift must be finite", {})
        for j in range(1, self.k):
            if not self.thresholds[j - 1] > self.thresholds[j]:
                raise ConfigError(
                    "Thresholds must be strictly decreasing",
                    {"thresholds": list(self.thresholds)},
                )
        for alpha in self.weights:
            if not 0.0 <= alpha <= 1.0:
                raise ConfigError(
                    "Weights must lie in [0, 1]", {"weights": list(self.weights)}
                )

    def intervals(self) -> List[Tuple[float, float]]:
        shifted = [x + self.shift for x in self.thresholds]
        bounds = [math.inf] + shifted
        return [(bounds[j + 1], bounds[j]) for j in range(self.k)]

    def weight_differences(self) -> Tuple[float, ...]:
        """alpha_j - alpha_(j+1), the weights of the nested half-lines (x_j, inf)."""
        padded = self.weights + (0.0,)
        return tuple(padded[j] - padded[j + 1] for j in range(self.k))

    def with_shift(self, shift: float) -> "IntervalSystem":
        return replace(self, shift=float(shift))

    def with_weights(self, weights: Sequence[float]) -> "IntervalSystem":
        return IntervalSystem.create(self.thresholds, weights, self.shift)

    def with_first_threshold(self, value: float) -> "IntervalSystem":
        return IntervalSystem.create((value,) + self.thresholds[1:], self.weights, self.shift)

    def as_dict(self):
        return {
            "x": list(self.thresholds),
            "alpha": list(self.weights),
            "t": self.shift,
        }
