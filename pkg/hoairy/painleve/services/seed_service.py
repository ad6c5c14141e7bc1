import cmath
import logging
from typing import Optional, Sequence

import numpy as np

from hoairy.airy.config import SADDLE_FROM
from hoairy.airy.services.airy_service import AiryService
from hoairy.painleve.config import SEED_THRESHOLD, T_MAX, T_MAX_FALLBACK, T_MAX_LIMIT
from hoairy.utils.exception_utils import SeedTooLarge, WeightCollision

log = logging.getLogger(__name__)


class SeedService:
    @staticmethod
    def airy_derivative(n: int, x: float, m: int) -> float:
        # Seeds are exponentially small; the saddle route keeps their relative accuracy.
        if x >= SADDLE_FROM:
            return AiryService.saddle_quadrature(n, x, m).value
        return AiryService.ai_n_deriv(n, x, m)

    @staticmethod
    def weight_differences(alpha: Sequence[float]):
        """alpha_j - alpha_(j+1) with alpha_(k+1) = 0; equal neighbours are rejected."""
        padded = tuple(alpha) + (0.0,)
        differences = []
        for j in range(len(alpha)):
            difference = padded[j] - padded[j + 1]
            if difference == 0:
                raise WeightCollision(
                    f"alpha_{j + 1} equals alpha_{j + 2}",
                    {"alpha": list(alpha), "component": j + 1},
                )
            differences.append(difference)
        return differences

    @classmethod
    def largest_seed(cls, n: int, x: Sequence[float], t_max: float) -> float:
        return max(abs(cls.airy_derivative(n, t_max + x_j, 0)) for x_j in x)

    @classmethod
    def resolve_t_max(
        cls,
        n: int,
        x: Sequence[float],
        alpha: Sequence[float],
        t_max: Optional[float] = None,
    ) -> float:
        cls.weight_differences(alpha)
        if t_max is not None:
            largest = cls.largest_seed(n, x, t_max)
            if largest > SEED_THRESHOLD:
                raise SeedTooLarge(
                    "Ai_n is not small at t_max",
                    {"t_max": t_max, "largest": largest, "threshold": SEED_THRESHOLD},
                )
            return float(t_max)
        start = T_MAX.get(n, T_MAX_FALLBACK)
        t_max = start
        while cls.largest_seed(n, x, t_max) > SEED_THRESHOLD:
            t_max += 1.0
            if t_max > T_MAX_LIMIT:
                raise SeedTooLarge(
                    "No t_max below the limit makes the seed small",
                    {"limit": T_MAX_LIMIT, "x": list(x)},
                )
        if t_max > start:
            log.warning("t_max raised from %g to %g for x=%s", start, t_max, list(x))
        log.debug("t_max = %g", t_max)
        return t_max

    @classmethod
    def seed_from_asymptotics(
        cls,
        n: int,
        x: Sequence[float],
        alpha: Sequence[float],
        t_max: float,
    ) -> np.ndarray:
        """
        D^m u_j(t_max) = sqrt(alpha_j - alpha_(j+1)) D^m Ai_n(t_max + x_j), m < 2n.
        A negative difference gives a purely imaginary component.
        """
        differences = cls.weight_differences(alpha)
        largest = cls.largest_seed(n, x, t_max)
        if largest > SEED_THRESHOLD:
            raise SeedTooLarge(
                "Ai_n is not small at t_max",
                {"t_max": t_max, "largest": largest, "threshold": SEED_THRESHOLD},
            )
        seed = np.empty((len(x), 2 * n), dtype=complex)
        for j, (x_j, difference) in enumerate(zip(x, differences)):
            root = cmath.sqrt(difference)
            for m in range(2 * n):
                seed[j, m] = root * cls.airy_derivative(n, t_max + x_j, m)
        return seed
