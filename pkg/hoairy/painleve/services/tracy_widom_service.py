import logging
from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

from hoairy.airy.services.airy_service import AiryService
from hoairy.fredholm.intervals import IntervalSystem
from hoairy.fredholm.services.nystrom_service import NystromService
from hoairy.painleve.config import (
    ROUTE_TOLERANCE,
    TAIL_LENGTH,
    TAIL_NODES,
    TAIL_TOLERANCE,
)
from hoairy.painleve.datatypes import SolutionGrid
from hoairy.painleve.services.integration_service import IntegrationService
from hoairy.painleve.services.seed_service import SeedService
from hoairy.utils.exception_utils import TailTooLarge, TrustWindowEmpty
from hoairy.utils.shortcuts import gauss_legendre

log = logging.getLogger(__name__)


class RouteComparison(NamedTuple):
    log_F_fredholm: float
    log_F_painleve: float
    abs_diff: float
    trust_window: Tuple[float, float]
    t_max: float

    @property
    def passed(self) -> bool:
        return self.abs_diff <= ROUTE_TOLERANCE


class TracyWidomService:
    @staticmethod
    def tail_moments(grid: SolutionGrid, tail_from: float) -> Tuple[float, float]:
        """
        int_T^inf <u, u> ds and int_T^inf s <u, u> ds for T = tail_from with
        u_j replaced by its asymptotics sqrt(alpha_j - alpha_(j+1)) Ai_n(s + x_j).
        """
        s, weights = gauss_legendre(TAIL_NODES, tail_from, tail_from + TAIL_LENGTH)
        differences = SeedService.weight_differences(grid.alpha)
        inner = np.zeros_like(s)
        for x_j, difference in zip(grid.x, differences):
            inner += difference * AiryService.values(grid.n, s + x_j).real ** 2
        zeroth = float(np.dot(weights, inner))
        first = float(np.dot(weights, s * inner))
        if abs(first) > TAIL_TOLERANCE or abs(zeroth) > TAIL_TOLERANCE:
            raise TailTooLarge(
                "Tail beyond the integration grid is too large",
                {"tail_from": tail_from, "tail": first},
            )
        return zeroth, first

    @staticmethod
    def _ascending(grid: SolutionGrid, t_from: float):
        keep = grid.trusted() & (grid.t >= t_from - 1e-12)
        t = grid.t[keep][::-1]
        # The imaginary part of <u, u> vanishes under the reality pattern.
        inner = grid.inner().real[keep][::-1]
        return t, inner

    @classmethod
    def tw_integral(cls, grid: SolutionGrid, tail_from: Optional[float] = None) -> float:
        """log F(x, alpha) = -int_0^inf t <u(t), u(t)> dt."""
        if grid.t_trust > 0 or grid.t_min > 0:
            raise TrustWindowEmpty(
                "The trusted part of the grid does not reach t = 0",
                {"t_trust": grid.t_trust, "t_min": grid.t_min},
            )
        tail_from = grid.t_max if tail_from is None else tail_from
        t, inner = cls._ascending(grid, 0.0)
        keep = t <= tail_from + 1e-12
        t, inner = t[keep], inner[keep]
        body = integrate.simpson(y=t * inner, x=t)
        _, tail = cls.tail_moments(grid, float(t[-1]))
        log.debug("tw integral: body %.3g, tail %.3g", body, tail)
        return float(-(body + tail))

    @classmethod
    def tw_profile(cls, grid: SolutionGrid) -> Tuple[np.ndarray, np.ndarray]:
        """
        log F(x + t) = -int_t^inf (s - t) <u(s), u(s)> ds on every trusted
        grid point, returned with t ascending.
        """
        t, inner = cls._ascending(grid, grid.t_trust)
        zeroth_tail, first_tail = cls.tail_moments(grid, float(t[-1]))
        zeroth = integrate.cumulative_simpson(inner, x=t, initial=0.0)
        first = integrate.cumulative_simpson(t * inner, x=t, initial=0.0)
        # Integrals from each grid point to the top of the grid, plus the tail.
        zeroth = zeroth[-1] - zeroth + zeroth_tail
        first = first[-1] - first + first_tail
        return t, -(first - t * zeroth)

    @classmethod
    def verify_route(
        cls,
        n: int,
        x: Sequence[float],
        alpha: Sequence[float],
        t_max: Optional[float] = None,
        nodes: Optional[int] = None,
        rtol: Optional[float] = None,
        atol: Optional[float] = None,
    ) -> RouteComparison:
        """log F from the Fredholm determinant against the Painleve integral."""
        system = IntervalSystem.create(x, alpha)
        log_fredholm = NystromService.log_gen_fn(system, n, nodes)
        grid = IntegrationService.solve(
            n, x, alpha, t_min=0.0, t_max=t_max, rtol=rtol, atol=atol
        )
        log_painleve = cls.tw_integral(grid)
        difference = abs(log_fredholm - log_painleve)
        log.info(
            "route comparison n=%d x=%s alpha=%s: %.3g", n, list(x), list(alpha), difference
        )
        return RouteComparison(
            log_F_fredholm=log_fredholm,
            log_F_painleve=log_painleve,
            abs_diff=difference,
            trust_window=(grid.t_trust, grid.t_max),
            t_max=grid.t_max,
        )
