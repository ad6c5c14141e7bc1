import functools
import itertools
import logging
import math
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from hoairy.fredholm.config import ALPHA_STEP, MAX_JOINT_ORDER, STENCIL_ACCURACY
from hoairy.fredholm.intervals import IntervalSystem
from hoairy.fredholm.services.nystrom_service import NystromService
from hoairy.utils.exception_utils import ConfigError, HoairyException, StencilFailure

log = logging.getLogger(__name__)


class JointProbability(NamedTuple):
    value: float
    error_estimate: float
    terms: int


class JointProbabilityService:
    """
    P(zeta_(m_1) < x_1, ..., zeta_(m_k) < x_k) as the alternating sum of
    mixed alpha-derivatives of F at alpha = (1, ..., 1), with the derivatives
    taken by one-sided difference stencils reaching into alpha < 1.
    """

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def one_sided_stencil(order: int, accuracy: int = STENCIL_ACCURACY) -> Tuple[float, ...]:
        """Coefficients c_i with f^(order)(1) ~ h^-order sum c_i f(1 - i h)."""
        if order == 0:
            return (1.0,)
        size = order + accuracy
        offsets = -np.arange(size, dtype=float)
        vandermonde = np.vander(offsets, size, increasing=True).T
        rhs = np.zeros(size)
        rhs[order] = math.factorial(order)
        return tuple(np.linalg.solve(vandermonde, rhs))

    @staticmethod
    def admissible_indices(orders: Sequence[int]) -> Iterator[Tuple[int, ...]]:
        """All (j_1, ..., j_k) >= 0 with j_1 + ... + j_l < m_l for every l."""
        bound = orders[-1]
        for indices in itertools.product(range(bound), repeat=len(orders)):
            partial = 0
            for index, order in zip(indices, orders):
                partial += index
                if partial >= order:
                    break
            else:
                yield indices

    @staticmethod
    def validate_orders(system: IntervalSystem, orders: Sequence[int], d_alpha: float):
        if len(orders) != system.k:
            raise ConfigError(
                "One order per threshold is needed",
                {"orders": list(orders), "k": system.k},
            )
        if orders[0] < 1 or any(a >= b for a, b in zip(orders, orders[1:])):
            raise ConfigError(
                "Orders must satisfy 1 <= m_1 < ... < m_k", {"orders": list(orders)}
            )
        if orders[-1] - 1 > MAX_JOINT_ORDER:
            raise ConfigError(
                "Mixed derivatives beyond total order "
                f"{MAX_JOINT_ORDER} are not supported",
                {"orders": list(orders)},
            )
        reach = (orders[-1] - 1 + STENCIL_ACCURACY - 1) * d_alpha
        if not 0 < d_alpha or reach > 1.0:
            raise ConfigError(
                "Alpha step does not fit the stencils inside [0, 1]",
                {"d_alpha": d_alpha, "reach": reach},
            )

    @classmethod
    def mixed_derivative(
        cls,
        evaluate,
        indices: Sequence[int],
        d_alpha: float,
    ) -> float:
        stencils = [cls.one_sided_stencil(order) for order in indices]
        total = 0.0
        for offsets in itertools.product(*(range(len(s)) for s in stencils)):
            weight = 1.0
            for stencil, offset in zip(stencils, offsets):
                weight *= stencil[offset]
            total += weight * evaluate(tuple(1.0 - offset * d_alpha for offset in offsets))
        return total / d_alpha ** sum(indices)

    @classmethod
    def _sum(cls, system, n, orders, d_alpha, nodes, cache) -> Tuple[float, int]:
        def evaluate(alphas: Tuple[float, ...]) -> float:
            key = tuple(round(alpha, 14) for alpha in alphas)
            if key not in cache:
                try:
                    cache[key] = NystromService.gen_fn(
                        system.with_weights(key), n, nodes
                    )
                except HoairyException as error:
                    raise StencilFailure(
                        "Generating function failed on an alpha stencil point",
                        {"alpha": list(key), "cause": error.as_dict()},
                    ) from error
            return cache[key]

        total = 0.0
        count = 0
        for indices in cls.admissible_indices(orders):
            sign = -1.0 if sum(indices) % 2 else 1.0
            denominator = math.prod(math.factorial(j) for j in indices)
            total += sign / denominator * cls.mixed_derivative(evaluate, indices, d_alpha)
            count += 1
        return total, count

    @classmethod
    def joint_prob(
        cls,
        system: IntervalSystem,
        n: int,
        orders: Sequence[int],
        d_alpha: Optional[float] = None,
        nodes: Optional[int] = None,
    ) -> JointProbability:
        d_alpha = d_alpha or ALPHA_STEP
        orders = tuple(int(order) for order in orders)
        cls.validate_orders(system, orders, d_alpha)
        cache: Dict[Tuple[float, ...], float] = {}
        value, terms = cls._sum(system, n, orders, d_alpha, nodes, cache)
        # The halved step always fits when the full step does.
        refined, _ = cls._sum(system, n, orders, d_alpha / 2, nodes, cache)
        log.debug(
            "joint probability orders=%s: %d terms, %d determinants",
            orders,
            terms,
            len(cache),
        )
        return JointProbability(
            value=refined, error_estimate=abs(refined - value), terms=terms
        )

    @classmethod
    def polynomial_fit_derivatives(
        cls,
        system: IntervalSystem,
        n: int,
        degree: int = 12,
        samples: int = 25,
        nodes: Optional[int] = None,
    ) -> List[float]:
        """
        Derivatives of F(alpha) at alpha = 1 for k = 1 from a least-squares
        polynomial fit on [0, 1]; an independent route for small checks.
        """
        if system.k != 1:
            raise ConfigError("The polynomial fit covers k = 1 only", {"k": system.k})
        grid = np.linspace(0.0, 1.0, samples)
        values = [NystromService.gen_fn(system.with_weights((alpha,)), n, nodes) for alpha in grid]
        polynomial = np.polynomial.Polynomial.fit(grid, values, degree)
        return [float(polynomial.deriv(order)(1.0)) for order in range(degree + 1)]
