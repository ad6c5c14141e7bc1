import logging
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np
import scipy.linalg
from django.conf import settings

from hoairy.fredholm.config import (
    HARD_CUTOFF_LENGTH,
    NYSTROM_NODES,
    SUBSTITUTION_SCALE,
    T_STEP,
)
from hoairy.fredholm.intervals import IntervalSystem
from hoairy.fredholm.services.kernel_service import KernelService
from hoairy.utils.exception_utils import (
    HoairyException,
    NumericalBreakdown,
    StencilFailure,
)
from hoairy.utils.shortcuts import gauss_legendre

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NystromSystem:
    nodes: np.ndarray
    weights: np.ndarray
    alpha_at_node: np.ndarray
    matrix: np.ndarray
    truncation: str


class StencilResult(NamedTuple):
    value: float
    error_estimate: float


class GenFnResult(NamedTuple):
    value: float
    log_value: float
    error_estimate: float
    nodes: int
    truncation: str


class NystromService:
    @staticmethod
    def node_count(nodes: Optional[int] = None) -> int:
        count = nodes or NYSTROM_NODES
        return 2 * count if settings.HOAIRY_SELF_CHECK else count

    @staticmethod
    def unbounded_nodes(lower: float, count: int, hard_cutoff: bool, scale: float = 1.0):
        if hard_cutoff:
            return gauss_legendre(count, lower, lower + HARD_CUTOFF_LENGTH)
        xi, weights = gauss_legendre(count, 0.0, 1.0)
        # s = lower - scale log(1 - xi), ds = scale dxi / (1 - xi)
        return lower - scale * np.log1p(-xi), scale * weights / (1.0 - xi)

    @classmethod
    def build_nystrom(
        cls,
        system: IntervalSystem,
        n: int,
        nodes_per_interval: Optional[int] = None,
        hard_cutoff: bool = False,
        z_nodes: Optional[int] = None,
    ) -> NystromSystem:
        count = cls.node_count(nodes_per_interval)
        points, weights, alphas = [], [], []
        for (lower, upper), alpha in zip(system.intervals(), system.weights):
            if math.isinf(upper):
                s, w = cls.unbounded_nodes(
                    lower, count, hard_cutoff, n * SUBSTITUTION_SCALE
                )
            else:
                s, w = gauss_legendre(count, lower, upper)
            points.append(s)
            weights.append(w)
            alphas.append(np.full(count, alpha))
        nodes = np.concatenate(points)
        weights = np.concatenate(weights)
        alpha_at_node = np.concatenate(alphas)
        scale = np.sqrt(alpha_at_node * weights)
        kernel = KernelService.kernel_matrix(n, nodes, z_nodes)
        matrix = np.eye(nodes.size) - scale[:, None] * kernel * scale[None, :]
        truncation = (
            f"hard cutoff at x_1 + t + {HARD_CUTOFF_LENGTH:g}"
            if hard_cutoff
            else "exponential substitution"
        )
        log.debug("Nystrom system: %d nodes, %s", nodes.size, truncation)
        return NystromSystem(
            nodes=nodes,
            weights=weights,
            alpha_at_node=alpha_at_node,
            matrix=matrix,
            truncation=truncation,
        )

    @staticmethod
    def determinant(nystrom: NystromSystem) -> float:
        if not np.all(np.isfinite(nystrom.matrix)):
            raise NumericalBreakdown("Nystrom matrix has non-finite entries", {})
        try:
            lu, pivots = scipy.linalg.lu_factor(nystrom.matrix)
        except (ValueError, np.linalg.LinAlgError) as error:
            raise NumericalBreakdown("LU factorization failed", {}) from error
        sign = -1.0 if np.count_nonzero(pivots != np.arange(pivots.size)) % 2 else 1.0
        return float(sign * np.prod(np.diag(lu)))

    @classmethod
    def gen_fn(
        cls,
        system: IntervalSystem,
        n: int,
        nodes: Optional[int] = None,
        hard_cutoff: bool = False,
        z_nodes: Optional[int] = None,
    ) -> float:
        """F_n(x + t, alpha) = det(I - sum_j alpha_j K_n restricted to A_j + t)."""
        if not any(system.weights):
            return 1.0
        return cls.determinant(
            cls.build_nystrom(system, n, nodes, hard_cutoff, z_nodes)
        )

    @classmethod
    def log_gen_fn(
        cls,
        system: IntervalSystem,
        n: int,
        nodes: Optional[int] = None,
        hard_cutoff: bool = False,
    ) -> float:
        value = cls.gen_fn(system, n, nodes, hard_cutoff)
        if not value > 0:
            raise NumericalBreakdown(
                "Determinant is not positive", dict(system.as_dict(), F=value)
            )
        return math.log(value)

    @classmethod
    def gen_fn_report(
        cls,
        system: IntervalSystem,
        n: int,
        nodes: Optional[int] = None,
        hard_cutoff: bool = False,
        z_nodes: Optional[int] = None,
    ) -> GenFnResult:
        """F with the node-doubling difference as its error estimate."""
        base = nodes or NYSTROM_NODES
        value = cls.gen_fn(system, n, base, hard_cutoff, z_nodes)
        refined = cls.gen_fn(system, n, 2 * base, hard_cutoff, z_nodes)
        if not value > 0:
            raise NumericalBreakdown(
                "Determinant is not positive", dict(system.as_dict(), F=value)
            )
        return GenFnResult(
            value=value,
            log_value=math.log(value),
            error_estimate=abs(refined - value),
            nodes=cls.node_count(base),
            truncation=(
                f"hard cutoff at x_1 + t + {HARD_CUTOFF_LENGTH:g}"
                if hard_cutoff
                else "exponential substitution"
            ),
        )

    @staticmethod
    def _stencil(function: Callable[[float], float], t: float, h: float, offsets):
        values = {}
        for offset in offsets:
            try:
                values[offset] = function(t + offset * h)
            except HoairyException as error:
                raise StencilFailure(
                    "Generating function failed on a stencil point",
                    {"t": t + offset * h, "cause": error.as_dict()},
                ) from error
        return values

    @classmethod
    def _log_evaluator(cls, system, n, nodes):
        return lambda t: cls.log_gen_fn(system.with_shift(t), n, nodes)

    @classmethod
    def log_gen_fn_d2t(
        cls,
        system: IntervalSystem,
        n: int,
        h: Optional[float] = None,
        nodes: Optional[int] = None,
    ) -> StencilResult:
        """Five point second difference of log F in t, Richardson error from step 2h."""
        h = h or T_STEP
        t = system.shift
        f = cls._stencil(cls._log_evaluator(system, n, nodes), t, h, (-4, -2, -1, 0, 1, 2, 4))

        def second(step: int) -> float:
            return (
                -f[2 * step]
                + 16 * f[step]
                - 30 * f[0]
                + 16 * f[-step]
                - f[-2 * step]
            ) / (12 * (step * h) ** 2)

        fine, coarse = second(1), second(2)
        return StencilResult(value=fine, error_estimate=abs(fine - coarse) / 15)

    @classmethod
    def log_gen_fn_dt(
        cls,
        system: IntervalSystem,
        n: int,
        h: Optional[float] = None,
        nodes: Optional[int] = None,
    ) -> StencilResult:
        h = h or T_STEP
        t = system.shift
        f = cls._stencil(cls._log_evaluator(system, n, nodes), t, h, (-4, -2, -1, 1, 2, 4))

        def first(step: int) -> float:
            return (-f[2 * step] + 8 * f[step] - 8 * f[-step] + f[-2 * step]) / (
                12 * step * h
            )

        fine, coarse = first(1), first(2)
        return StencilResult(value=fine, error_estimate=abs(fine - coarse) / 15)

    @staticmethod
    def spectrum(nystrom: NystromSystem) -> np.ndarray:
        """Eigenvalues of sqrt(alpha w) K sqrt(alpha w), ascending."""
        operator = np.eye(nystrom.nodes.size) - nystrom.matrix
        return scipy.linalg.eigvalsh(0.5 * (operator + operator.T))
