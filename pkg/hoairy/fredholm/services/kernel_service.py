import functools
import logging
import math
from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np
from django.conf import settings
from scipy.special import airy

from hoairy.airy.contour import ContourSpec
from hoairy.airy.services.airy_service import AiryService
from hoairy.fredholm.config import (
    DOUBLE_CONTOUR_SHIFT,
    KERNEL_CACHE_SIZE,
    KERNEL_TAIL_TOLERANCE,
    Z_BASE,
    Z_NODES,
)
from hoairy.utils.exception_utils import NonConvergence
from hoairy.utils.shortcuts import gauss_legendre

log = logging.getLogger(__name__)


class DoubleContourValue(NamedTuple):
    value: float
    imag_residual: float


class KernelService:
    """K_n(x, y) = int_0^inf Ai_n(x + z) Ai_n(y + z) dz."""

    @staticmethod
    def z_node_count(z_nodes: Optional[int] = None) -> int:
        count = z_nodes or Z_NODES
        return 2 * count if settings.HOAIRY_SELF_CHECK else count

    @staticmethod
    def z_cutoff(points: Sequence[float]) -> float:
        return Z_BASE + max(0.0, -min(points))

    @classmethod
    def airy_factor(cls, n: int, points: Sequence[float], z_nodes: int):
        """Rows Ai_n(s_p + z_q) times sqrt(w_q) on the shared z-grid."""
        z, weights = gauss_legendre(z_nodes, 0.0, cls.z_cutoff(points))
        arguments = np.add.outer(np.asarray(points, dtype=float), z)
        values = AiryService.values(n, arguments).real
        tail = float(np.max(np.abs(values[:, -1]))) ** 2
        if tail > KERNEL_TAIL_TOLERANCE:
            raise NonConvergence(
                "Kernel integrand has not decayed at the z cutoff",
                {"n": n, "tail": tail, "cutoff": cls.z_cutoff(points)},
            )
        return values * np.sqrt(weights)[None, :]

    @classmethod
    @functools.lru_cache(maxsize=KERNEL_CACHE_SIZE)
    def _cached_matrix(cls, n: int, points: Tuple[float, ...], z_nodes: int):
        factor = cls.airy_factor(n, points, z_nodes)
        matrix = factor @ factor.T
        matrix = 0.5 * (matrix + matrix.T)
        matrix.setflags(write=False)
        return matrix

    @classmethod
    def kernel_matrix(
        cls, n: int, points: Sequence[float], z_nodes: Optional[int] = None
    ) -> np.ndarray:
        key = tuple(float(point) for point in points)
        count = cls.z_node_count(z_nodes)
        hits = cls._cached_matrix.cache_info().hits
        matrix = cls._cached_matrix(n, key, count)
        if cls._cached_matrix.cache_info().hits > hits:
            log.debug("kernel cache hit: n=%d, %d points", n, len(key))
        return matrix

    @classmethod
    def kernel_eval(cls, n: int, x: float, y: float, z_nodes: Optional[int] = None) -> float:
        low, high = sorted((float(x), float(y)))
        factor = cls.airy_factor(n, (low, high), cls.z_node_count(z_nodes))
        return float(np.dot(factor[0], factor[1]))

    @staticmethod
    def _shifted_contour(n: int, reach: float):
        contour = ContourSpec.default(n, reach)
        nodes, weights = contour.quadrature()
        return nodes + 1j * DOUBLE_CONTOUR_SHIFT, weights

    @classmethod
    def kernel_eval_doublecontour(cls, n: int, x: float, y: float) -> DoubleContourValue:
        """
        (i / (2 pi)^2) int int exp(i (psi(lambda; x) - psi(mu; y))) / (lambda - mu)
        with lambda on the upper contour and mu on its mirror image.
        """
        lam, lam_weights = cls._shifted_contour(n, max(abs(x), abs(y)))
        mu, mu_weights = np.conj(lam), np.conj(lam_weights)
        left = lam_weights * np.exp(1j * AiryService.phase(n, lam, x))
        right = mu_weights * np.exp(-1j * AiryService.phase(n, mu, y))
        total = left @ (1.0 / np.subtract.outer(lam, mu)) @ right
        value = 1j * total / (2 * math.pi) ** 2
        if not np.isfinite(value):
            raise NonConvergence("Double contour integral overflowed", {"x": x, "y": y})
        return DoubleContourValue(value=float(value.real), imag_residual=float(value.imag))

    @staticmethod
    def classical_airy_kernel(x: float, y: float) -> float:
        """Closed form of the n = 1 kernel through the classical Airy function."""
        ai_x, aip_x, _, _ = airy(x)
        if abs(x - y) < 1e-9:
            return float(aip_x**2 - x * ai_x**2)
        ai_y, aip_y, _, _ = airy(y)
        return float((ai_x * aip_y - aip_x * ai_y) / (x - y))
