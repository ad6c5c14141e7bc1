import logging
import math
from typing import NamedTuple, Optional

import numpy as np

from hoairy.airy.config import (
    BATCH_SIZE,
    CANCELLATION_TOLERANCE,
    MAX_ARGUMENT,
    REALITY_TOLERANCE,
    SADDLE_DEPTH,
    SADDLE_FROM,
    SADDLE_NODES,
    SADDLE_PAD,
    SADDLE_REACH,
    SADDLE_SCAN,
    TAIL_TOLERANCE,
)
from hoairy.airy.contour import ContourSpec
from hoairy.utils.exception_utils import ConfigError, NonConvergence
from hoairy.utils.shortcuts import gauss_legendre

log = logging.getLogger(__name__)

_EPSILON = np.finfo(float).eps


class AiryValue(NamedTuple):
    value: float
    imag_residual: float
    tail: float
    cancellation: float


class AiryService:
    @staticmethod
    def phase(n: int, lam, t):
        """psi_n(lambda; t) = lambda^(2n+1) / (2n+1) + lambda t."""
        order = 2 * n + 1
        return lam**order / order + lam * t

    @classmethod
    def tail_bound(cls, contour: ContourSpec, x: float, m: int) -> float:
        """
        Integrand size at the truncation radius divided by the decay rate of
        |exp(i psi)| along each ray, summed over both rays.
        """
        order = 2 * contour.n + 1
        total = 0.0
        for angle, endpoint in zip(
            (contour.angle_out, contour.angle_in), contour.endpoints()
        ):
            rate = contour.radius ** (2 * contour.n) * math.sin(order * angle) + x * math.sin(angle)
            if rate <= 0:
                return math.inf
            size = abs(endpoint) ** m * abs(np.exp(1j * cls.phase(contour.n, endpoint, x)))
            total += size / rate
        return total / (2 * math.pi)

    @classmethod
    def values(
        cls,
        n: int,
        xs,
        m: int = 0,
        contour: Optional[ContourSpec] = None,
        with_cancellation: bool = False,
    ):
        """
        Complex quadrature of (1/2pi) (i lambda)^m exp(i psi_n(lambda; x)) for
        every x in xs. No range or reality checks; callers that need them use
        quadrature().
        """
        xs = np.asarray(xs, dtype=float)
        flat = xs.ravel()
        if contour is None:
            reach = float(np.max(np.abs(flat))) if flat.size else 0.0
            contour = ContourSpec.default(n, reach)
        nodes, weights = contour.quadrature()
        order = 2 * n + 1
        base = 1j * nodes**order / order
        factor = weights * (1j * nodes) ** m / (2 * math.pi)
        result = np.empty(flat.shape, dtype=complex)
        cancellation = np.empty(flat.shape, dtype=float)
        for start in range(0, flat.size, BATCH_SIZE):
            batch = flat[start : start + BATCH_SIZE]
            integrand = np.exp(base[None, :] + 1j * np.outer(batch, nodes))
            terms = integrand * factor[None, :]
            result[start : start + BATCH_SIZE] = terms.sum(axis=1)
            cancellation[start : start + BATCH_SIZE] = (
                np.abs(terms).sum(axis=1) * _EPSILON
            )
        if with_cancellation:
            return result.reshape(xs.shape), cancellation.reshape(xs.shape)
        return result.reshape(xs.shape)

    @classmethod
    def quadrature(
        cls, n: int, x: float, m: int = 0, contour: Optional[ContourSpec] = None
    ) -> AiryValue:
        contour = contour or ContourSpec.default(n, x)
        contour.validate()
        if x > MAX_ARGUMENT:
            raise NonConvergence(
                "Argument beyond the working range of the contour quadrature",
                {"n": n, "x": x, "max": MAX_ARGUMENT},
            )
        value, cancellation = cls.values(
            n, [x], m, contour=contour, with_cancellation=True
        )
        value = complex(value[0])
        cancellation = float(cancellation[0])
        tail = cls.tail_bound(contour, x, m)
        log.debug(
            "Ai_%d^(%d)(%s): radius %s, tail %.3g, cancellation %.3g",
            n,
            m,
            x,
            contour.radius,
            tail,
            cancellation,
        )
        details = {"n": n, "x": x, "m": m}
        if tail > TAIL_TOLERANCE:
            raise NonConvergence("Contour tail is too large", dict(details, tail=tail))
        if cancellation > CANCELLATION_TOLERANCE:
            raise NonConvergence(
                "Cancellation in the contour sum is too large",
                dict(details, cancellation=cancellation),
            )
        if abs(value.imag) > REALITY_TOLERANCE:
            raise NonConvergence(
                "Quadrature has an imaginary part",
                dict(details, imag_residual=value.imag),
            )
        return AiryValue(
            value=value.real,
            imag_residual=value.imag,
            tail=tail,
            cancellation=cancellation,
        )

    @classmethod
    def ai_n(cls, n: int, x: float, contour: Optional[ContourSpec] = None) -> float:
        return cls.quadrature(n, x, 0, contour).value

    @classmethod
    def ai_n_deriv(
        cls, n: int, x: float, m: int, contour: Optional[ContourSpec] = None
    ) -> float:
        return cls.quadrature(n, x, m, contour).value

    @classmethod
    def saddle_quadrature(
        cls, n: int, x: float, m: int = 0, nodes: Optional[int] = None
    ) -> AiryValue:
        """
        Ai_n^(m)(x) for positive x along the horizontal line through the saddle
        point x^(1/2n) exp(i pi / 2n). The integrand does not cancel near its
        peak there, so exponentially small values keep their relative accuracy.
        """
        if x < SADDLE_FROM:
            raise ConfigError(
                "Saddle point quadrature needs a positive argument",
                {"x": x, "min": SADDLE_FROM},
            )
        nodes = nodes or SADDLE_NODES
        root = x ** (1.0 / (2 * n))
        height = root * math.sin(math.pi / (2 * n))
        scan = np.linspace(0.0, root * math.cos(math.pi / (2 * n)) + SADDLE_REACH, SADDLE_SCAN)
        line = scan + 1j * height
        size = (1j * cls.phase(n, line, x)).real + m * np.log(np.abs(line))
        floor = float(size.max()) - SADDLE_DEPTH
        details = {"n": n, "x": x, "m": m}
        if size[-1] > floor:
            raise NonConvergence("Saddle line integrand has not decayed", details)
        half_width = float(scan[np.flatnonzero(size >= floor)[-1]]) + SADDLE_PAD
        s, weights = gauss_legendre(nodes, 0.0, half_width)
        # The mirrored half line carries the complex conjugate integrand.
        points = np.concatenate([s, -s]) + 1j * height
        terms = (
            np.concatenate([weights, weights])
            * (1j * points) ** m
            * np.exp(1j * cls.phase(n, points, x))
            / (2 * math.pi)
        )
        value = complex(terms.sum())
        magnitude = float(np.abs(terms).sum())
        log.debug(
            "saddle Ai_%d^(%d)(%s): half width %.3g, height %.3g", n, m, x, half_width, height
        )
        if abs(value.imag) > REALITY_TOLERANCE * magnitude:
            raise NonConvergence(
                "Saddle quadrature has an imaginary part",
                dict(details, imag_residual=value.imag),
            )
        return AiryValue(
            value=value.real,
            imag_residual=value.imag,
            tail=math.exp(floor),
            cancellation=magnitude * _EPSILON,
        )
