import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from hoairy.airy.config import NODES_PER_RAY, RADIUS_BASE, RADIUS_SCALE
from hoairy.utils.exception_utils import ConfigError, SectorViolation
from hoairy.utils.shortcuts import gauss_legendre


@dataclass(frozen=True)
class ContourSpec:
    """
    Two rays through the origin: in from infinity along angle_in, out to
    infinity along angle_out, both truncated at radius.
    """

    n: int
    angle_in: float
    angle_out: float
    radius: float
    nodes_per_ray: int = NODES_PER_RAY

    @staticmethod
    def default_radius(n: int, x: float = 0.0) -> float:
        return RADIUS_BASE + RADIUS_SCALE * abs(x) ** (1.0 / (2 * n))

    @classmethod
    def default(
        cls, n: int, x: float = 0.0, nodes_per_ray: Optional[int] = None
    ) -> "ContourSpec":
        half_sector = math.pi / (2 * (2 * n + 1))
        return cls(
            n=n,
            angle_in=math.pi - half_sector,
            angle_out=half_sector,
            radius=cls.default_radius(n, x),
            nodes_per_ray=nodes_per_ray or NODES_PER_RAY,
        )

    def sectors(self) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        order = 2 * self.n + 1
        return (
            (2 * self.n * math.pi / order, math.pi),
            (0.0, math.pi / order),
        )

    def validate(self):
        if self.n < 1:
            raise ConfigError("Airy order must be at least 1", {"n": self.n})
        (in_low, in_high), (out_low, out_high) = self.sectors()
        if not in_low < self.angle_in < in_high:
            raise SectorViolation(
                "Incoming ray leaves its decay sector",
                {"angle_in": self.angle_in, "sector": [in_low, in_high]},
            )
        if not out_low < self.angle_out < out_high:
            raise SectorViolation(
                "Outgoing ray leaves its decay sector",
                {"angle_out": self.angle_out, "sector": [out_low, out_high]},
            )
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ConfigError("Contour radius must be positive", {"radius": self.radius})
        if self.nodes_per_ray < 1:
            raise ConfigError(
                "Contour needs nodes on each ray", {"nodes_per_ray": self.nodes_per_ray}
            )

    def quadrature(self) -> Tuple[np.ndarray, np.ndarray]:
        """Nodes on the contour and complex weights including dlambda and orientation."""
        radii, weights = gauss_legendre(self.nodes_per_ray, 0.0, self.radius)
        outgoing = np.exp(1j * self.angle_out)
        incoming = np.exp(1j * self.angle_in)
        nodes = np.concatenate([radii * outgoing, radii * incoming])
        contour_weights = np.concatenate([weights * outgoing, -weights * incoming])
        return nodes, contour_weights

    def endpoints(self) -> np.ndarray:
        return self.radius * np.exp(1j * np.array([self.angle_out, self.angle_in]))

    def scaled(self, factor: int) -> "ContourSpec":
        return ContourSpec(
            n=self.n,
            angle_in=self.angle_in,
            angle_out=self.angle_out,
            radius=self.radius,
            nodes_per_ray=self.nodes_per_ray * factor,
        )
