import logging
import math
from typing import Optional

import numpy as np
from scipy import integrate
from scipy.special import airy

from hoairy.painleve.config import (
    BVP_MAX_NODES,
    BVP_T_LEFT,
    BVP_T_RIGHT,
    BVP_TOLERANCE,
)
from hoairy.utils.exception_utils import NonConvergence

log = logging.getLogger(__name__)


class OracleService:
    """Independent n = 1, k = 1 reference: the Hastings-McLeod solution of u'' = 2u^3 + tu."""

    @staticmethod
    def left_boundary(t_left: float) -> float:
        return math.sqrt(-t_left / 2) * (1 + 1 / (8 * t_left**3))

    @staticmethod
    def initial_guess(t: np.ndarray) -> np.ndarray:
        ai, aip, _, _ = airy(t)
        left = np.sqrt(np.maximum(-t, 0.0) / 2)
        u = np.maximum(ai, left)
        return np.vstack([u, np.gradient(u, t)])

    @classmethod
    def hastings_mcleod_bvp(
        cls,
        t_left: Optional[float] = None,
        t_right: Optional[float] = None,
        nodes: int = 801,
    ):
        """Collocation solution with u(t_right) = Ai(t_right) and the left asymptotics."""
        t_left = BVP_T_LEFT if t_left is None else t_left
        t_right = BVP_T_RIGHT if t_right is None else t_right
        u_left = cls.left_boundary(t_left)
        u_right = float(airy(t_right)[0])

        def field(t, y):
            return np.vstack([y[1], 2 * y[0] ** 3 + t * y[0]])

        def boundary(y_left, y_right):
            return np.array([y_left[0] - u_left, y_right[0] - u_right])

        mesh = np.linspace(t_left, t_right, nodes)
        solution = integrate.solve_bvp(
            field,
            boundary,
            mesh,
            cls.initial_guess(mesh),
            tol=BVP_TOLERANCE,
            max_nodes=BVP_MAX_NODES,
        )
        if not solution.success:
            raise NonConvergence(
                "Collocation did not converge", {"message": solution.message}
            )
        log.debug("Hastings-McLeod collocation: %d mesh nodes", solution.x.size)
        return solution.sol
