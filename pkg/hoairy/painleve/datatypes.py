from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from hoairy.diffring.ring import Generator


@dataclass(frozen=True)
class CompiledRHS:
    """
    Top derivatives D^(2n) u_j as a numeric function of t, the thresholds and
    the lower derivatives. The state is laid out component by component:
    (u_1, Du_1, ..., D^(2n-1) u_1, u_2, ...).
    """

    n: int
    k: int
    arguments: Tuple[Generator, ...]
    function: Callable

    @property
    def order(self) -> int:
        return 2 * self.n

    @property
    def dimension(self) -> int:
        return self.order * self.k

    def top_derivatives(self, t: float, x: Sequence[float], state) -> np.ndarray:
        state = np.asarray(state, dtype=complex).reshape(self.k, self.order)
        values = [complex(t)] + [complex(value) for value in x] + list(state.ravel())
        return np.asarray(self.function(*values), dtype=complex).reshape(self.k)

    def vector_field(self, x: Sequence[float]) -> Callable:
        """f(t, y) of the first order system y' = f(t, y) for fixed thresholds."""
        x = tuple(float(value) for value in x)
        order, k = self.order, self.k

        def field(t, y):
            state = y.reshape(k, order)
            derivative = np.empty_like(state)
            derivative[:, :-1] = state[:, 1:]
            derivative[:, -1] = self.function(t, *x, *state.ravel())
            return derivative.ravel()

        return field


@dataclass(frozen=True)
class SolutionGrid:
    """
    u(t) = u(n, x + t, alpha) on a grid descending from t_max to t_min.
    values[i, j, m] holds D^m u_(j+1) at t[i]. Trust holds on t >= t_trust.
    """

    n: int
    k: int
    x: Tuple[float, ...]
    alpha: Tuple[float, ...]
    t: np.ndarray
    values: np.ndarray
    rtol: float
    atol: float
    t_trust: float
    # "real" or "imaginary" per component, from the sign of alpha_j - alpha_(j+1).
    reality: Tuple[str, ...]
    dense: Optional[Callable] = None

    @property
    def t_max(self) -> float:
        return float(self.t[0])

    @property
    def t_min(self) -> float:
        return float(self.t[-1])

    @property
    def u(self) -> np.ndarray:
        return self.values[:, :, 0]

    def trusted(self) -> np.ndarray:
        return self.t >= self.t_trust

    def inner(self) -> np.ndarray:
        """<u, u> = sum_j u_j^2, bilinear: imaginary components count negatively."""
        return np.sum(self.u * self.u, axis=1)

    def u_at(self, t: float) -> np.ndarray:
        index = int(np.argmin(np.abs(self.t - t)))
        if abs(self.t[index] - t) < 1e-9:
            return self.u[index]
        if self.dense is None:
            raise ValueError(f"t = {t} is not a grid point and no dense output is kept")
        return self.dense(t).reshape(self.k, 2 * self.n)[:, 0]
