import logging
from typing import Optional, Sequence

import numpy as np
from scipy import integrate

from hoairy.painleve.config import (
    ATOL,
    ATOL_FLOOR,
    REALITY_TOLERANCE,
    REPORT_STEP,
    RTOL,
    T_MAX_AGREEMENT,
    T_MAX_LIMIT,
    T_MIN,
    TIGHTENING,
    TRUST_AGREEMENT,
)
from hoairy.painleve.datatypes import CompiledRHS, SolutionGrid
from hoairy.painleve.services.compiler_service import CompilerService
from hoairy.painleve.services.seed_service import SeedService
from hoairy.utils.exception_utils import (
    ConfigError,
    SeedTooLarge,
    StepFailure,
    TrustWindowEmpty,
)

log = logging.getLogger(__name__)


class IntegrationService:
    @staticmethod
    def report_grid(t_max: float, t_min: float) -> np.ndarray:
        if not t_min < t_max:
            raise ConfigError("t_min must lie below t_max", {"t_min": t_min, "t_max": t_max})
        count = int(round((t_max - t_min) / REPORT_STEP)) + 1
        return np.linspace(t_max, t_min, count)

    @staticmethod
    def absolute_tolerances(rhs: CompiledRHS, seed: np.ndarray, rtol: float, atol: float):
        """atol per state entry, capped at rtol times the largest seed entry of its component."""
        scale = np.max(np.abs(seed.reshape(rhs.k, rhs.order)), axis=1)
        capped = np.clip(rtol * scale, ATOL_FLOOR, atol)
        return np.repeat(capped, rhs.order)

    @classmethod
    def run(cls, rhs: CompiledRHS, x, seed: np.ndarray, grid: np.ndarray, rtol: float, atol: float):
        solution = integrate.solve_ivp(
            rhs.vector_field(x),
            (grid[0], grid[-1]),
            seed.ravel().astype(complex),
            method="DOP853",
            t_eval=grid,
            rtol=rtol,
            atol=cls.absolute_tolerances(rhs, seed, rtol, atol),
            dense_output=True,
        )
        if not solution.success or solution.y.shape[1] != grid.size:
            raise StepFailure(
                "Backward integration stopped early",
                {"message": solution.message, "t_reached": float(solution.t[-1])},
            )
        if not np.all(np.isfinite(solution.y)):
            raise StepFailure("Solution left the finite range", {})
        log.debug(
            "DOP853 rtol=%g: %d evaluations, %d steps",
            rtol,
            solution.nfev,
            solution.sol.n_segments if solution.sol is not None else 0,
        )
        return solution

    @staticmethod
    def reality_pattern(alpha: Sequence[float]):
        padded = tuple(alpha) + (0.0,)
        return tuple(
            "real" if padded[j] > padded[j + 1] else "imaginary"
            for j in range(len(alpha))
        )

    @staticmethod
    def pattern_holds(u: np.ndarray, reality, scale: np.ndarray) -> np.ndarray:
        """Per grid point: every component is real or imaginary as its pattern says."""
        off = np.where(
            np.array([kind == "real" for kind in reality])[None, :],
            np.abs(u.imag),
            np.abs(u.real),
        )
        return np.all(off <= REALITY_TOLERANCE * scale[None, :], axis=1)

    @classmethod
    def trust_boundary(cls, grid, coarse, fine, reality) -> float:
        """Smallest t such that every grid point in [t, t_max] passes both checks."""
        k = len(reality)
        u_coarse = coarse.reshape(k, -1, grid.size)[:, 0, :].T
        u_fine = fine.reshape(k, -1, grid.size)[:, 0, :].T
        agree = np.max(np.abs(u_coarse - u_fine), axis=1) <= TRUST_AGREEMENT
        scale = np.maximum(np.max(np.abs(u_coarse), axis=0), np.finfo(float).tiny)
        good = agree & cls.pattern_holds(u_coarse, reality, scale)
        bad = np.flatnonzero(~good)
        if bad.size == 0:
            return float(grid[-1])
        if bad[0] <= 1:
            raise TrustWindowEmpty(
                "Tightened re-run disagrees right at t_max",
                {"t": float(grid[bad[0]])},
            )
        return float(grid[bad[0] - 1])

    @classmethod
    def integrate(
        cls,
        rhs: CompiledRHS,
        x: Sequence[float],
        alpha: Sequence[float],
        seed: np.ndarray,
        t_max: float,
        t_min: float = T_MIN,
        rtol: Optional[float] = None,
        atol: Optional[float] = None,
    ) -> SolutionGrid:
        rtol = rtol or RTOL
        atol = atol or ATOL
        grid = cls.report_grid(t_max, t_min)
        coarse = cls.run(rhs, x, seed, grid, rtol, atol)
        fine = cls.run(rhs, x, seed, grid, rtol * TIGHTENING, atol * TIGHTENING)
        reality = cls.reality_pattern(alpha)
        t_trust = cls.trust_boundary(grid, coarse.y, fine.y, reality)
        if t_trust > t_min:
            log.warning(
                "trust window [%g, %g] is shorter than the requested [%g, %g]",
                t_trust,
                t_max,
                t_min,
                t_max,
            )
        log.debug("trust window [%g, %g]", t_trust, t_max)
        values = coarse.y.reshape(rhs.k, rhs.order, grid.size).transpose(2, 0, 1)
        return SolutionGrid(
            n=rhs.n,
            k=rhs.k,
            x=tuple(float(value) for value in x),
            alpha=tuple(float(value) for value in alpha),
            t=grid,
            values=values,
            rtol=rtol,
            atol=atol,
            t_trust=t_trust,
            reality=reality,
            dense=coarse.sol,
        )

    @classmethod
    def solve(
        cls,
        n: int,
        x: Sequence[float],
        alpha: Sequence[float],
        t_min: Optional[float] = None,
        t_max: Optional[float] = None,
        rtol: Optional[float] = None,
        atol: Optional[float] = None,
    ) -> SolutionGrid:
        """
        Seed at t_max from the Airy asymptotics and integrate down to t_min.
        Without a fixed t_max the start is raised in unit steps until one more
        unit moves u by less than T_MAX_AGREEMENT on the trust window.
        """
        rhs = CompilerService.compiled_member(n, len(x))
        t_min = T_MIN if t_min is None else t_min
        fixed = t_max is not None
        t_max = SeedService.resolve_t_max(n, x, alpha, t_max)

        def run_from(start: float) -> SolutionGrid:
            seed = SeedService.seed_from_asymptotics(n, x, alpha, start)
            return cls.integrate(rhs, x, alpha, seed, start, t_min, rtol, atol)

        grid = run_from(t_max)
        if fixed:
            return grid
        while True:
            raised = run_from(t_max + 1.0)
            shift = cls.t_max_shift(grid, raised)
            if shift <= T_MAX_AGREEMENT:
                log.debug("t_max %g converged, shift %.3g", t_max, shift)
                return grid
            log.warning("t_max %g moves u by %.3g, raising it", t_max, shift)
            t_max += 1.0
            if t_max + 1.0 > T_MAX_LIMIT:
                raise SeedTooLarge(
                    "Solution did not settle in t_max below the limit",
                    {"limit": T_MAX_LIMIT, "shift": shift, "x": list(x)},
                )
            grid = raised

    @staticmethod
    def t_max_shift(grid: SolutionGrid, raised: SolutionGrid) -> float:
        """Largest change of u between two starts on the points both trust."""
        mask = grid.trusted() & (grid.t >= raised.t_trust)
        if not np.any(mask):
            return float("inf")
        moved = [np.max(np.abs(raised.u_at(t) - u)) for t, u in zip(grid.t[mask], grid.u[mask])]
        return float(max(moved))
