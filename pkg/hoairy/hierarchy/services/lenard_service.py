import functools
import logging
from typing import Optional

from hoairy.diffring.coefficients import I
from hoairy.diffring.ring import DiffPoly, MatDiffPoly, VecDiffPoly
from hoairy.diffring.services.bracket_service import BracketService
from hoairy.diffring.services.calculus_service import CalculusService
from hoairy.hierarchy.datatypes import HierarchyMember
from hoairy.utils.exception_utils import NotExact

log = logging.getLogger(__name__)


class LenardService:
    @staticmethod
    def _integrate(p: DiffPoly, bracket: str, entry=None) -> DiffPoly:
        try:
            return CalculusService.formal_antiderivative(p)
        except NotExact as error:
            details = dict(error.details, bracket=bracket)
            if entry is not None:
                details["entry"] = entry
            raise NotExact(f"{bracket} is not a total derivative", details) from error

    @classmethod
    def _integrate_matrix(cls, matrix: MatDiffPoly, bracket: str, antisymmetric: bool):
        k = matrix.size
        rows = [[DiffPoly.zero()] * k for _ in range(k)]
        for i in range(k):
            for j in range(i, k):
                if antisymmetric and i == j:
                    continue
                value = cls._integrate(matrix[i, j], bracket, [i + 1, j + 1])
                rows[i][j] = value
                rows[j][i] = -value if antisymmetric else value
        return MatDiffPoly(rows)

    @classmethod
    def lenard_plus(cls, v: VecDiffPoly, u: Optional[VecDiffPoly] = None) -> VecDiffPoly:
        """L+ v = i D v - i (D^-1 {u, v}) u - 2i (D^-1 <u, v>) u."""
        u = u if u is not None else VecDiffPoly.u_vector(len(v))
        integrated_inner = cls._integrate(BracketService.inner(u, v), "<u,v>")
        integrated_sym = cls._integrate_matrix(
            BracketService.sym_bracket(u, v), "{u,v}", antisymmetric=False
        )
        derivative = v.map(CalculusService.total_derivative).scale(I)
        return (
            derivative
            - integrated_sym.apply(u).scale(I)
            - u.scale(integrated_inner * (I * 2))
        )

    @classmethod
    def lenard_minus(cls, v: VecDiffPoly, u: Optional[VecDiffPoly] = None) -> VecDiffPoly:
        """L- v = i D v + i (D^-1 [u, v]) u."""
        u = u if u is not None else VecDiffPoly.u_vector(len(v))
        integrated = cls._integrate_matrix(
            BracketService.antisym_bracket(u, v), "[u,v]", antisymmetric=True
        )
        derivative = v.map(CalculusService.total_derivative).scale(I)
        return derivative + integrated.apply(u).scale(I)

    @staticmethod
    def hierarchy_rhs(k: int) -> VecDiffPoly:
        return VecDiffPoly(
            -(DiffPoly.x(j) + DiffPoly.t()) * DiffPoly.u(j) for j in range(1, k + 1)
        )

    @classmethod
    @functools.lru_cache(maxsize=None)
    def hierarchy_member(cls, n: int, k: int) -> HierarchyMember:
        if n < 1 or k < 1:
            raise ValueError(f"Hierarchy members need n >= 1 and k >= 1, got {n}, {k}")
        u = VecDiffPoly.u_vector(k)
        lhs = u
        for step in range(n):
            lhs = cls.lenard_plus(cls.lenard_minus(lhs, u), u)
            log.debug(
                "hierarchy n=%d k=%d: step %d has %d terms",
                n,
                k,
                step + 1,
                sum(len(entry) for entry in lhs),
            )
        return HierarchyMember(n=n, k=k, lhs=lhs, rhs=cls.hierarchy_rhs(k))
