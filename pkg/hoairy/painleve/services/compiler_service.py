import functools
import logging

import sympy

from hoairy.diffring.coefficients import i_power
from hoairy.diffring.ring import DiffPoly, Generator
from hoairy.diffring.serializers import DiffPolySympyConverter
from hoairy.hierarchy.datatypes import HierarchyMember
from hoairy.hierarchy.services.lenard_service import LenardService
from hoairy.painleve.datatypes import CompiledRHS

log = logging.getLogger(__name__)


class CompilerService:
    @staticmethod
    def arguments(n: int, k: int):
        """t, x_1..x_k, then D^m u_j for every component j and m < 2n."""
        return (
            (Generator.t(),)
            + tuple(Generator.x(j) for j in range(1, k + 1))
            + tuple(
                Generator.u(j, m) for j in range(1, k + 1) for m in range(2 * n)
            )
        )

    @staticmethod
    def top_derivative_expressions(member: HierarchyMember):
        """
        Residual_j = i^(2n) D^(2n) u_j + rest_j = 0 solved for the top
        derivative: D^(2n) u_j = -(-1)^n rest_j.
        """
        member.check_leading_terms()
        leading = i_power(member.order)
        sign = -1 if member.n % 2 == 0 else 1
        expressions = []
        for component, equation in enumerate(member.residual(), start=1):
            top = DiffPoly.generator(member.leading_generator(component))
            rest = equation - top.scale(leading)
            expressions.append(rest.scale(sign))
        return expressions

    @classmethod
    def compile_rhs(cls, member: HierarchyMember) -> CompiledRHS:
        arguments = cls.arguments(member.n, member.k)
        expressions = [
            DiffPolySympyConverter.to_sympy(expression)
            for expression in cls.top_derivative_expressions(member)
        ]
        symbols = [DiffPolySympyConverter.symbol(generator) for generator in arguments]
        function = sympy.lambdify(symbols, expressions, modules="numpy")
        log.debug(
            "compiled n=%d, k=%d: %d arguments", member.n, member.k, len(arguments)
        )
        return CompiledRHS(
            n=member.n, k=member.k, arguments=arguments, function=function
        )

    @classmethod
    @functools.lru_cache(maxsize=None)
    def compiled_member(cls, n: int, k: int) -> CompiledRHS:
        return cls.compile_rhs(LenardService.hierarchy_member(n, k))
