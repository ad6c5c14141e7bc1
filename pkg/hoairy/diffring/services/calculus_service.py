import logging
from typing import Dict, List

from hoairy.diffring.coefficients import ONE, ZERO, is_zero
from hoairy.diffring.ring import (
    DiffPoly,
    Generator,
    GeneratorKind,
    Monomial,
)
from hoairy.utils.exception_utils import NotExact

log = logging.getLogger(__name__)


class CalculusService:
    @staticmethod
    def total_derivative(p: DiffPoly) -> DiffPoly:
        terms: Dict[Monomial, object] = {}
        for monomial, coefficient in p.items():
            powers = dict(monomial)
            for generator, power in monomial:
                if generator.kind == GeneratorKind.X:
                    continue
                rest = dict(powers)
                if power == 1:
                    del rest[generator]
                else:
                    rest[generator] = power - 1
                if generator.kind == GeneratorKind.U:
                    lifted = Generator.u(generator.index, generator.order + 1)
                    rest[lifted] = rest.get(lifted, 0) + 1
                key = tuple(sorted(rest.items()))
                total = terms.get(key, ZERO) + coefficient * power
                if is_zero(total):
                    terms.pop(key, None)
                else:
                    terms[key] = total
        return DiffPoly._from_clean(terms)

    @classmethod
    def nth_derivative(cls, p: DiffPoly, times: int) -> DiffPoly:
        for _ in range(times):
            p = cls.total_derivative(p)
        return p

    @classmethod
    def euler_operator(cls, p: DiffPoly, component: int) -> DiffPoly:
        """Variational derivative: sum over m of (-D)^m applied to dp/du_j^(m)."""
        orders = sorted(
            g.order for g in p.u_generators() if g.index == component
        )
        result = DiffPoly.zero()
        for order in orders:
            term = cls.nth_derivative(p.partial(Generator.u(component, order)), order)
            result = result + (term if order % 2 == 0 else -term)
        return result

    @classmethod
    def components_of(cls, p: DiffPoly) -> List[int]:
        return sorted({g.index for g in p.u_generators()})

    @classmethod
    def is_exact(cls, p: DiffPoly) -> bool:
        return all(
            cls.euler_operator(p, component).is_zero()
            for component in cls.components_of(p)
        )

    @classmethod
    def check_exact(cls, p: DiffPoly):
        for component in cls.components_of(p):
            variational = cls.euler_operator(p, component)
            if not variational.is_zero():
                from hoairy.diffring.serializers import DiffPolyTextSerializer

                raise NotExact(
                    f"Polynomial is not a total derivative: the variational "
                    f"derivative with respect to u{component} does not vanish",
                    {
                        "component": component,
                        "variational_derivative": DiffPolyTextSerializer.dumps(
                            variational
                        ),
                    },
                )

    @classmethod
    def formal_antiderivative(cls, p: DiffPoly, check: bool = True) -> DiffPoly:
        """
        Left inverse of the total derivative on its image.

        The highest derivative is peeled off one generator at a time: if p is
        exact, its terms containing the top generator u_j^(m) are linear in it,
        and integrating their cofactor in u_j^(m-1) recovers the part of the
        antiderivative that depends on u_j^(m-1). Polynomials in t and x are
        integrated in t at the end. The result has no constant term.
        """
        if check:
            cls.check_exact(p)
        remainder = p
        antiderivative = DiffPoly.zero()
        # Each pass removes the current top generator, so the loop is bounded
        # by the number of u generators that can appear.
        budget = 4 * (len(p.u_generators()) + 1) * (p.max_order() + 2)
        while remainder.u_generators():
            budget -= 1
            if budget < 0:
                raise NotExact("Antiderivative did not terminate", {})
            top = max(remainder.u_generators(), key=lambda g: (g.order, g.index))
            if top.order == 0:
                cls._not_exact_at(top, remainder)
            with_top, _ = remainder.split_by(
                lambda monomial: any(g == top for g, _ in monomial)
            )
            if with_top.degree_in(top) > 1:
                cls._not_exact_at(top, remainder)
            cofactor = with_top.partial(top)
            if any(g.order >= top.order for g in cofactor.u_generators()):
                cls._not_exact_at(top, remainder)
            piece = cofactor.integrate_wrt(Generator.u(top.index, top.order - 1))
            antiderivative = antiderivative + piece
            remainder = remainder - cls.total_derivative(piece)
        antiderivative = antiderivative + remainder.integrate_wrt(Generator.t())
        log.debug("antiderivative with %d terms", len(antiderivative))
        return antiderivative

    @staticmethod
    def _not_exact_at(top: Generator, remainder: DiffPoly):
        from hoairy.diffring.serializers import DiffPolyTextSerializer

        raise NotExact(
            f"Polynomial is not a total derivative at generator {top.name}",
            {"generator": top.name, "remainder": DiffPolyTextSerializer.dumps(remainder)},
        )

    @staticmethod
    def derivative_of_generator(generator: Generator) -> DiffPoly:
        if generator.kind == GeneratorKind.U:
            return DiffPoly.u(generator.index, generator.order + 1)
        if generator.kind == GeneratorKind.T:
            return DiffPoly.constant(ONE)
        return DiffPoly.zero()
