from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.domains import QQ_I

from hoairy.diffring.coefficients import (
    ONE,
    ZERO,
    format_coefficient,
    gaussian,
    imag_part,
    real_part,
    split_sign,
)
from hoairy.diffring.ring import (
    DiffPoly,
    Generator,
    GeneratorKind,
    MatDiffPoly,
    Monomial,
    VecDiffPoly,
)
from hoairy.utils.exception_utils import ConfigError

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _format_monomial(monomial: Monomial) -> str:
    return "*".join(
        generator.name if power == 1 else f"{generator.name}^{power}"
        for generator, power in monomial
    )


class DiffPolyTextSerializer:
    """Canonical text such as `(3/2)*i*u1^2*Du2 + t*u1`."""

    @staticmethod
    def dumps(p: DiffPoly) -> str:
        if p.is_zero():
            return "0"
        pieces: List[str] = []
        for position, (monomial, coefficient) in enumerate(p.sorted_terms()):
            negative, magnitude = split_sign(coefficient)
            if magnitude == ONE and monomial:
                body = _format_monomial(monomial)
            else:
                text = format_coefficient(magnitude)
                if "/" in text and not text.startswith("("):
                    text = f"({text})"
                body = f"{text}*{_format_monomial(monomial)}" if monomial else text
            if position == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    @staticmethod
    def loads(text: str) -> DiffPoly:
        try:
            expression = parse_expr(
                text,
                local_dict={"i": sympy.I},
                transformations=_TRANSFORMATIONS,
            )
        except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as error:
            raise ConfigError(
                "Could not parse differential polynomial", {"text": text}
            ) from error
        return DiffPolySympyConverter.from_sympy(expression)


class DiffPolyJsonSerializer:
    @staticmethod
    def dumps(p: DiffPoly) -> List[Dict[str, Any]]:
        return [
            {
                "coeff_re": str(real_part(coefficient)),
                "coeff_im": str(imag_part(coefficient)),
                "monomial": [[generator.name, power] for generator, power in monomial],
            }
            for monomial, coefficient in p.sorted_terms()
        ]

    @staticmethod
    def loads(data: Sequence[Dict[str, Any]]) -> DiffPoly:
        terms = {}
        try:
            for term in data:
                monomial = tuple(
                    (Generator.from_name(name), int(power))
                    for name, power in term["monomial"]
                )
                coefficient = gaussian(
                    Fraction(term["coeff_re"]), Fraction(term["coeff_im"])
                )
                terms[monomial] = terms.get(monomial, ZERO) + coefficient
        except (KeyError, TypeError, ValueError) as error:
            raise ConfigError("Malformed differential polynomial JSON", {}) from error
        return DiffPoly(terms)

    @classmethod
    def dumps_vector(cls, vector: VecDiffPoly) -> List[List[Dict[str, Any]]]:
        return [cls.dumps(entry) for entry in vector]

    @classmethod
    def dumps_matrix(cls, matrix: MatDiffPoly) -> List[List[List[Dict[str, Any]]]]:
        return [[cls.dumps(entry) for entry in row] for row in matrix.rows()]


class DiffPolySympyConverter:
    @staticmethod
    def symbol(generator: Generator) -> sympy.Symbol:
        return sympy.Symbol(generator.name)

    @classmethod
    def to_sympy(cls, p: DiffPoly) -> sympy.Expr:
        total = sympy.Integer(0)
        for monomial, coefficient in p.sorted_terms():
            term = QQ_I.to_sympy(coefficient)
            for generator, power in monomial:
                term = term * cls.symbol(generator) ** power
            total = total + term
        return total

    @staticmethod
    def from_sympy(expression: sympy.Expr) -> DiffPoly:
        expression = sympy.expand(sympy.sympify(expression))
        symbols = sorted(expression.free_symbols, key=lambda s: s.name)
        try:
            generators = [Generator.from_name(symbol.name) for symbol in symbols]
        except ValueError as error:
            raise ConfigError(str(error), {}) from error
        if not symbols:
            return DiffPoly.constant(QQ_I.from_sympy(expression))
        poly = sympy.Poly(expression, *symbols, domain=QQ_I)
        terms = {}
        for exponents, coefficient in poly.terms():
            monomial = tuple(
                (generator, power)
                for generator, power in zip(generators, exponents)
                if power
            )
            terms[monomial] = coefficient
        return DiffPoly(terms)


class DiffPolyLatexPrinter:
    @staticmethod
    def latex_name(generator: Generator) -> str:
        if generator.kind == GeneratorKind.T:
            return "t"
        if generator.kind == GeneratorKind.X:
            return f"x_{{{generator.index}}}"
        if generator.order == 0:
            return f"u_{{{generator.index}}}"
        if generator.order == 1:
            return f"\\dot{{u}}_{{{generator.index}}}"
        if generator.order == 2:
            return f"\\ddot{{u}}_{{{generator.index}}}"
        return f"u_{{{generator.index}}}^{{({generator.order})}}"

    @classmethod
    def to_latex(cls, p: DiffPoly, generators: Optional[Sequence[Generator]] = None) -> str:
        names = {
            DiffPolySympyConverter.symbol(g): cls.latex_name(g)
            for g in (generators if generators is not None else p.generators())
        }
        return sympy.latex(DiffPolySympyConverter.to_sympy(p), symbol_names=names)
