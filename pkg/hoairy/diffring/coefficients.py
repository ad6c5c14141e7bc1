"""Exact Gaussian-rational coefficients, backed by sympy's QQ_I domain."""
from fractions import Fraction
from typing import Union

from sympy.polys.domains import QQ, QQ_I

Coefficient = QQ_I.dtype
Scalar = Union[int, Fraction, Coefficient]

ZERO = QQ_I(0, 0)
ONE = QQ_I(1, 0)
I = QQ_I(0, 1)


def rational(numerator: int, denominator: int = 1) -> Coefficient:
    return QQ_I(QQ(numerator, denominator), QQ(0))


def gaussian(real: Fraction, imag: Fraction = Fraction(0)) -> Coefficient:
    return QQ_I(
        QQ(real.numerator, real.denominator), QQ(imag.numerator, imag.denominator)
    )


def coerce(value: Scalar) -> Coefficient:
    if isinstance(value, Coefficient):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not ring coefficients")
    if isinstance(value, int):
        return QQ_I(value, 0)
    if isinstance(value, Fraction):
        return gaussian(value)
    raise TypeError(f"Cannot use {value!r} as an exact coefficient")


def i_power(exponent: int) -> Coefficient:
    return (ONE, I, -ONE, -I)[exponent % 4]


def is_zero(value: Coefficient) -> bool:
    return value == ZERO


def real_part(value: Coefficient) -> Fraction:
    return Fraction(int(value.x.numerator), int(value.x.denominator))


def imag_part(value: Coefficient) -> Fraction:
    return Fraction(int(value.y.numerator), int(value.y.denominator))


def to_complex(value: Coefficient) -> complex:
    real = real_part(value)
    imag = imag_part(value)
    return complex(
        real.numerator / real.denominator, imag.numerator / imag.denominator
    )


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_coefficient(value: Coefficient) -> str:
    """Canonical text of a coefficient: `3/2`, `i`, `(3/2)*i`, `(1/2+3*i)`."""
    real = real_part(value)
    imag = imag_part(value)
    if imag == 0:
        return _format_fraction(real)
    if imag == 1:
        imag_text = "i"
    elif imag == -1:
        imag_text = "-i"
    elif imag.denominator == 1:
        imag_text = f"{imag.numerator}*i"
    else:
        imag_text = f"({_format_fraction(imag)})*i"
    if real == 0:
        return imag_text
    sign = "-" if imag < 0 else "+"
    magnitude = format_coefficient(gaussian(Fraction(0), abs(imag)))
    return f"({_format_fraction(real)}{sign}{magnitude})"


def split_sign(value: Coefficient):
    """Pull a leading minus out of real or purely imaginary coefficients."""
    real = real_part(value)
    imag = imag_part(value)
    if (imag == 0 and real < 0) or (real == 0 and imag < 0):
        return True, -value
    return False, value
