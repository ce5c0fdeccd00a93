#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Escalares racionales exactos.

Rational es fractions.Fraction: siempre reducido y con denominador positivo
desde la construcción, de modo que la igualdad es estructural.
"""

from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from src.utils.errors import InvalidInputError

Rational = Fraction
RationalLike = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Convierte int, Fraction o texto 'a/b' en Fraction; rechaza flotantes."""
    if isinstance(value, bool):
        raise InvalidInputError(f"Valor no racional: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError as e:
            raise InvalidInputError(f"Racional mal formado: {value!r}") from e
    raise InvalidInputError(f"Tipo no admitido para racional exacto: {type(value).__name__}")


def _int_sqrt(m: int) -> Optional[int]:
    if m < 0:
        return None
    s = isqrt(m)
    return s if s * s == m else None


def rational_sqrt(value: RationalLike) -> Optional[Fraction]:
    """Raíz cuadrada racional exacta, o None si value no es un cuadrado en Q."""
    value = as_rational(value)
    num = _int_sqrt(value.numerator)
    den = _int_sqrt(value.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def is_rational_square(value: RationalLike) -> bool:
    return rational_sqrt(value) is not None


def format_rational(value: RationalLike) -> str:
    """Texto exacto 'a' o 'a/b'."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
