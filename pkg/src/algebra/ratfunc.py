#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Funciones racionales en una indeterminada sobre Q.

Representante canónico: numerador y denominador coprimos y denominador
mónico, normalizado en la construcción.
"""

from fractions import Fraction

from src.algebra.polynomial import Polynomial, poly_gcd
from src.utils.errors import InvalidInputError


class RatFunc:
    """
    Elemento de Q(t) en forma reducida.

    Args:
        numerator: Polynomial en t (o escalar)
        denominator: Polynomial en t no nulo (o escalar)
    """

    __slots__ = ('numerator', 'denominator')

    def __init__(self, numerator, denominator=1, var: str = 't'):
        num = numerator if isinstance(numerator, Polynomial) else Polynomial([numerator], var)
        den = denominator if isinstance(denominator, Polynomial) else Polynomial([denominator], var)
        if den.is_zero():
            raise ZeroDivisionError("Denominador cero en función racional")
        if num.is_zero():
            num, den = Polynomial([], var), Polynomial([1], var)
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lc = den.leading_coefficient()
            num = Polynomial([c / lc for c in num.coeffs], var)
            den = Polynomial([c / lc for c in den.coeffs], var)
        self.numerator = num.with_var(var)
        self.denominator = den.with_var(var)

    @classmethod
    def gen(cls, var: str = 't') -> 'RatFunc':
        return cls(Polynomial.gen(var), 1, var)

    @property
    def var(self) -> str:
        return self.numerator.var

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFunc(Fraction(other), 1, self.var)
        return None

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_constant(self) -> bool:
        return self.denominator.degree() == 0 and self.numerator.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise InvalidInputError(f"{self} no es constante")
        return self.numerator.coefficient(0)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.numerator * other.denominator + other.numerator * self.denominator,
                       self.denominator * other.denominator, self.var)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.numerator, self.denominator, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.numerator * other.numerator,
                       self.denominator * other.denominator, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("División por la función racional cero")
        return RatFunc(self.numerator * other.denominator,
                       self.denominator * other.numerator, self.var)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise InvalidInputError("Exponente no entero")
        if e < 0:
            if self.is_zero():
                raise ZeroDivisionError("Potencia negativa de cero")
            return RatFunc(self.denominator ** -e, self.numerator ** -e, self.var)
        return RatFunc(self.numerator ** e, self.denominator ** e, self.var)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self.numerator.coeffs == other.numerator.coeffs
                and self.denominator.coeffs == other.denominator.coeffs)

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.numerator.coeffs, self.denominator.coeffs))

    def evaluate(self, value):
        den = self.denominator.evaluate(value)
        if den == 0:
            raise ZeroDivisionError(f"Polo de {self} en {value}")
        return self.numerator.evaluate(value) / den

    __call__ = evaluate

    def __str__(self):
        if self.denominator.degree() == 0:
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    def __repr__(self):
        return f"RatFunc({self})"


T = RatFunc.gen('t')
