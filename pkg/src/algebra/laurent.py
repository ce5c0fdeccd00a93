#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Polinomios de Laurent en varias variables con coeficientes racionales.

Representación dispersa: diccionario exponente -> Fraction sin entradas
nulas. Los exponentes son tuplas de enteros (pueden ser negativos).
"""

from fractions import Fraction
from typing import Dict, Tuple

from src.utils.errors import InvalidInputError

Exponent = Tuple[int, ...]


class LaurentPolynomial:
    """Polinomio de Laurent inmutable en `nvars` variables."""

    __slots__ = ('nvars', 'terms')

    def __init__(self, terms: Dict[Exponent, Fraction] = None, nvars: int = 1):
        self.nvars = nvars
        clean: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars:
                raise InvalidInputError(f"Exponente {exp} no tiene {nvars} componentes")
            c = Fraction(c)
            if c != 0:
                clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, exp: Exponent, c=1) -> 'LaurentPolynomial':
        return cls({tuple(exp): Fraction(c)}, len(exp))

    @classmethod
    def constant(cls, c, nvars: int) -> 'LaurentPolynomial':
        return cls({(0,) * nvars: Fraction(c)}, nvars)

    def _lift(self, other) -> 'LaurentPolynomial':
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise InvalidInputError("Número de variables incompatible")
            return other
        return LaurentPolynomial.constant(other, self.nvars)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return LaurentPolynomial(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, Fraction(0)) + c1 * c2
        return LaurentPolynomial(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self.terms) != 1:
                raise InvalidInputError("Solo los monomios admiten potencias negativas")
            (exp, c), = self.terms.items()
            return LaurentPolynomial({tuple(a * e for a in exp): c ** e}, self.nvars)
        result = LaurentPolynomial.constant(1, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.nvars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        body = ' + '.join(f"{c}*{e}" for e, c in sorted(self.terms.items()))
        return f"LaurentPolynomial({body or '0'})"


def substitute(coeffs, value: LaurentPolynomial) -> LaurentPolynomial:
    """Evalúa el polinomio de coeficientes `coeffs` (grado bajo primero) en `value`."""
    if len(value.terms) == 1:
        (exp, scale), = value.terms.items()
        if any(exp):
            # monomio no constante: exponentes distintos para cada grado
            return LaurentPolynomial({tuple(a * k for a in exp): Fraction(c) * scale ** k
                                      for k, c in enumerate(coeffs) if c != 0}, value.nvars)
    acc = LaurentPolynomial.constant(0, value.nvars)
    for c in reversed(list(coeffs)):
        acc = acc * value + c
    return acc
