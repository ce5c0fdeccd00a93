#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Analizador de expresiones polinómicas en texto.

Gramática: términos `c`, `c*x^k`, `x^k`, `x` unidos por `+`/`-`; los
coeficientes son enteros, fracciones `a/b` o el símbolo `t` (que promueve
los coeficientes a Q(t)). Los espacios no son significativos.

Ejemplos: `x^3 - x - 1`, `x^3 - x - t`, `1/2*x^4 + 3`.
"""

import logging
import re
from collections import defaultdict
from fractions import Fraction
from typing import Dict

from src.algebra.polynomial import Polynomial
from src.algebra.ratfunc import RatFunc
from src.utils.errors import InvalidInputError, UnsupportedFamilyError

logger = logging.getLogger(__name__)

_TERM = re.compile(r'[+-]?[^+-]+')
_FACTOR = re.compile(r'^(?:(\d+)(?:/(\d+))?|([xt])(?:\^(\d+))?)$')


def _parse_term(term: str):
    sign = 1
    if term[0] in '+-':
        sign = -1 if term[0] == '-' else 1
        term = term[1:]
    coeff = Fraction(sign)
    x_deg = t_deg = 0
    for factor in term.split('*'):
        match = _FACTOR.match(factor)
        if not match:
            raise InvalidInputError(f"Factor mal formado: '{factor}'")
        num, den, symbol, exp = match.groups()
        if num is not None:
            if den is not None and int(den) == 0:
                raise InvalidInputError(f"Denominador cero en '{factor}'")
            coeff *= Fraction(int(num), int(den) if den else 1)
        elif symbol == 'x':
            x_deg += int(exp) if exp else 1
        else:
            t_deg += int(exp) if exp else 1
    return coeff, x_deg, t_deg


def parse_polynomial(text: str) -> Polynomial:
    """
    Convierte texto en Polynomial en x.

    Args:
        text: Expresión según la gramática del módulo

    Returns:
        Polynomial con coeficientes Fraction, o RatFunc si aparece `t`

    Raises:
        InvalidInputError: Si la expresión está mal formada
    """
    if not isinstance(text, str):
        raise InvalidInputError("La expresión debe ser texto")
    compact = re.sub(r'\s+', '', text)
    if not compact:
        raise InvalidInputError("Expresión polinómica vacía")
    terms = _TERM.findall(compact)
    if ''.join(terms) != compact:
        raise InvalidInputError(f"Expresión polinómica mal formada: '{text}'")

    table: Dict[int, Dict[int, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    uses_t = False
    for term in terms:
        coeff, x_deg, t_deg = _parse_term(term)
        uses_t = uses_t or t_deg > 0
        table[x_deg][t_deg] += coeff

    top = max(table)
    coeffs = []
    for k in range(top + 1):
        row = table.get(k, {})
        if uses_t:
            t_top = max(row) if row else 0
            coeffs.append(RatFunc(Polynomial([row.get(d, 0) for d in range(t_top + 1)], 't')))
        else:
            coeffs.append(row.get(0, Fraction(0)))
    poly = Polynomial(coeffs, 'x')
    logger.debug(f"Polinomio analizado: '{text}' -> {poly}")
    return poly


def has_parameter(f: Polynomial) -> bool:
    """True si algún coeficiente depende de t."""
    return any(isinstance(c, RatFunc) and not c.is_constant() for c in f.coeffs)


def rational_part(f: Polynomial) -> Polynomial:
    """Convierte coeficientes RatFunc constantes en Fraction; lanza si depende de t."""
    if has_parameter(f):
        raise InvalidInputError(f"El polinomio {f} depende de t")
    return f.map_coefficients(lambda c: c.constant_value() if isinstance(c, RatFunc) else c)


def split_linear_t_family(f: Polynomial) -> Polynomial:
    """
    Reconoce la forma g(x) - t y devuelve g (sobre Q).

    Solo el coeficiente constante en x puede depender de t, y de forma
    lineal: f = h(x) + a + b*t con b != 0. Se normaliza dividiendo por -b.

    Raises:
        UnsupportedFamilyError: Si f no tiene esa forma
    """
    if not has_parameter(f):
        raise UnsupportedFamilyError(f"{f} no depende de t")
    constants = []
    for k, c in enumerate(f.coeffs):
        c = c if isinstance(c, RatFunc) else RatFunc(c)
        if k > 0:
            if not c.is_constant():
                raise UnsupportedFamilyError("t solo puede aparecer en el término independiente de x")
            constants.append(c.constant_value())
        else:
            if c.denominator.degree() != 0 or c.numerator.degree() != 1:
                raise UnsupportedFamilyError("El término independiente debe ser lineal en t")
            a, b = c.numerator.coefficient(0), c.numerator.coefficient(1)
            constants.append(a)
    return Polynomial([-c / b for c in constants], 'x')
