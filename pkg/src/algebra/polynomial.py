#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Polinomios univariados exactos.

Coeficientes densos, del grado más bajo al más alto, sin ceros finales.
Los coeficientes son Fraction o RatFunc (polinomios sobre Q(t)); los
enteros se convierten a Fraction al construir.
"""

import logging
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import sympy

from src.algebra.rational import format_rational
from src.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


def _coerce(c):
    if isinstance(c, bool):
        raise InvalidInputError(f"Coeficiente no válido: {c!r}")
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, float):
        raise InvalidInputError("No se admiten coeficientes en coma flotante")
    return c


class Polynomial:
    """
    Polinomio inmutable en una variable.

    Args:
        coeffs: Coeficientes, del término constante hacia arriba
        var: Nombre de la variable para el renderizado
    """

    __slots__ = ('coeffs', 'var')

    def __init__(self, coeffs: Iterable = (), var: str = 'x'):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple = tuple(cs)
        self.var = var

    # --- constructores -------------------------------------------------
    @classmethod
    def constant(cls, c, var: str = 'x') -> 'Polynomial':
        return cls([c], var)

    @classmethod
    def monomial(cls, degree: int, c=1, var: str = 'x') -> 'Polynomial':
        if degree < 0:
            raise InvalidInputError("Grado negativo en monomio")
        return cls([0] * degree + [c], var)

    @classmethod
    def gen(cls, var: str = 'x') -> 'Polynomial':
        return cls([0, 1], var)

    def with_var(self, var: str) -> 'Polynomial':
        return Polynomial(self.coeffs, var)

    # --- consultas -----------------------------------------------------
    def degree(self) -> int:
        """Grado; -1 para el polinomio cero."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading_coefficient(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    lc = leading_coefficient

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    # --- aritmética ----------------------------------------------------
    def _lift(self, other) -> 'Polynomial':
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other], self.var)

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return Polynomial([], self.var)
            return Polynomial([c * other for c in self.coeffs], self.var)
        if self.is_zero() or other.is_zero():
            return Polynomial([], self.var)
        out: List = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        nonzero_b = [(k, c) for k, c in enumerate(other.coeffs) if c != 0]
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k, b in nonzero_b:
                out[i + k] = out[i + k] + a * b
        return Polynomial(out, self.var)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise InvalidInputError("Exponente no válido para polinomio")
        result = Polynomial([1], self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("División por el polinomio cero")
        rem = list(self.coeffs)
        db = other.degree()
        lc_b = other.leading_coefficient()
        if len(rem) - 1 < db:
            return Polynomial([], self.var), Polynomial(rem, self.var)
        quot: List = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            factor = c / lc_b
            quot[k - db] = factor
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    rem[k - db + j] = rem[k - db + j] - factor * b
        return Polynomial(quot, self.var), Polynomial(rem[:db], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> 'Polynomial':
        """División que debe ser exacta; lanza si queda resto."""
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise InvalidInputError("La división de polinomios no es exacta")
        return quot

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # --- operaciones de cálculo ----------------------------------------
    def derivative(self) -> 'Polynomial':
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def evaluate(self, value):
        """Evaluación de Horner; value puede ser escalar, RatFunc o Polynomial."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    __call__ = evaluate

    def compose(self, inner: 'Polynomial') -> 'Polynomial':
        """self(inner(x))."""
        acc = Polynomial([], inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, c) -> 'Polynomial':
        """f(x + c)."""
        return self.compose(Polynomial([c, 1], self.var))

    def scale_argument(self, u) -> 'Polynomial':
        """f(u*x)."""
        out, power = [], 1
        for coeff in self.coeffs:
            out.append(coeff * power)
            power = power * u
        return Polynomial(out, self.var)

    def monic(self) -> 'Polynomial':
        if self.is_zero():
            return self
        lc = self.leading_coefficient()
        return Polynomial([c / lc for c in self.coeffs], self.var)

    def reversed_to(self, n: int) -> 'Polynomial':
        """x^n * f(1/x) para n >= grado."""
        if n < self.degree():
            raise InvalidInputError("reversed_to requiere n >= grado")
        padded = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return Polynomial(reversed(padded), self.var)

    def map_coefficients(self, fn) -> 'Polynomial':
        return Polynomial([fn(c) for c in self.coeffs], self.var)

    # --- renderizado ---------------------------------------------------
    def __str__(self):
        if not self.coeffs:
            return '0'
        pieces: List[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            negative, body = _split_sign(c)
            if k == 0:
                term = body
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                term = mono if body == '1' else f"{body}*{mono}"
            if not pieces:
                pieces.append(f"-{term}" if negative else term)
            else:
                pieces.append(f"- {term}" if negative else f"+ {term}")
        return ' '.join(pieces)

    def __repr__(self):
        return f"Polynomial({self})"


def _split_sign(c) -> Tuple[bool, str]:
    if isinstance(c, Fraction):
        return c < 0, format_rational(abs(c))
    text = str(c)
    if c.is_constant():
        value = c.constant_value()
        return value < 0, format_rational(abs(value))
    return False, f"({text})"


X = Polynomial.gen('x')


def poly_arith(a: Polynomial, b: Polynomial, kind: str):
    """
    Aritmética de polinomios por nombre de operación.

    Args:
        a, b: Operandos
        kind: 'add', 'sub', 'mul' o 'divrem'

    Returns:
        Polynomial, o (cociente, resto) para 'divrem'

    Raises:
        ZeroDivisionError: divrem por el polinomio cero
        InvalidInputError: operación desconocida
    """
    if kind == 'add':
        return a + b
    if kind == 'sub':
        return a - b
    if kind == 'mul':
        return a * b
    if kind == 'divrem':
        return divmod(a, b)
    raise InvalidInputError(f"Operación desconocida: {kind}")


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Máximo común divisor mónico (cero si ambos son cero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def resultant(a: Polynomial, b: Polynomial):
    """Resultante Res(a, b) por el algoritmo de Euclides sobre un cuerpo."""
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    result = Fraction(1)
    while True:
        da, db = a.degree(), b.degree()
        if db == 0:
            return result * b.leading_coefficient() ** da
        if da == 0:
            return result * a.leading_coefficient() ** db
        r = a % b
        if r.is_zero():
            return Fraction(0)
        if (da * db) % 2:
            result = -result
        result = result * b.leading_coefficient() ** (da - r.degree())
        a, b = b, r


def discriminant(f: Polynomial):
    """
    Discriminante disc(f) = (-1)^(d(d-1)/2) * Res(f, f') / lc(f).

    Raises:
        InvalidInputError: Si el grado es menor que 2
    """
    d = f.degree()
    if d < 2:
        raise InvalidInputError(f"Discriminante requiere grado >= 2 (grado {d})")
    res = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res / f.leading_coefficient()


def is_squarefree(f: Polynomial) -> bool:
    return poly_gcd(f, f.derivative()).degree() == 0


def squarefree_factor(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    """
    Factorización libre de cuadrados (algoritmo de Yun, característica 0).

    Returns:
        Lista de (g_i, m_i) con g_i mónicos, libres de cuadrados y coprimos
        dos a dos; f = lc(f) * prod g_i^m_i. Constante -> [].

    Raises:
        InvalidInputError: Si f es cero
    """
    if f.is_zero():
        raise InvalidInputError("squarefree_factor: polinomio cero")
    if f.degree() == 0:
        return []
    f = f.monic()
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = f.exact_div(a0)
    c = df.exact_div(a0)
    d = c - b.derivative()
    factors: List[Tuple[Polynomial, int]] = []
    i = 1
    while b.degree() > 0:
        a = poly_gcd(b, d)
        if a.degree() > 0:
            factors.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return factors


def irreducible_factors(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    """
    Factorización en irreducibles sobre Q (sympy factor_list).

    Returns:
        Lista de (g, m) con g mónico e irreducible sobre Q, ordenada por
        (grado, coeficientes); f = lc(f) * prod g^m. Constante -> [].

    Raises:
        InvalidInputError: Si f es cero o tiene coeficientes no racionales
    """
    if f.is_zero():
        raise InvalidInputError("irreducible_factors: polinomio cero")
    if any(not isinstance(c, Fraction) for c in f.coeffs):
        raise InvalidInputError("irreducible_factors: solo coeficientes racionales")
    if f.degree() == 0:
        return []
    x = sympy.Symbol(f.var)
    dense = [sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)]
    _, pieces = sympy.Poly(dense, x, domain=sympy.QQ).factor_list()
    factors = []
    for piece, multiplicity in pieces:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(piece.all_coeffs())]
        factors.append((Polynomial(coeffs, f.var).monic(), int(multiplicity)))
    return sorted(factors, key=lambda item: (item[0].degree(), item[0].coeffs))


def product(polys: Sequence[Polynomial], var: str = 'x') -> Polynomial:
    result = Polynomial([1], var)
    for p in polys:
        result = result * p
    return result
