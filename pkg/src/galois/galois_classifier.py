#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Clasificación de Galois de cúbicas y cuárticas sobre Q, y clasificación
geométrica (sobre la clausura algebraica de las constantes) de la familia
f = g(x) - t sobre Q(t).
"""

import logging
from fractions import Fraction
from math import gcd
from typing import List, Tuple

from sympy import divisors

from src.algebra.parser import has_parameter, rational_part, split_linear_t_family
from src.algebra.polynomial import Polynomial, discriminant, irreducible_factors, is_squarefree
from src.algebra.ratfunc import RatFunc, T
from src.algebra.rational import is_rational_square, rational_sqrt
from src.models.invariant_models import GaloisLabel, GeometricSquareVerdict
from src.utils.errors import InvalidInputError, UnsupportedFamilyError

logger = logging.getLogger(__name__)

INFINITY = 'infinity'


# --- utilidades racionales --------------------------------------------------

def _as_rational_poly(f: Polynomial) -> Polynomial:
    if any(isinstance(c, RatFunc) for c in f.coeffs):
        return rational_part(f)
    return f


def _require(f: Polynomial, degree: int) -> Polynomial:
    f = _as_rational_poly(f)
    if f.degree() != degree:
        raise InvalidInputError(f"Se esperaba grado {degree}, recibido {f.degree()}")
    if not is_squarefree(f):
        raise InvalidInputError(f"{f} tiene raíces múltiples")
    return f


def _integer_coefficients(f: Polynomial) -> List[int]:
    lcm = 1
    for c in f.coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in f.coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    return [c // content for c in ints]


def _divisors(m: int) -> List[int]:
    """Divisores positivos de |m| a partir de su factorización."""
    return [int(d) for d in divisors(abs(m))]


def rational_roots(f: Polynomial) -> List[Fraction]:
    """Raíces racionales distintas (test de la raíz racional, exacto)."""
    f = _as_rational_poly(f)
    if f.degree() < 1:
        return []
    coeffs = _integer_coefficients(f)
    roots = set()
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs = coeffs[1:]
    if len(coeffs) > 1:
        reduced = Polynomial(coeffs)
        for d in _divisors(coeffs[0]):
            for e in _divisors(coeffs[-1]):
                for candidate in (Fraction(d, e), Fraction(-d, e)):
                    if reduced.evaluate(candidate) == 0:
                        roots.add(candidate)
    return sorted(roots)


def _in_square_class(u: Fraction, delta: Fraction) -> bool:
    """u es un cuadrado en Q(sqrt(delta)): u = 0, u en Q^2 o u en delta * Q^2."""
    return u == 0 or is_rational_square(u) or is_rational_square(u / delta)


# --- cúbicas ------------------------------------------------------------------

def classify_cubic_rational(f: Polynomial) -> GaloisLabel:
    """
    Reducible si hay raíz racional; si no, C3 cuando disc(f) es un cuadrado y S3 en otro caso.

    Raises:
        InvalidInputError: grado distinto de 3 o raíces múltiples
    """
    f = _require(f, 3)
    if rational_roots(f):
        return GaloisLabel.REDUCIBLE
    return GaloisLabel.C3 if is_rational_square(discriminant(f)) else GaloisLabel.S3


# --- cuárticas -----------------------------------------------------------------

def depressed_quartic(f: Polynomial) -> Tuple:
    """(p, q, r) de la forma deprimida x^4 + p x^2 + q x + r de f mónica."""
    if f.degree() != 4:
        raise InvalidInputError(f"Se esperaba una cuártica, grado {f.degree()}")
    monic = f.monic()
    shifted = monic.shift(-monic.coefficient(3) / 4)
    return shifted.coefficient(2), shifted.coefficient(1), shifted.coefficient(0)


def resolvent_cubic(f: Polynomial) -> Polynomial:
    """z^3 - p z^2 - 4 r z + (4 p r - q^2) para la deprimida x^4 + p x^2 + q x + r."""
    p, q, r = depressed_quartic(f)
    return Polynomial([4 * p * r - q * q, -4 * r, -p, 1], 'z')


def _has_quadratic_factor(p: Fraction, q: Fraction, r: Fraction) -> bool:
    if q != 0:
        u_cubic = Polynomial([-q * q, p * p - 4 * r, 2 * p, 1], 'U')
        return any(U != 0 and is_rational_square(U) for U in rational_roots(u_cubic))
    if is_rational_square(p * p - 4 * r):
        return True
    root = rational_sqrt(r)
    if root is None:
        return False
    return any(2 * v - p != 0 and is_rational_square(2 * v - p) for v in (root, -root))


def classify_quartic_rational(f: Polynomial) -> GaloisLabel:
    """
    Clasificación por la cúbica resolvente:
    sin raíces racionales -> S4/A4 según disc; tres raíces -> V4;
    una raíz z -> C4 si z^2 - 4r y z - p son cuadrados en Q(sqrt(disc)), D4 si no.

    Raises:
        InvalidInputError: grado distinto de 4 o raíces múltiples
    """
    f = _require(f, 4)
    if rational_roots(f):
        return GaloisLabel.REDUCIBLE
    p, q, r = depressed_quartic(f)
    if _has_quadratic_factor(p, q, r):
        return GaloisLabel.REDUCIBLE
    delta = discriminant(f)
    roots = rational_roots(resolvent_cubic(f))
    if not roots:
        return GaloisLabel.A4 if is_rational_square(delta) else GaloisLabel.S4
    if len(roots) == 3:
        return GaloisLabel.V4
    z = roots[0]
    if _in_square_class(z * z - 4 * r, delta) and _in_square_class(z - p, delta):
        return GaloisLabel.C4
    return GaloisLabel.D4


# --- geometría sobre Q(t) -------------------------------------------------------

def geometric_square_test(u: RatFunc) -> GeometricSquareVerdict:
    """
    u es un cuadrado en la clausura algebraica de Q(t) si todas las valuaciones
    son pares, incluida la del infinito (deg num - deg den).

    Los lugares de valuación impar se informan como factores irreducibles
    sobre Q de numerador y denominador (órbitas de Galois de lugares).

    Raises:
        InvalidInputError: u = 0
    """
    if not isinstance(u, RatFunc):
        u = RatFunc(u)
    if u.is_zero():
        raise InvalidInputError("geometric_square_test: entrada cero")
    odd_places = []
    for part in (u.numerator, u.denominator):
        for factor, multiplicity in irreducible_factors(part):
            if multiplicity % 2:
                odd_places.append((factor, 1))
    if (u.numerator.degree() - u.denominator.degree()) % 2:
        odd_places.append((INFINITY, 1))
    return GeometricSquareVerdict(not odd_places, odd_places)


def _family_polynomial(g: Polynomial) -> Polynomial:
    """g(x) - t con coeficientes en Q(t)."""
    coeffs = [RatFunc(c) for c in g.coeffs]
    coeffs[0] = coeffs[0] - T
    return Polynomial(coeffs, 'x')


def family_discriminant(g: Polynomial) -> RatFunc:
    """disc_x(g(x) - t) como elemento de Q(t)."""
    disc = discriminant(_family_polynomial(g))
    return disc if isinstance(disc, RatFunc) else RatFunc(disc)


def classify_cubic_geometric(g: Polynomial) -> GaloisLabel:
    """
    Grupo geométrico de g(x) - t para g cúbica: S3 si disc_x no es un
    cuadrado geométrico, C3 si lo es.

    Raises:
        InvalidInputError: grado distinto de 3 o disc idénticamente cero
    """
    g = _as_rational_poly(g)
    if g.degree() != 3:
        raise InvalidInputError(f"Se esperaba una cúbica, grado {g.degree()}")
    g = g.monic()
    disc = family_discriminant(g)
    if disc.is_zero():
        raise InvalidInputError("disc_x(g - t) idénticamente cero")
    verdict = geometric_square_test(disc)
    logger.debug(f"Cúbica geométrica {g} - t: disc = {disc}, cuadrado = {verdict.is_square}")
    return GaloisLabel.C3 if verdict.is_square else GaloisLabel.S3


def classify_quartic_geometric(g: Polynomial) -> GaloisLabel:
    """
    Grupo geométrico de g(x) - t para g cuártica con coeficiente lineal
    deprimido no nulo (certificado de irreducibilidad de la resolvente):
    S4 si disc_x no es un cuadrado geométrico, A4 si lo es.

    Raises:
        UnsupportedFamilyError: coeficiente lineal deprimido nulo
        InvalidInputError: grado distinto de 4
    """
    g = _as_rational_poly(g)
    if g.degree() != 4:
        raise InvalidInputError(f"Se esperaba una cuártica, grado {g.degree()}")
    g = g.monic()
    _, q, _ = depressed_quartic(g)
    if q == 0:
        raise UnsupportedFamilyError("outside supported family: coeficiente lineal deprimido nulo")
    disc = family_discriminant(g)
    if disc.is_zero():
        raise InvalidInputError("disc_x(g - t) idénticamente cero")
    verdict = geometric_square_test(disc)
    return GaloisLabel.A4 if verdict.is_square else GaloisLabel.S4


def classify_polynomial(f: Polynomial) -> Tuple[GaloisLabel, str]:
    """
    Despacha según la forma: familia g(x) - t -> geométrico; si no, racional.

    Returns:
        (etiqueta, modo) con modo 'rational' o 'geometric'
    """
    if has_parameter(f):
        g = split_linear_t_family(f)
        if g.degree() == 3:
            return classify_cubic_geometric(g), 'geometric'
        if g.degree() == 4:
            return classify_quartic_geometric(g), 'geometric'
        raise InvalidInputError(f"Grado {g.degree()} no soportado (solo 3 y 4)")
    f = _as_rational_poly(f)
    if f.degree() == 3:
        return classify_cubic_rational(f), 'rational'
    if f.degree() == 4:
        return classify_quartic_rational(f), 'rational'
    raise InvalidInputError(f"Grado {f.degree()} no soportado (solo 3 y 4)")
