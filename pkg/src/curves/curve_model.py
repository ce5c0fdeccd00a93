#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Modelo proyectivo de dos cartas de C_{f,q} y comprobación del género por
la fórmula de Hurwitz.

La carta en el infinito usa coordenadas (s, t) con x = 1/(s^b t^q),
y = 1/(s^a t^n), donde b n - a q = 1. La identidad verificada es la
versión sin denominadores, válida fuera de la curva:

    s^(bn) t^(nq) (Y^q - f(X)) = s - f~(s^b t^q),   f~(x) = x^n f(1/x).
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, Optional

from src.algebra.laurent import LaurentPolynomial, substitute
from src.algebra.number_theory import extended_gcd, prime_power_decomposition, require_coprime
from src.algebra.polynomial import Polynomial, is_squarefree
from src.algebra.ratfunc import RatFunc
from src.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GluingData:
    """Exponentes de pegado a, b > 0 con b n - a q = 1 y el polinomio recíproco f~."""
    n: int
    q: int
    a: int
    b: int
    tilde_f: Optional[Polynomial] = None

    def to_dict(self) -> Dict[str, Any]:
        p, r = prime_power_decomposition(self.q)
        return {'n': self.n, 'q': self.q, 'p': p, 'r': r, 'a': self.a, 'b': self.b,
                'tilde_f': str(self.tilde_f) if self.tilde_f is not None else None}


def _rational_coefficients(f: Polynomial) -> Polynomial:
    out = []
    for c in f.coeffs:
        if isinstance(c, RatFunc):
            if not c.is_constant():
                raise InvalidInputError("El modelo de cartas requiere coeficientes racionales")
            c = c.constant_value()
        out.append(c)
    return Polynomial(out, f.var)


def gluing_exponents(n: int, q: int, f: Optional[Polynomial] = None) -> GluingData:
    """
    Exponentes minimales positivos (a, b) con b n - a q = 1.

    Args:
        n: Grado del polinomio
        q: Potencia de primo
        f: Polinomio opcional de grado n; si se da se calcula f~

    Raises:
        InvalidInputError: gcd(n, q) != 1 o grado de f distinto de n
    """
    prime_power_decomposition(q)
    if n < 1:
        raise InvalidInputError(f"n={n} debe ser positivo")
    require_coprime(n, q)
    _, u, _ = extended_gcd(n, q)
    b = u % q or q
    a = (b * n - 1) // q
    tilde = None
    if f is not None:
        if f.degree() != n:
            raise InvalidInputError(f"grado de f ({f.degree()}) distinto de n={n}")
        tilde = _rational_coefficients(f).reversed_to(n)
    return GluingData(n, q, a, b, tilde)


def chart_identity_check(f: Polynomial, q: int) -> bool:
    """
    Verifica la identidad de Laurent en dos variables entre las cartas.

    Raises:
        InvalidInputError: grado degenerado, f no libre de cuadrados o grado no coprimo con q
    """
    f = _rational_coefficients(f)
    n = f.degree()
    if n < 1:
        raise InvalidInputError(f"Grado degenerado: {n}")
    if not is_squarefree(f):
        raise InvalidInputError(f"{f} tiene raíces múltiples")
    data = gluing_exponents(n, q, f)
    a, b = data.a, data.b

    X = LaurentPolynomial.monomial((-b, -q))
    Y = LaurentPolynomial.monomial((-a, -n))
    clearing = LaurentPolynomial.monomial((b * n, n * q))
    lhs = clearing * (Y ** q - substitute(f.coeffs, X))

    s = LaurentPolynomial.monomial((1, 0))
    rhs = s - substitute(data.tilde_f.coeffs, LaurentPolynomial.monomial((b, q)))
    holds = lhs == rhs
    if not holds:
        logger.warning(f"Identidad de cartas fallida para f={f}, q={q}")
    return holds


def delta_chart_order(n: int, q: int) -> int:
    """Orden multiplicativo de zeta^(-b) en la carta del infinito: q / gcd(b, q)."""
    data = gluing_exponents(n, q)
    return q // gcd(data.b, q)


def delta_fixed_points(n: int, q: int) -> int:
    """Puntos fijos de delta_q: las n raíces de f y el punto del infinito."""
    require_coprime(n, q)
    return n + 1


def hurwitz_genus(n: int, q: int) -> int:
    """Género por Hurwitz: 2g - 2 = -2q + (n+1)(q-1)."""
    prime_power_decomposition(q)
    ramification = delta_fixed_points(n, q) * (q - 1)
    twice_g_minus_2 = -2 * q + ramification
    if twice_g_minus_2 % 2:
        raise InvalidInputError(f"Datos de ramificación inconsistentes para n={n}, q={q}")
    return twice_g_minus_2 // 2 + 1
