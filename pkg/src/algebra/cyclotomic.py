#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Polinomios ciclotómicos de orden potencia de primo y el polinomio
geométrico P_q(t) = 1 + t + ... + t^(q-1).
"""

import logging

from src.algebra.laurent import LaurentPolynomial, substitute
from src.algebra.number_theory import is_prime, prime_power_decomposition
from src.algebra.polynomial import Polynomial
from src.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


def cyclotomic_poly(p: int, i: int) -> Polynomial:
    """
    Phi_{p^i}(t) = sum_{j=0}^{p-1} t^(j p^(i-1)).

    Raises:
        InvalidInputError: Si p no es primo o i < 1
    """
    if not is_prime(p):
        raise InvalidInputError(f"p={p} no es primo")
    if i < 1:
        raise InvalidInputError(f"i={i} debe ser >= 1")
    step = p ** (i - 1)
    coeffs = [0] * ((p - 1) * step + 1)
    for j in range(p):
        coeffs[j * step] = 1
    return Polynomial(coeffs, 't')


def geometric_poly(q: int) -> Polynomial:
    """P_q(t) = 1 + t + ... + t^(q-1) para q potencia de primo."""
    prime_power_decomposition(q)
    return Polynomial([1] * q, 't')


def reflection_identity_check(q: int) -> bool:
    """
    Evalúa exactamente la identidad de Laurent t^q Phi_q(1/t) - Phi_q(t) = t^q - 1.

    Args:
        q: Potencia de primo p^r

    Returns:
        Valor de verdad de la identidad tras expandir
    """
    p, r = prime_power_decomposition(q)
    phi = cyclotomic_poly(p, r)
    t = LaurentPolynomial.monomial((1,))
    t_inv = LaurentPolynomial.monomial((-1,))
    lhs = LaurentPolynomial.monomial((q,)) * substitute(phi.coeffs, t_inv) - substitute(phi.coeffs, t)
    rhs = LaurentPolynomial.monomial((q,)) - 1
    holds = lhs == rhs
    logger.debug(f"Identidad de reflexión q={q}: {holds}")
    return holds
