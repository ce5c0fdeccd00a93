#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Aritmética elemental de enteros: primalidad, potencias de primo,
función phi de Euler y algoritmo de Euclides extendido.

La factorización y la primalidad se delegan en sympy, de modo que q
puede ser un primo grande (p. ej. 10^9 + 7) sin recorrer hasta q.
"""

import logging
from functools import lru_cache
from math import gcd
from typing import List, Tuple

from sympy import factorint, isprime, primerange, totient

from src.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    """Primalidad vía sympy.isprime (determinista en el rango de 64 bits)."""
    if n < 2:
        return False
    return bool(isprime(int(n)))


@lru_cache(maxsize=4096)
def prime_power_decomposition(q: int) -> Tuple[int, int]:
    """
    Descompone q = p^r.

    Args:
        q: Entero >= 2

    Returns:
        Tupla (p, r)

    Raises:
        InvalidInputError: Si q no es potencia de un primo
    """
    if not isinstance(q, int) or isinstance(q, bool) or q < 2:
        raise InvalidInputError(f"q={q} no es una potencia de primo >= 2")
    factors = factorint(q)
    if len(factors) != 1:
        raise InvalidInputError(f"q={q} no es una potencia de primo")
    (p, r), = factors.items()
    return int(p), int(r)


def is_prime_power(q: int) -> bool:
    try:
        prime_power_decomposition(q)
    except InvalidInputError:
        return False
    return True


def prime_powers_up_to(bound: int) -> List[int]:
    """Potencias de primo 2 <= q <= bound, en orden creciente."""
    powers: List[int] = []
    for p in primerange(2, bound + 1):
        q = int(p)
        while q <= bound:
            powers.append(q)
            q *= int(p)
    return sorted(powers)


def euler_phi(q: int) -> int:
    """phi(p^r) = p^r - p^(r-1) para potencias de primo; cálculo general si no."""
    if q < 1:
        raise InvalidInputError(f"phi no definida para {q}")
    return int(totient(q))


def extended_gcd(n: int, q: int) -> Tuple[int, int, int]:
    """
    Euclides extendido: devuelve (g, u, v) con u*n + v*q = g = gcd(n, q) >= 0.

    Raises:
        InvalidInputError: Si ambas entradas son cero
    """
    if n == 0 and q == 0:
        raise InvalidInputError("extended_gcd: ambas entradas son cero")
    old_r, r = n, q
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_u, u = u, old_u - quotient * u
        old_v, v = v, old_v - quotient * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def require_coprime(n: int, q: int) -> None:
    """Lanza InvalidInputError si gcd(n, q) != 1."""
    if gcd(n, q) != 1:
        raise InvalidInputError(f"n={n} y q={q} no son coprimos")


def coprime_sweep(n_range, q_max: int):
    """Pares (n, q) coprimos con q potencia de primo <= q_max, ordenados por (n, q)."""
    qs = prime_powers_up_to(q_max)
    return [(n, q) for n in n_range for q in qs if gcd(n, q) == 1]
