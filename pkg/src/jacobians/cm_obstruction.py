#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Procedimientos de decisión por fuerza bruta sobre la función de
multiplicidades i -> [n i / q] restringida a residuos primitivos:

- búsqueda de automorfismos m de (Z/qZ)* que la dejan invariante
  (a nivel de función y a nivel del conjunto de ceros A);
- criba de factibilidad del caso de centralizador cuadrado.
"""

import logging
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, List

from src.algebra.number_theory import euler_phi, prime_power_decomposition, prime_powers_up_to, require_coprime
from src.models.invariant_models import FeasibilityReport, InvariantAutoReport
from src.utils.errors import InvalidInputError, InvariantFailure

logger = logging.getLogger(__name__)


def _validate(n: int, q: int):
    if not isinstance(n, int) or n < 3:
        raise InvalidInputError(f"n={n} debe ser un entero >= 3")
    p, r = prime_power_decomposition(q)
    require_coprime(n, q)
    return p, r


def _function_invariant(n: int, q: int, primitive: List[int], m: int) -> bool:
    for i in primitive:
        if n * i // q != n * (i * m % q) // q:
            return False
    return True


def _check_closed(ms: List[int], q: int) -> None:
    members = set(ms) | {1}
    for a in ms:
        for b in ms:
            if a * b % q not in members:
                raise InvariantFailure(f"Conjunto invariante no cerrado módulo {q}: {a}*{b}")


def invariant_automorphisms(n: int, q: int) -> InvariantAutoReport:
    """
    Barrido exhaustivo de m coprimo con q, 1 < m < q.

    Returns:
        InvariantAutoReport con los m que dejan invariante la función de
        multiplicidades (invariant_ms) y los que dejan invariante el
        conjunto de ceros A = {i primitivo : n i < q} (zero_set_ms)

    Raises:
        InvalidInputError: entrada no coprima o n < 3
        InvariantFailure: el conjunto hallado no es cerrado por productos
    """
    p, r = _validate(n, q)
    primitive = [i for i in range(1, q) if i % p]
    zero_set = {i for i in primitive if n * i < q}
    invariant_ms, zero_set_ms = [], []
    for m in range(2, q):
        if m % p == 0:
            continue
        if _function_invariant(n, q, primitive, m):
            invariant_ms.append(m)
        if all(i * m % q in zero_set for i in zero_set):
            zero_set_ms.append(m)
    _check_closed(invariant_ms, q)
    report = InvariantAutoReport(n, q, p, r, invariant_ms, zero_set_ms)
    if report.divergent:
        logger.info(f"Divergencia función/conjunto de ceros en n={n}, q={q}")
    return report


def square_case_feasible(n: int, q: int) -> FeasibilityReport:
    """
    Condiciones necesarias del caso de centralizador cuadrado:
    B = {i primitivo : q/n < i < q}, dim W = phi(q)/2 entero,
    #B <= dim W y (n-1) divide a [n i / q] para todo i en B.

    Es una criba, no una prueba de suficiencia.
    """
    p, r = _validate(n, q)
    b_set = [i for i in range(1, q) if i % p and n * i > q]
    dim_w = Fraction(euler_phi(q), 2)
    divisibility_ok = all((n * i // q) % (n - 1) == 0 for i in b_set)
    return FeasibilityReport(n, q, p, r, b_set, dim_w, divisibility_ok)


def coprime_pairs(n_values: Iterable[int], q_max: int) -> List[tuple]:
    """Pares (n, q) coprimos con q potencia de primo <= q_max, ordenados por (n, q)."""
    qs = prime_powers_up_to(q_max)
    return [(n, q) for n in sorted(set(n_values)) for q in qs if gcd(n, q) == 1]


def cm_scan(n_values: Iterable[int], q_max: int) -> Iterator[InvariantAutoReport]:
    for n, q in coprime_pairs(n_values, q_max):
        yield invariant_automorphisms(n, q)


def feasible_scan(n_values: Iterable[int], q_max: int) -> Iterator[FeasibilityReport]:
    for n, q in coprime_pairs(n_values, q_max):
        yield square_case_feasible(n, q)
