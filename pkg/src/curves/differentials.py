#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Base de diferenciales de primera especie de C_{f,q}: y^q = f(x) mediante
los puntos enteros interiores del triángulo de Newton de vértices
(0,0), (0,q), (n,0), y espectro de autovalores del automorfismo
delta_q: (x, y) -> (x, zeta y) sobre esas diferenciales.

El espectro se indexa por el exponente i de zeta^(-i); el autovalor
trivial (i = 0) no aparece nunca.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, List

from src.algebra.number_theory import euler_phi, prime_power_decomposition
from src.models.invariant_models import EigenSpectrum, LatticeBasisElement
from src.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NewtonTriangle:
    """
    Triángulo Delta_{n,q}.

    Raises:
        InvalidInputError: n < 3, q no potencia de primo o gcd(n, q) != 1
    """
    n: int
    q: int

    def __post_init__(self):
        _validate(self.n, self.q)

    @property
    def p(self) -> int:
        return prime_power_decomposition(self.q)[0]

    @property
    def r(self) -> int:
        return prime_power_decomposition(self.q)[1]

    def is_interior(self, j: int, i: int) -> bool:
        return j >= 1 and i >= 1 and self.q * j + self.n * i < self.n * self.q


def _validate(n: int, q: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise InvalidInputError(f"n={n} debe ser un entero >= 3")
    prime_power_decomposition(q)
    if gcd(n, q) != 1:
        raise InvalidInputError(f"gcd(n={n}, q={q}) != 1")


def interior_points(T: NewtonTriangle) -> List[LatticeBasisElement]:
    """
    Puntos (j, i) con j, i >= 1 y qj + ni < nq, en orden lexicográfico.

    Cada punto representa la diferencial x^(j-1) dx / y^(q-i), de autovalor zeta^i.
    """
    return [LatticeBasisElement(j, i, i % T.q, T.q)
            for j in range(1, T.n)
            for i in range(1, T.q)
            if T.is_interior(j, i)]


def genus_lattice(T: NewtonTriangle) -> int:
    """Género como número de puntos interiores."""
    return sum(1 for j in range(1, T.n) for i in range(1, T.q) if T.is_interior(j, i))


def genus_formula(n: int, q: int) -> int:
    """(n-1)(q-1)/2."""
    _validate(n, q)
    twice = (n - 1) * (q - 1)
    if twice % 2:
        raise InvalidInputError(f"(n-1)(q-1) impar para n={n}, q={q}")
    return twice // 2


def eigen_multiplicity(n: int, q: int, i: int) -> int:
    """
    Multiplicidad de zeta^(-i): floor(n i / q).

    Raises:
        InvalidInputError: Si i no está en [1, q-1]
    """
    _validate(n, q)
    if not 1 <= i <= q - 1:
        raise InvalidInputError(f"i={i} fuera de [1, {q - 1}]")
    return n * i // q


def full_spectrum(n: int, q: int) -> EigenSpectrum:
    _validate(n, q)
    return EigenSpectrum(n, q, {i: n * i // q for i in range(1, q)})


def primitive_spectrum(n: int, q: int) -> EigenSpectrum:
    """Espectro restringido a los residuos primos con p (parte nueva J^(f,q))."""
    _validate(n, q)
    p = prime_power_decomposition(q)[0]
    return EigenSpectrum(n, q, {i: n * i // q for i in range(1, q) if i % p})


def primitive_mass(n: int, q: int) -> int:
    """Suma de multiplicidades sobre residuos primitivos; vale (n-1) phi(q) / 2."""
    return primitive_spectrum(n, q).total()


def expected_primitive_mass(n: int, q: int) -> int:
    return (n - 1) * euler_phi(q) // 2


def lattice_spectrum(T: NewtonTriangle) -> EigenSpectrum:
    """
    Recuento del espectro por rectas horizontales: la multiplicidad de
    zeta^(-i) es el número de puntos interiores con segunda coordenada q - i.
    """
    counts: Dict[int, int] = {i: 0 for i in range(1, T.q)}
    for point in interior_points(T):
        counts[T.q - point.i] += 1
    return EigenSpectrum(T.n, T.q, counts)


def pole_order_bound_holds(j: int, i: int, n: int, q: int) -> bool:
    """Condición q(j-1) + (q+1) <= n(q-i): la diferencial no tiene polo en el infinito."""
    return q * (j - 1) + (q + 1) <= n * (q - i)


def guaranteed_eigen_residues(n: int, q: int) -> List[int]:
    """Residuos q - q/p <= i <= q-1 cuyo autovalor zeta^(-i) aparece siempre."""
    _validate(n, q)
    p = prime_power_decomposition(q)[0]
    return list(range(q - q // p, q))


def complementary_points(T: NewtonTriangle) -> List[tuple]:
    """Imagen de los puntos interiores por la involución (j, i) -> (n-j, q-i)."""
    return sorted((T.n - e.j, T.q - e.i) for e in interior_points(T))
