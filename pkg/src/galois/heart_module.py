#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
El "corazón" V_{f,p}: el F_p-módulo de permutaciones de dimensión n-1
formado por las funciones {0..n-1} -> F_p de suma cero, y su centralizador
bajo un grupo de permutaciones.

Base: b_k = e_k - e_{n-1}, k = 0..n-2. Una permutación s envía b_k a
b_{s(k)} - b_{s(n-1)}, con el convenio b_{n-1} = 0.
"""

import logging

import numpy as np

from src.algebra.number_theory import is_prime
from src.algebra.prime_field import PrimeFieldMatrix, rank_mod_p
from src.galois.permutations import Perm, PermGroup
from src.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


def is_doubly_transitive(G: PermGroup) -> bool:
    """
    True si G actúa transitivamente sobre pares ordenados de puntos distintos.

    Raises:
        InvalidInputError: grado < 2
    """
    n = G.degree
    if n < 2:
        raise InvalidInputError(f"Grado {n} < 2")
    return len(G.orbit((0, 1))) == n * (n - 1)


def heart_action_matrix(sigma: Perm, p: int) -> PrimeFieldMatrix:
    """Matriz (n-1)x(n-1) sobre F_p de sigma en la base b_k."""
    n = len(sigma)
    last = n - 1
    A = np.zeros((last, last), dtype=np.int64)
    for k in range(last):
        if sigma[k] != last:
            A[sigma[k], k] += 1
        if sigma[last] != last:
            A[sigma[last], k] -= 1
    return PrimeFieldMatrix(p, A)


def heart_centralizer_dim(G: PermGroup, p: int) -> int:
    """
    Dimensión sobre F_p del conmutante {M : M A_g = A_g M para todo generador g}.

    Args:
        G: Grupo de permutaciones de grado n
        p: Primo que no divide a n

    Returns:
        dim End_G(V) = (n-1)^2 - rango del sistema lineal

    Raises:
        InvalidInputError: p no primo o p | n
    """
    if not is_prime(p):
        raise InvalidInputError(f"p={p} no es primo")
    n = G.degree
    if n < 2:
        raise InvalidInputError(f"Grado {n} < 2")
    if n % p == 0:
        raise InvalidInputError(f"p={p} divide a n={n}: el corazón no es sumando directo")
    d = n - 1
    identity = np.eye(d, dtype=np.int64)
    blocks = []
    for g in G.generators:
        A = heart_action_matrix(g, p).entries
        # vec por filas: vec(A M) = (A kron I) vec(M), vec(M A) = (I kron A^T) vec(M)
        blocks.append(np.kron(A, identity) - np.kron(identity, A.T))
    if not blocks:
        return d * d
    system = np.vstack(blocks)
    dim = d * d - rank_mod_p(system, p)
    logger.debug(f"Centralizador del corazón (n={n}, p={p}, |G|={G.order()}): {dim}")
    return dim
