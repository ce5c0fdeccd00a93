#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Álgebra lineal sobre el cuerpo primo F_p con numpy.

Las entradas se guardan como enteros numpy (int64) reducidos a [0, p);
la eliminación gaussiana reduce tras cada operación de fila, de modo que
los productos nunca desbordan para los primos de tamaño de escritorio.
"""

import logging
from dataclasses import dataclass

import numpy as np

from src.algebra.number_theory import is_prime
from src.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

_MAX_MODULUS = 1 << 31


@dataclass(frozen=True)
class PrimeFieldMatrix:
    """
    Matriz con entradas en F_p.

    Args:
        modulus: Primo p
        entries: Array 2D de enteros (se reduce módulo p)
    """
    modulus: int
    entries: np.ndarray

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise InvalidInputError(f"El módulo {self.modulus} no es primo")
        if self.modulus >= _MAX_MODULUS:
            raise InvalidInputError(f"Módulo {self.modulus} demasiado grande para int64")
        arr = np.asarray(self.entries, dtype=np.int64)
        if arr.ndim != 2:
            raise InvalidInputError(f"Se esperaba una matriz 2D, forma {arr.shape}")
        object.__setattr__(self, 'entries', np.mod(arr, self.modulus))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @classmethod
    def identity(cls, size: int, modulus: int) -> 'PrimeFieldMatrix':
        return cls(modulus, np.eye(size, dtype=np.int64))

    def __matmul__(self, other: 'PrimeFieldMatrix') -> 'PrimeFieldMatrix':
        if other.modulus != self.modulus:
            raise InvalidInputError("Módulos distintos")
        return PrimeFieldMatrix(self.modulus, (self.entries @ other.entries) % self.modulus)

    def __eq__(self, other):
        if not isinstance(other, PrimeFieldMatrix):
            return NotImplemented
        return (self.modulus == other.modulus
                and self.entries.shape == other.entries.shape
                and bool(np.array_equal(self.entries, other.entries)))

    def __hash__(self):
        return hash((self.modulus, self.entries.shape, self.entries.tobytes()))

    def rank(self) -> int:
        return rank_mod_p(self.entries, self.modulus)


def row_reduce_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """
    Forma escalonada reducida de A sobre F_p.

    Args:
        A: Matriz de enteros
        p: Primo

    Returns:
        Nueva matriz escalonada (las filas nulas quedan al final)
    """
    A = np.mod(np.array(A, dtype=np.int64), p)
    m, n = A.shape
    i = j = 0
    while i < m and j < n:
        nonzero = np.nonzero(A[i:, j])[0]
        if nonzero.size == 0:
            j += 1
            continue
        pivot_row = i + int(nonzero[0])
        if pivot_row != i:
            A[[i, pivot_row]] = A[[pivot_row, i]]
        inv = pow(int(A[i, j]), -1, p)
        A[i] = (A[i] * inv) % p
        for k in range(m):
            if k != i and A[k, j]:
                A[k] = (A[k] - A[k, j] * A[i]) % p
        i += 1
        j += 1
    return A


def rank_mod_p(A: np.ndarray, p: int) -> int:
    """Rango de A sobre F_p."""
    A = np.asarray(A)
    if A.size == 0:
        return 0
    reduced = row_reduce_mod_p(A, p)
    return int(np.count_nonzero(reduced.any(axis=1)))
