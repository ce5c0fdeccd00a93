#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Jerarquía de excepciones del toolkit.

Las funciones de cálculo lanzan estas excepciones; los servicios las
capturan y las convierten en resultados {'success': False, ...}; la CLI
las traduce a códigos de salida.
"""


class SuperjacError(Exception):
    """Excepción base de superjac."""

    error_type = 'internal'
    exit_code = 1


class InvalidInputError(SuperjacError, ValueError):
    """Entrada que viola una precondición (grado, coprimalidad, potencia de primo...)."""

    error_type = 'invalid_input'
    exit_code = 2


class OutsideHypothesesError(InvalidInputError):
    """La etiqueta de Galois o el par (n, q) queda fuera de la tabla de teoremas."""


class UnsupportedFamilyError(InvalidInputError):
    """El polinomio no pertenece a la familia que el clasificador geométrico admite."""


class InvariantFailure(SuperjacError, AssertionError):
    """Una identidad que debe cumplirse exactamente ha fallado (error interno)."""

    error_type = 'invariant_failure'
    exit_code = 1


def error_type_of(exc: BaseException) -> str:
    """
    Clasifica una excepción para los resultados de servicio.

    Args:
        exc: Excepción capturada

    Returns:
        'invalid_input', 'invariant_failure' o 'internal'
    """
    if isinstance(exc, SuperjacError):
        return exc.error_type
    if isinstance(exc, (ValueError, ZeroDivisionError)):
        return 'invalid_input'
    return 'internal'
