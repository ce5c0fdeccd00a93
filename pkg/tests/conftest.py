#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Configuración global para las pruebas de pytest.
Define fixtures comunes para todos los tests.
"""

import os
import sys
import pytest

# Agregar la ruta raíz del proyecto al PYTHONPATH
# Esto permite importar módulos de forma absoluta en los tests
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.algebra.parser import parse_polynomial
from src.galois.permutations import named_group


@pytest.fixture(scope="session")
def project_root():
    """Devuelve la ruta raíz del proyecto."""
    return os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))


@pytest.fixture
def sample_polynomials():
    """Polinomios de muestra usados en varias suites."""
    return {
        'cubic_s3': parse_polynomial('x^3 - x - 1'),
        'cubic_c3': parse_polynomial('x^3 - 3*x - 1'),
        'quartic_c4': parse_polynomial('x^4 + x^3 + x^2 + x + 1'),
        'quartic_d4': parse_polynomial('x^4 - 2'),
        'family_cubic': parse_polynomial('x^3 - x - t'),
    }


@pytest.fixture
def small_groups():
    """Grupos de permutaciones pequeños."""
    return {
        'S3': named_group('S3'),
        'A4': named_group('A4'),
        'S4': named_group('S4'),
        'D4': named_group('D4'),
    }
