#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests para curve_model.py: exponentes de pegado, identidad entre cartas
y género por Hurwitz.
"""

import sys
import os
import random
from math import gcd

import pytest

# Configurar path para imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.algebra.parser import parse_polynomial
from src.algebra.polynomial import Polynomial, is_squarefree
from src.curves.curve_model import (
    gluing_exponents, chart_identity_check, delta_chart_order,
    delta_fixed_points, hurwitz_genus
)
from src.curves.differentials import genus_formula
from src.jacobians.cm_obstruction import coprime_pairs
from src.utils.errors import InvalidInputError


class TestGluing:
    """Exponentes a, b con b n - a q = 1."""

    @pytest.mark.parametrize("n,q,expected", [(3, 4, (3, 2)), (3, 2, (1, 1)), (4, 9, (7, 3)), (5, 8, (5, 3))])
    def test_known_exponents(self, n, q, expected):
        data = gluing_exponents(n, q)
        assert (data.b, data.a) == expected
        assert data.b * n - data.a * q == 1

    def test_bezout_over_sweep(self):
        for n, q in coprime_pairs(range(3, 20), 64):
            data = gluing_exponents(n, q)
            assert data.a > 0 and 0 < data.b <= q
            assert data.b * n - data.a * q == 1

    def test_rejects_non_coprime(self):
        with pytest.raises(InvalidInputError):
            gluing_exponents(4, 2)

    def test_tilde_f(self):
        data = gluing_exponents(3, 4, parse_polynomial('x^3 - x - 1'))
        assert data.tilde_f == Polynomial([1, 0, -1, -1])
        assert data.to_dict()['tilde_f'] == '-x^3 - x^2 + 1'

    def test_degree_mismatch(self):
        with pytest.raises(InvalidInputError):
            gluing_exponents(4, 3, parse_polynomial('x^3 - 1'))


class TestChartIdentity:
    """Identidad de Laurent entre la carta afín y la del infinito."""

    @pytest.mark.parametrize("text,q", [('x^3 - x - 1', 4), ('x^3 - x', 2), ('x^4 + x + 1', 3),
                                        ('2*x^5 + 2*x + 2', 8), ('x^3 - 2', 7)])
    def test_identity_holds(self, text, q):
        assert chart_identity_check(parse_polynomial(text), q)

    def test_random_squarefree_polynomials(self):
        rng = random.Random(7)
        checked = 0
        while checked < 25:
            n = rng.randint(3, 6)
            q = rng.choice([q for q in (2, 3, 4, 5, 7, 8, 9) if gcd(n, q) == 1])
            coeffs = [rng.randint(-4, 4) for _ in range(n)] + [rng.choice([-2, -1, 1, 2])]
            f = Polynomial(coeffs)
            if not is_squarefree(f):
                continue
            assert chart_identity_check(f, q)
            checked += 1

    def test_shared_polynomials(self, sample_polynomials):
        for name, f in sample_polynomials.items():
            if name != 'family_cubic':
                assert chart_identity_check(f, 5), name

    def test_rejects_repeated_roots(self):
        with pytest.raises(InvalidInputError):
            chart_identity_check(parse_polynomial('x^3 - 3*x + 2'), 4)

    def test_rejects_parameter(self):
        with pytest.raises(InvalidInputError):
            chart_identity_check(parse_polynomial('x^3 - t'), 4)


class TestHurwitz:
    """Ramificación de delta_q y género."""

    def test_fixed_points_and_order(self):
        assert delta_fixed_points(3, 4) == 4
        for n, q in coprime_pairs(range(3, 15), 49):
            assert delta_chart_order(n, q) == q

    def test_hurwitz_matches_genus(self):
        for n, q in coprime_pairs(range(3, 25), 64):
            assert hurwitz_genus(n, q) == genus_formula(n, q)
