#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests para galois_classifier.py.

Las etiquetas racionales se contrastan con
sympy.polys.numberfields.galoisgroups.galois_group como oráculo.
"""

import sys
import os
import unittest
from fractions import Fraction

import sympy
from sympy.polys.numberfields.galoisgroups import galois_group

# Configurar path para imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.algebra.parser import parse_polynomial
from src.algebra.polynomial import Polynomial
from src.algebra.ratfunc import RatFunc, T
from src.galois.galois_classifier import (
    rational_roots, classify_cubic_rational, classify_quartic_rational,
    depressed_quartic, resolvent_cubic, geometric_square_test, family_discriminant,
    classify_cubic_geometric, classify_quartic_geometric, classify_polynomial
)
from src.models.invariant_models import GaloisLabel
from src.utils.errors import InvalidInputError, UnsupportedFamilyError

SYMPY_NAMES = {'S3': 'S3', 'A3': 'C3', 'S4': 'S4', 'A4': 'A4', 'D4': 'D4', 'C4': 'C4', 'V': 'V4'}


def _sympy_label(text: str) -> str:
    x = sympy.Symbol('x')
    poly = sympy.Poly(sympy.sympify(text.replace('^', '**')), x)
    name, _ = galois_group(poly, by_name=True)
    return SYMPY_NAMES[name.name]


class TestRationalClassification(unittest.TestCase):
    """Tests para cúbicas y cuárticas sobre Q."""

    def test_cubic_fixtures(self):
        """Test: Fixtures de cúbicas."""
        self.assertEqual(classify_cubic_rational(parse_polynomial('x^3 - x - 1')), GaloisLabel.S3)
        self.assertEqual(classify_cubic_rational(parse_polynomial('x^3 - 2')), GaloisLabel.S3)
        self.assertEqual(classify_cubic_rational(parse_polynomial('x^3 - 3*x - 1')), GaloisLabel.C3)
        self.assertEqual(classify_cubic_rational(parse_polynomial('x^3 - x')), GaloisLabel.REDUCIBLE)
        print("✓ test_cubic_fixtures: EXITOSO")

    def test_quartic_fixtures(self):
        """Test: Un representante de cada grupo transitivo de grado 4."""
        cases = {
            'x^4 + x^3 + x^2 + x + 1': GaloisLabel.C4,
            'x^4 - 2': GaloisLabel.D4,
            'x^4 + 1': GaloisLabel.V4,
            'x^4 + 8*x + 12': GaloisLabel.A4,
            'x^4 + x + 1': GaloisLabel.S4,
        }
        for text, label in cases.items():
            self.assertEqual(classify_quartic_rational(parse_polynomial(text)), label, msg=text)
        print("✓ test_quartic_fixtures: EXITOSO")

    def test_reducible_quartics(self):
        """Test: Raíz racional o factor cuadrático."""
        for text in ('x^4 - 1', 'x^4 + 4', 'x^4 - 5*x^2 + 6', 'x^4 + 3*x^2 + 2'):
            self.assertEqual(classify_quartic_rational(parse_polynomial(text)), GaloisLabel.REDUCIBLE, msg=text)
        print("✓ test_reducible_quartics: EXITOSO")

    def test_against_sympy(self):
        """Test: Coincidencia con sympy en polinomios irreducibles."""
        for text in ('x^3 + x^2 - 2*x - 1', 'x^3 + 2', 'x^3 - 4*x + 2', 'x^4 - x - 1',
                     'x^4 + 5*x + 5', 'x^4 - 4*x^2 + 2', 'x^4 + 3*x^2 + 1', 'x^4 - 10*x^2 + 1',
                     'x^4 - 3'):
            f = parse_polynomial(text)
            ours = classify_polynomial(f)[0]
            self.assertEqual(ours.value, _sympy_label(text), msg=text)
        print("✓ test_against_sympy: EXITOSO")

    def test_input_validation(self):
        """Test: Grado incorrecto y raíces múltiples."""
        with self.assertRaises(InvalidInputError):
            classify_cubic_rational(parse_polynomial('x^4 + 1'))
        with self.assertRaises(InvalidInputError):
            classify_cubic_rational(parse_polynomial('x^3 - 3*x + 2'))
        with self.assertRaises(InvalidInputError):
            classify_polynomial(parse_polynomial('x^5 - x - 1'))
        print("✓ test_input_validation: EXITOSO")

    def test_helpers(self):
        """Test: Raíces racionales, cuártica deprimida y resolvente."""
        self.assertEqual(rational_roots(parse_polynomial('2*x^3 - 3*x^2 + 1')), [Fraction(-1, 2), Fraction(1)])
        self.assertEqual(depressed_quartic(parse_polynomial('x^4 + 4*x^3')), (-6, 8, -3))
        self.assertEqual(resolvent_cubic(parse_polynomial('x^4 - 2')),
                         Polynomial([0, 8, 0, 1], 'z'))
        print("✓ test_helpers: EXITOSO")

    def test_large_constant_cubic(self):
        """Test: x^3 - 10^20 se clasifica sin recorrer hasta sqrt(10^20)."""
        f = parse_polynomial('x^3 - 100000000000000000000')
        self.assertEqual(rational_roots(f), [])
        self.assertEqual(classify_cubic_rational(f), GaloisLabel.S3)
        self.assertEqual(rational_roots(parse_polynomial('x^3 - 1000000000000000000000')),
                         [Fraction(10 ** 7)])
        print("✓ test_large_constant_cubic: EXITOSO")

    def test_reducible_quartic_with_irreducible_resolvent(self):
        """Test: (x+3)(x^3+3x^2+2x-3) es reducible aunque su resolvente no tenga raíz racional."""
        f = parse_polynomial('x^4 + 6*x^3 + 11*x^2 + 3*x - 9')
        self.assertEqual(rational_roots(resolvent_cubic(f)), [])
        self.assertEqual(resolvent_cubic(f) * 8,
                         Polynomial([243, 126, 20, 8], 'z'))
        self.assertEqual(rational_roots(f), [Fraction(-3)])
        self.assertEqual(classify_quartic_rational(f), GaloisLabel.REDUCIBLE)
        print("✓ test_reducible_quartic_with_irreducible_resolvent: EXITOSO")

    def test_label_invariant_under_translation(self):
        """Test: La etiqueta de f(x) y f(x + c) coincide."""
        texts = ('x^3 - x - 1', 'x^3 - 3*x - 1', 'x^3 - x', 'x^4 - 2', 'x^4 + 1',
                 'x^4 + x^3 + x^2 + x + 1', 'x^4 + 8*x + 12', 'x^4 + x + 1', 'x^4 - 1')
        for text in texts:
            f = parse_polynomial(text)
            expected = classify_polynomial(f)[0]
            for c in (Fraction(1), Fraction(-2), Fraction(3, 2), Fraction(-7, 3)):
                self.assertEqual(classify_polynomial(f.shift(c))[0], expected, msg=f"{text}, c={c}")
        print("✓ test_label_invariant_under_translation: EXITOSO")


class TestGeometricClassification(unittest.TestCase):
    """Tests para la familia g(x) - t sobre Q(t)."""

    def test_geometric_square_test(self):
        """Test: Valuaciones pares en todos los lugares."""
        self.assertTrue(geometric_square_test(RatFunc(-27) * T ** 2).is_square)
        verdict = geometric_square_test(27 * T ** 2 - 4)
        self.assertFalse(verdict.is_square)
        self.assertNotIn('infinity', [place for place, _ in verdict.odd_places])
        odd = geometric_square_test(T).odd_places
        self.assertIn(('infinity', 1), odd)
        with self.assertRaises(InvalidInputError):
            geometric_square_test(RatFunc(0))
        print("✓ test_geometric_square_test: EXITOSO")

    def test_odd_places_are_irreducible_over_q(self):
        """Test: t(t-1) v^2 tiene dos lugares impares, t y t - 1, no t^2 - t."""
        t = Polynomial.gen('t')
        verdict = geometric_square_test(T * (T - 1) * (T + 2) ** 2)
        self.assertFalse(verdict.is_square)
        self.assertEqual(verdict.odd_places, [(t - 1, 1), (t, 1)])
        verdict = geometric_square_test(T * (T ** 2 - 2) / (T + 5) ** 3)
        self.assertEqual(verdict.odd_places, [(t, 1), (t ** 2 - 2, 1), (t + 5, 1)])
        print("✓ test_odd_places_are_irreducible_over_q: EXITOSO")

    def test_square_class_invariant_under_square_factor(self):
        """Test: u y u * v^2 tienen el mismo veredicto y los mismos lugares impares."""
        us = [T, 27 * T ** 2 - 4, T * (T - 1), RatFunc(-3) * (T ** 2 + 1) ** 2, (T - 2) / (T + 1)]
        vs = [T + 1, T ** 2 + 3, RatFunc(2) / (T - 5), 1 / T, RatFunc(Fraction(7, 3))]
        for u in us:
            base = geometric_square_test(u)
            base_places = {str(place) for place, _ in base.odd_places}
            for v in vs:
                scaled = geometric_square_test(u * v ** 2)
                self.assertEqual(scaled.is_square, base.is_square, msg=f"{u}, {v}")
                self.assertEqual({str(place) for place, _ in scaled.odd_places}, base_places,
                                 msg=f"{u}, {v}")
        print("✓ test_square_class_invariant_under_square_factor: EXITOSO")

    def test_family_discriminant(self):
        """Test: disc_x(x^3 - x - t) = 4 - 27 t^2."""
        disc = family_discriminant(parse_polynomial('x^3 - x'))
        self.assertEqual(disc, RatFunc(Polynomial([4, 0, -27], 't')))
        print("✓ test_family_discriminant: EXITOSO")

    def test_cubic_geometric(self):
        """Test: x^3 - x da S3; x^3 da C3 (Kummer)."""
        self.assertEqual(classify_cubic_geometric(parse_polynomial('x^3 - x')), GaloisLabel.S3)
        self.assertEqual(classify_cubic_geometric(parse_polynomial('x^3')), GaloisLabel.C3)
        self.assertEqual(classify_polynomial(parse_polynomial('x^3 - x - t')),
                         (GaloisLabel.S3, 'geometric'))
        print("✓ test_cubic_geometric: EXITOSO")

    def test_quartic_geometric(self):
        """Test: g cuártica con coeficiente lineal deprimido no nulo da S4."""
        self.assertEqual(classify_quartic_geometric(parse_polynomial('x^4 + x')), GaloisLabel.S4)
        self.assertEqual(classify_polynomial(parse_polynomial('x^4 + x^3 + x - t'))[0], GaloisLabel.S4)
        with self.assertRaises(UnsupportedFamilyError):
            classify_quartic_geometric(parse_polynomial('x^4 - x^2'))
        print("✓ test_quartic_geometric: EXITOSO")

    def test_unsupported_family(self):
        """Test: t fuera del término independiente."""
        with self.assertRaises(UnsupportedFamilyError):
            classify_polynomial(parse_polynomial('x^3 - t*x - 1'))
        print("✓ test_unsupported_family: EXITOSO")


if __name__ == '__main__':
    unittest.main()
