#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests para elliptic.py: forma de Weierstrass deprimida, invariante j,
isotrivialidad y la familia h_p.
"""

import sys
import os
import unittest
from fractions import Fraction

# Configurar path para imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.algebra.parser import parse_polynomial
from src.algebra.polynomial import Polynomial
from src.algebra.ratfunc import RatFunc, T
from src.curves.elliptic import (
    WeierstrassData, JInvariant, depress_cubic, j_invariant, j_invariant_of,
    is_isotrivial, hp_cubic, verify_hp_identity, hp_j_invariant
)
from src.galois.galois_classifier import classify_cubic_geometric
from src.models.invariant_models import GaloisLabel
from src.utils.errors import InvalidInputError


class TestWeierstrass(unittest.TestCase):
    """Tests para la cúbica deprimida."""

    def test_depress_cubic(self):
        """Test: x^3 - x - 1 ya está deprimida."""
        w = depress_cubic(parse_polynomial('x^3 - x - 1'))
        self.assertEqual(w.p_coeff, RatFunc(-1))
        self.assertEqual(w.q_coeff, RatFunc(-1))
        self.assertEqual(w.twist, RatFunc(1))
        print("✓ test_depress_cubic: EXITOSO")

    def test_depress_with_shift_and_twist(self):
        """Test: 2(x+1)^3 - 2(x+1) deprime a x^3 - x con twist 2."""
        w = depress_cubic(parse_polynomial('2*x^3 + 6*x^2 + 4*x'))
        self.assertEqual(w.p_coeff, RatFunc(-1))
        self.assertEqual(w.q_coeff, RatFunc(0))
        self.assertEqual(w.twist, RatFunc(2))
        print("✓ test_depress_with_shift_and_twist: EXITOSO")

    def test_singular_cubics(self):
        """Test: Raíces múltiples se rechazan."""
        for text in ('x^3', 'x^3 - 3*x + 2'):
            with self.assertRaises(InvalidInputError, msg=text):
                depress_cubic(parse_polynomial(text))
        with self.assertRaises(InvalidInputError):
            depress_cubic(parse_polynomial('x^4 + 1'))
        print("✓ test_singular_cubics: EXITOSO")


class TestJInvariant(unittest.TestCase):
    """Tests para el invariante j."""

    def test_rational_fixture(self):
        """Test: j(x^3 - x - 1) = 1728 * (-4/23)."""
        j = j_invariant_of(parse_polynomial('x^3 - x - 1'))
        self.assertEqual(j.value, RatFunc(Fraction(-6912, 23)))
        self.assertEqual(j.as_multiple_of_1728(), '1728*(-4/23)')
        print("✓ test_rational_fixture: EXITOSO")

    def test_cm_values(self):
        """Test: j = 1728 para x^3 - x y j = 0 para x^3 - 1."""
        self.assertEqual(j_invariant_of(parse_polynomial('x^3 - x')).value, RatFunc(1728))
        self.assertEqual(j_invariant_of(parse_polynomial('x^3 - 1')).value, RatFunc(0))
        print("✓ test_cm_values: EXITOSO")

    def test_family_non_isotrivial(self):
        """Test: j(x^3 - x - t) = -6912 / (27 t^2 - 4)."""
        j = j_invariant_of(parse_polynomial('x^3 - x - t'))
        expected = RatFunc(Polynomial([-6912], 't'), Polynomial([-4, 0, 27], 't'))
        self.assertEqual(j.value, expected)
        self.assertFalse(is_isotrivial(j))
        print("✓ test_family_non_isotrivial: EXITOSO")

    def test_isotrivial_families(self):
        """Test: Familias de j constante."""
        self.assertTrue(is_isotrivial(j_invariant_of(parse_polynomial('x^3 - t'))))
        self.assertTrue(is_isotrivial(j_invariant_of(parse_polynomial('x^3 - t^2*x'))))
        self.assertTrue(is_isotrivial(JInvariant(RatFunc(1728))))
        print("✓ test_isotrivial_families: EXITOSO")

    def test_j_of_weierstrass_data(self):
        """Test: j directamente desde WeierstrassData con coeficientes en Q(t)."""
        j = j_invariant(WeierstrassData(T, RatFunc(1)))
        self.assertEqual(j.value, 6912 * T ** 3 / (4 * T ** 3 + 27))
        print("✓ test_j_of_weierstrass_data: EXITOSO")

    def test_j_invariant_under_weight_scaling(self):
        """Test: (p, q) -> (u^4 p, u^6 q) no cambia j."""
        pairs = [(T, RatFunc(1)), (RatFunc(-1), RatFunc(-1)), (2 * T - 3, T ** 2 + 1),
                 (RatFunc(Fraction(5, 7)), T)]
        scalings = [RatFunc(2), RatFunc(Fraction(-3, 5)), T + 1, 1 / (T ** 2 - 7)]
        for p_coeff, q_coeff in pairs:
            base = j_invariant(WeierstrassData(p_coeff, q_coeff)).value
            for u in scalings:
                scaled = j_invariant(WeierstrassData(u ** 4 * p_coeff, u ** 6 * q_coeff)).value
                self.assertEqual(scaled, base, msg=f"p={p_coeff}, q={q_coeff}, u={u}")
        print("✓ test_j_invariant_under_weight_scaling: EXITOSO")

    def test_geometric_s3_cubics_are_non_isotrivial(self):
        """Test: 50 cúbicas g con grupo geométrico S3 dan g(x) - t de j no constante."""
        cubics = []
        for a in range(-3, 4):
            for b in range(-3, 5):
                g = Polynomial([a + b, b, a, 1])
                if classify_cubic_geometric(g) == GaloisLabel.S3:
                    cubics.append(g)
        self.assertGreaterEqual(len(cubics), 50)
        for g in cubics[:50]:
            family = Polynomial([RatFunc(c) for c in g.coeffs], 'x') - Polynomial([T], 'x')
            j = j_invariant_of(family)
            self.assertFalse(is_isotrivial(j), msg=str(g))
        print("✓ test_geometric_s3_cubics_are_non_isotrivial: EXITOSO")


class TestHpFamily(unittest.TestCase):
    """Tests para la familia x^3 - c x - c."""

    def test_symbolic_identity(self):
        """Test: j(h_alpha) = alpha solo con el polo 1728."""
        self.assertTrue(verify_hp_identity())
        self.assertFalse(verify_hp_identity(1000))
        print("✓ test_symbolic_identity: EXITOSO")

    def test_specializations(self):
        """Test: Especializaciones numéricas."""
        for alpha in (1, -5, Fraction(7, 3), 3456):
            self.assertEqual(hp_j_invariant(alpha), Fraction(alpha))
        for bad in (0, 1728):
            with self.assertRaises(InvalidInputError):
                hp_j_invariant(bad)
        print("✓ test_specializations: EXITOSO")

    def test_hp_cubic_shape(self):
        """Test: Coeficientes -c, -c, 0, 1."""
        f = hp_cubic(Fraction(3456))
        c = Fraction(27 * 3456, 4 * (3456 - 1728))
        self.assertEqual(f, Polynomial([-c, -c, 0, 1]))
        print("✓ test_hp_cubic_shape: EXITOSO")


if __name__ == '__main__':
    unittest.main()
