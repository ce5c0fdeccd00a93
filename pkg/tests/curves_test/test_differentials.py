#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests para differentials.py: triángulo de Newton, género y espectro de
delta_q sobre las diferenciales de primera especie.
"""

import sys
import os
import unittest

# Configurar path para imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.algebra.number_theory import euler_phi
from src.curves.differentials import (
    NewtonTriangle, interior_points, genus_lattice, genus_formula,
    eigen_multiplicity, full_spectrum, primitive_spectrum, primitive_mass,
    expected_primitive_mass, lattice_spectrum, pole_order_bound_holds,
    guaranteed_eigen_residues, complementary_points
)
from src.jacobians.cm_obstruction import coprime_pairs
from src.utils.errors import InvalidInputError


class TestNewtonTriangle(unittest.TestCase):
    """Tests para el triángulo y sus puntos interiores."""

    def test_validation(self):
        """Test: n < 3, q no potencia de primo y no coprimos."""
        for n, q in [(2, 3), (3, 6), (4, 2), (3, 1)]:
            with self.assertRaises(InvalidInputError):
                NewtonTriangle(n, q)
        T = NewtonTriangle(5, 9)
        self.assertEqual((T.p, T.r), (3, 2))
        print("✓ test_validation: EXITOSO")

    def test_interior_points_3_4(self):
        """Test: Delta_{3,4} tiene los puntos (1,1), (1,2), (2,1)."""
        points = interior_points(NewtonTriangle(3, 4))
        self.assertEqual([(e.j, e.i) for e in points], [(1, 1), (1, 2), (2, 1)])
        self.assertEqual(points[0].differential, 'x^0 dx / y^3')
        print("✓ test_interior_points_3_4: EXITOSO")

    def test_genus_values(self):
        """Test: Valores conocidos del género."""
        self.assertEqual(genus_formula(3, 2), 1)
        self.assertEqual(genus_formula(3, 4), 3)
        self.assertEqual(genus_formula(4, 3), 3)
        self.assertEqual(genus_formula(5, 4), 6)
        print("✓ test_genus_values: EXITOSO")

    def test_genus_large_prime(self):
        """Test: q = 10^9 + 7 no recorre los divisores de q."""
        self.assertEqual(genus_formula(3, 1000000007), 1000000006)
        self.assertEqual(genus_formula(4, 3 ** 19), 3 * (3 ** 19 - 1) // 2)
        print("✓ test_genus_large_prime: EXITOSO")

    def test_genus_lattice_matches_formula(self):
        """Test: Recuento de puntos = (n-1)(q-1)/2 en un barrido pequeño."""
        for n, q in coprime_pairs(range(3, 12), 32):
            self.assertEqual(genus_lattice(NewtonTriangle(n, q)), genus_formula(n, q), msg=f"{n},{q}")
        print("✓ test_genus_lattice_matches_formula: EXITOSO")

    def test_pole_order_bound_equals_interior(self):
        """Test: La cota de orden de polo describe exactamente el interior."""
        T = NewtonTriangle(5, 8)
        for j in range(1, 5):
            for i in range(1, 8):
                self.assertEqual(pole_order_bound_holds(j, i, 5, 8), T.is_interior(j, i))
        print("✓ test_pole_order_bound_equals_interior: EXITOSO")

    def test_complementary_points(self):
        """Test: La involución conserva el número de puntos."""
        T = NewtonTriangle(4, 7)
        self.assertEqual(len(complementary_points(T)), genus_lattice(T))
        print("✓ test_complementary_points: EXITOSO")

    def test_interior_and_complementary_partition_rectangle(self):
        """Test: Interior e imagen por la involución parten [1, n-1] x [1, q-1]."""
        for n, q in coprime_pairs(range(3, 12), 64):
            T = NewtonTriangle(n, q)
            interior = {(e.j, e.i) for e in interior_points(T)}
            complement = set(complementary_points(T))
            rectangle = {(j, i) for j in range(1, n) for i in range(1, q)}
            self.assertFalse(interior & complement, msg=f"{n},{q}")
            self.assertEqual(interior | complement, rectangle, msg=f"{n},{q}")
        print("✓ test_interior_and_complementary_partition_rectangle: EXITOSO")


class TestSpectrum(unittest.TestCase):
    """Tests para el espectro de autovalores."""

    def test_eigen_multiplicity(self):
        """Test: floor(n i / q) y rango de i."""
        self.assertEqual([eigen_multiplicity(3, 4, i) for i in (1, 2, 3)], [0, 1, 2])
        with self.assertRaises(InvalidInputError):
            eigen_multiplicity(3, 4, 0)
        with self.assertRaises(InvalidInputError):
            eigen_multiplicity(3, 4, 4)
        print("✓ test_eigen_multiplicity: EXITOSO")

    def test_eigen_multiplicity_zero_iff_below_q(self):
        """Test: floor(n i / q) = 0 exactamente cuando n i < q."""
        for n, q in coprime_pairs(range(3, 12), 128):
            for i in range(1, q):
                self.assertEqual(eigen_multiplicity(n, q, i) == 0, n * i < q, msg=f"{n},{q},{i}")
        print("✓ test_eigen_multiplicity_zero_iff_below_q: EXITOSO")

    def test_full_spectrum_total_is_genus(self):
        """Test: La suma de multiplicidades es el género."""
        for n, q in coprime_pairs(range(3, 10), 27):
            self.assertEqual(full_spectrum(n, q).total(), genus_formula(n, q))
        print("✓ test_full_spectrum_total_is_genus: EXITOSO")

    def test_lattice_spectrum_matches_formula(self):
        """Test: Recuento por rectas horizontales = floor(n i / q)."""
        for n, q in [(3, 4), (4, 9), (5, 8), (7, 16)]:
            self.assertEqual(lattice_spectrum(NewtonTriangle(n, q)).multiplicities,
                             full_spectrum(n, q).multiplicities)
        print("✓ test_lattice_spectrum_matches_formula: EXITOSO")

    def test_primitive_spectrum(self):
        """Test: Solo residuos primos con p; masa (n-1) phi(q) / 2."""
        spectrum = primitive_spectrum(3, 4)
        self.assertEqual(spectrum.multiplicities, {1: 0, 3: 2})
        for n, q in [(3, 8), (4, 9), (5, 27), (6, 25)]:
            self.assertEqual(primitive_mass(n, q), expected_primitive_mass(n, q))
            self.assertEqual(expected_primitive_mass(n, q), (n - 1) * euler_phi(q) // 2)
        print("✓ test_primitive_spectrum: EXITOSO")

    def test_guaranteed_eigen_residues(self):
        """Test: Los residuos altos tienen multiplicidad positiva."""
        self.assertEqual(guaranteed_eigen_residues(3, 4), [2, 3])
        for n, q in [(3, 8), (4, 27), (5, 16)]:
            for i in guaranteed_eigen_residues(n, q):
                self.assertGreater(eigen_multiplicity(n, q, i), 0)
        print("✓ test_guaranteed_eigen_residues: EXITOSO")

    def test_spectrum_serialization(self):
        """Test: Claves como texto en to_dict."""
        data = full_spectrum(3, 4).to_dict()
        self.assertEqual(data['multiplicities'], {'1': 0, '2': 1, '3': 2})
        print("✓ test_spectrum_serialization: EXITOSO")


if __name__ == '__main__':
    unittest.main()
