#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests para AcceptanceService.
Ejecuta los criterios rápidos uno a uno y comprueba la mecánica de run_all
con criterios simulados.
"""

import sys
import os
import unittest

# Configurar path para imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.services.acceptance_service import AcceptanceService
from src.models.invariant_models import AcceptanceResult


class TestAcceptanceCriteria(unittest.TestCase):
    """Criterios individuales."""

    def setUp(self):
        self.service = AcceptanceService(seed=7)

    def test_eleven_criteria_registered(self):
        self.assertEqual([c[0] for c in self.service.criteria], list(range(1, 12)))
        print("✓ test_eleven_criteria_registered: EXITOSO")

    def test_genus_and_spectrum(self):
        """Test: Criterios de género y de masa espectral."""
        for check in (self.service.check_genus_triple, self.service.check_spectrum_mass):
            passed, detail = check()
            self.assertTrue(passed, detail)
        print("✓ test_genus_and_spectrum: EXITOSO")

    def test_algebraic_fixtures(self):
        """Test: End^0, j, h_p, Galois y corazón."""
        for check in (self.service.check_end_predictions, self.service.check_j_fixtures,
                      self.service.check_hp_identity, self.service.check_galois_fixtures,
                      self.service.check_heart):
            passed, detail = check()
            self.assertTrue(passed, f"{check.__name__}: {detail}")
        print("✓ test_algebraic_fixtures: EXITOSO")

    def test_chart_identity(self):
        """Test: Identidad de cartas con semilla fija."""
        passed, detail = self.service.check_chart_identity()
        self.assertTrue(passed, detail)
        self.assertIn('200 trials', detail)
        print("✓ test_chart_identity: EXITOSO")

    def test_random_squarefree_is_reproducible(self):
        import random
        first = self.service.random_squarefree(random.Random(3), 5)
        second = self.service.random_squarefree(random.Random(3), 5)
        self.assertEqual(first, second)
        self.assertEqual(first.degree(), 5)
        self.assertEqual(self.service.random_squarefree(random.Random(3), 4, zero_root=True).coeffs[0], 0)
        print("✓ test_random_squarefree_is_reproducible: EXITOSO")


class TestRunAll(unittest.TestCase):
    """Mecánica de run_all."""

    def test_results_and_exceptions(self):
        """Test: Una excepción cuenta como fallo y no corta la ejecución."""
        service = AcceptanceService()

        def boom():
            raise RuntimeError('sin memoria')

        service.criteria = [(1, 'ok', lambda: (True, 'bien')),
                            (2, 'roto', boom),
                            (3, 'falla', lambda: (False, 'mal'))]
        results = service.run_all()
        self.assertEqual([r.passed for r in results], [True, False, False])
        self.assertTrue(all(isinstance(r, AcceptanceResult) for r in results))
        self.assertEqual(results[1].detail, 'exception: sin memoria')
        self.assertEqual(set(results[0].to_dict()), {'criterion', 'name', 'passed', 'detail', 'elapsed_ms'})
        print("✓ test_results_and_exceptions: EXITOSO")


if __name__ == '__main__':
    unittest.main()
