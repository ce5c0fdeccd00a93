"""
Tests del módulo galois: permutaciones, corazón del módulo de
permutaciones y clasificación de Galois.
"""
