"""
Tests del módulo curves: diferenciales y espectro, modelo de cartas y
curvas elípticas.
"""
