"""
Tests del controlador HTTP de invariantes.
Prueban el paso de parámetros y los códigos de estado de cada ruta.
"""
