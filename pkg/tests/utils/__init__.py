"""
Tests de utilidades: rutas y serialización JSON.
"""
