"""
Tests del módulo jacobians: descomposición ciclotómica, predicciones de
End^0 y procedimientos de decisión por fuerza bruta.
"""
