"""
Tests del módulo algebra: enteros, racionales, polinomios, funciones
racionales, polinomios de Laurent, matrices sobre F_p y ciclotómicos.
"""
