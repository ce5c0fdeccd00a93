"""
Módulo de tests para el directorio /services.

- InvariantService: una operación por método, con resultados {'success': ...}
- SweepService: barridos ordenados por (n, q)
- AcceptanceService: criterios de aceptación por fuerza bruta

Cada test está diseñado para identificar exactamente qué operación falla.
"""
