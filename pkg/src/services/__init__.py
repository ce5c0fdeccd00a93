"""
Módulo de servicios para lógica de aplicación.
Cada servicio maneja un aspecto: invariantes individuales, barridos y
criterios de aceptación.
"""

from .invariant_service import InvariantService
from .sweep_service import SweepService
from .acceptance_service import AcceptanceService

__all__ = [
    'InvariantService',
    'SweepService',
    'AcceptanceService'
]
