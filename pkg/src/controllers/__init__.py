"""
Controladores HTTP: blueprint /api/invariants sobre el InvariantService.
"""

from .invariant_controller import invariant_blueprint

__all__ = [
    'invariant_blueprint'
]
