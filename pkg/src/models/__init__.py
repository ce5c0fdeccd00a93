"""
Modelos de datos del toolkit de invariantes.

Este módulo proporciona:
- Etiquetas de Galois y veredictos de la criba CM
- Espectros de autovalores y bases de diferenciales
- Descripciones de álgebras de endomorfismos y libros de dimensiones
- Informes de barridos y de criterios de aceptación
"""

from .invariant_models import (
    GaloisLabel, Verdict, LatticeBasisElement, EigenSpectrum, EndFactor,
    DecompositionLevel, EndAlgebraDescription, LevelStatus,
    NonIsotrivialPrediction, InvariantAutoReport, FeasibilityReport,
    GeometricSquareVerdict, AcceptanceResult
)

__all__ = [
    'GaloisLabel',
    'Verdict',
    'LatticeBasisElement',
    'EigenSpectrum',
    'EndFactor',
    'DecompositionLevel',
    'EndAlgebraDescription',
    'LevelStatus',
    'NonIsotrivialPrediction',
    'InvariantAutoReport',
    'FeasibilityReport',
    'GeometricSquareVerdict',
    'AcceptanceResult'
]

__version__ = '1.0.0'
