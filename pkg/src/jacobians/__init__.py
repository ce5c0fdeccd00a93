"""
Jacobianas superelípticas: libro de descomposición ciclotómica,
predictor de End^0 y obstrucciones CM.
"""

from .decomposition import (
    factor_geometric_poly, new_part_dim, decomposition_ledger,
    predict_end_algebra, predict_nonisotrivial, bigend_dichotomy,
)
from .cm_obstruction import invariant_automorphisms, square_case_feasible

__all__ = [
    'factor_geometric_poly', 'new_part_dim', 'decomposition_ledger',
    'predict_end_algebra', 'predict_nonisotrivial', 'bigend_dichotomy',
    'invariant_automorphisms', 'square_case_feasible',
]
