"""
Grupos de permutaciones, módulo corazón V_{f,p} y clasificador de Galois.
"""

from .permutations import PermGroup, named_group, parse_permutation, group_from_text
from .heart_module import is_doubly_transitive, heart_centralizer_dim
from .galois_classifier import (
    classify_cubic_rational, classify_quartic_rational, resolvent_cubic,
    geometric_square_test, classify_cubic_geometric, classify_quartic_geometric,
    classify_polynomial,
)

__all__ = [
    'PermGroup', 'named_group', 'parse_permutation', 'group_from_text',
    'is_doubly_transitive', 'heart_centralizer_dim',
    'classify_cubic_rational', 'classify_quartic_rational', 'resolvent_cubic',
    'geometric_square_test', 'classify_cubic_geometric', 'classify_quartic_geometric',
    'classify_polynomial',
]
