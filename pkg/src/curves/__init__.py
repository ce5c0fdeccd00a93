"""
Curvas superelípticas y^q = f(x): diferenciales, modelo de cartas y
curvas elípticas asociadas (q = 2).
"""

from .differentials import (
    NewtonTriangle, interior_points, genus_lattice, genus_formula,
    eigen_multiplicity, full_spectrum, primitive_mass,
)
from .curve_model import gluing_exponents, chart_identity_check, delta_chart_order, hurwitz_genus
from .elliptic import depress_cubic, j_invariant, is_isotrivial, verify_hp_identity

__all__ = [
    'NewtonTriangle', 'interior_points', 'genus_lattice', 'genus_formula',
    'eigen_multiplicity', 'full_spectrum', 'primitive_mass',
    'gluing_exponents', 'chart_identity_check', 'delta_chart_order', 'hurwitz_genus',
    'depress_cubic', 'j_invariant', 'is_isotrivial', 'verify_hp_identity',
]
