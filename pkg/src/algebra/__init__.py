"""
Núcleo algebraico exacto: racionales, polinomios, funciones racionales,
polinomios de Laurent, matrices sobre F_p y utilidades ciclotómicas.
"""

from .rational import Rational, is_rational_square, rational_sqrt
from .polynomial import Polynomial, poly_arith, discriminant, squarefree_factor, irreducible_factors, resultant
from .ratfunc import RatFunc
from .laurent import LaurentPolynomial
from .prime_field import PrimeFieldMatrix, rank_mod_p
from .cyclotomic import cyclotomic_poly, geometric_poly, reflection_identity_check
from .number_theory import extended_gcd, prime_power_decomposition, euler_phi
from .parser import parse_polynomial

__all__ = [
    'Rational', 'is_rational_square', 'rational_sqrt',
    'Polynomial', 'poly_arith', 'discriminant', 'squarefree_factor', 'irreducible_factors', 'resultant',
    'RatFunc', 'LaurentPolynomial', 'PrimeFieldMatrix', 'rank_mod_p',
    'cyclotomic_poly', 'geometric_poly', 'reflection_identity_check',
    'extended_gcd', 'prime_power_decomposition', 'euler_phi',
    'parse_polynomial',
]
