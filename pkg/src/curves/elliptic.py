#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Invariante j de las curvas elípticas y^2 = f(x) con f cúbica sobre Q o
sobre Q(t), prueba de isotrivialidad y verificación simbólica de la
familia CM h_p: x^3 - c x - c con c = 27 alpha / (4 (alpha - 1728)).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Union

from src.algebra.polynomial import Polynomial
from src.algebra.ratfunc import RatFunc
from src.algebra.rational import as_rational, format_rational
from src.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

J_NORMALIZATION = 6912  # 4 * 1728
CM_POLE = 1728

Scalar = Union[Fraction, RatFunc]


def _as_ratfunc(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    return RatFunc(as_rational(value))


@dataclass(frozen=True)
class WeierstrassData:
    """
    Cúbica deprimida y^2 = x^3 + p x + q_c.

    twist es el coeficiente líder absorbido al hacer mónica la cúbica: la
    curva original es la torsión cuadrática por twist de la deprimida.
    """
    p_coeff: RatFunc
    q_coeff: RatFunc
    twist: RatFunc = field(default_factory=lambda: RatFunc(1))

    def __post_init__(self):
        object.__setattr__(self, 'p_coeff', _as_ratfunc(self.p_coeff))
        object.__setattr__(self, 'q_coeff', _as_ratfunc(self.q_coeff))
        object.__setattr__(self, 'twist', _as_ratfunc(self.twist))
        if self.singular_part().is_zero():
            raise InvalidInputError(f"Cúbica singular: 4p^3 + 27q^2 = 0 (p={self.p_coeff}, q={self.q_coeff})")

    def singular_part(self) -> RatFunc:
        return 4 * self.p_coeff ** 3 + 27 * self.q_coeff ** 2

    def to_dict(self) -> Dict[str, Any]:
        return {'p': str(self.p_coeff), 'q': str(self.q_coeff), 'twist': str(self.twist)}


@dataclass(frozen=True)
class JInvariant:
    value: RatFunc

    def is_constant(self) -> bool:
        return self.value.is_constant()

    def as_multiple_of_1728(self) -> str:
        """Texto '1728*(a/b)' para valores constantes."""
        if not self.is_constant():
            return f"1728*({self.value / CM_POLE})"
        return f"1728*({format_rational(self.value.constant_value() / CM_POLE)})"

    def to_dict(self) -> Dict[str, Any]:
        return {'j': str(self.value), 'isotrivial': self.is_constant()}


def depress_cubic(f: Polynomial) -> WeierstrassData:
    """
    Deprime la cúbica: divide por el coeficiente líder (guardado como twist)
    y desplaza x -> x - b/3.

    Args:
        f: Cúbica con coeficientes Fraction o RatFunc

    Returns:
        WeierstrassData con p = c - b^2/3, q = 2b^3/27 - bc/3 + d

    Raises:
        InvalidInputError: grado distinto de 3 o cúbica singular
    """
    if f.degree() != 3:
        raise InvalidInputError(f"Se esperaba una cúbica, grado {f.degree()}")
    lead = f.leading_coefficient()
    d, c, b = (coeff / lead for coeff in f.coeffs[:3])
    p_coeff = c - b * b / 3
    q_coeff = 2 * b ** 3 / 27 - b * c / 3 + d
    logger.debug(f"Cúbica deprimida: p={p_coeff}, q={q_coeff}, twist={lead}")
    return WeierstrassData(p_coeff, q_coeff, lead)


def j_invariant(w: WeierstrassData) -> JInvariant:
    """j = 6912 p^3 / (4 p^3 + 27 q^2), reducido."""
    return JInvariant(J_NORMALIZATION * w.p_coeff ** 3 / w.singular_part())


def j_invariant_of(f: Polynomial) -> JInvariant:
    return j_invariant(depress_cubic(f))


def is_isotrivial(j: JInvariant) -> bool:
    """Isotrivial si j es una función racional constante."""
    return j.value.is_constant()


def hp_cubic(alpha: Scalar, pole: int = CM_POLE) -> Polynomial:
    """x^3 - c x - c con c = 27 alpha / (4 (alpha - pole))."""
    c = 27 * alpha / (4 * (alpha - pole))
    return Polynomial([-c, -c, 0, 1], 'x')


def verify_hp_identity(pole: int = CM_POLE) -> bool:
    """
    Comprueba simbólicamente, en Q(alpha), que j(x^3 - c x - c) = alpha.

    Args:
        pole: Polo de c; solo 1728 da la identidad

    Returns:
        Verdad de la identidad
    """
    alpha = RatFunc.gen('a')
    j = j_invariant_of(hp_cubic(alpha, pole))
    holds = j.value == alpha
    logger.debug(f"Identidad h_p con polo {pole}: {holds} (j = {j.value})")
    return holds


def hp_j_invariant(alpha_value) -> Fraction:
    """
    Especialización numérica de la familia h_p en alpha = alpha_value.

    Raises:
        InvalidInputError: alpha en {0, 1728} (cúbica singular o c indefinido)
    """
    alpha = as_rational(alpha_value)
    if alpha == CM_POLE:
        raise InvalidInputError("alpha = 1728 anula el denominador de c")
    if alpha == 0:
        raise InvalidInputError("alpha = 0 da una cúbica singular")
    return j_invariant_of(hp_cubic(alpha)).value.constant_value()
