#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Descomposición ciclotómica de Q[delta_q], libro de dimensiones de las
partes nuevas J^(f, p^i) y predictor de End^0 / no isotrivialidad para la
tabla de hipótesis (n, Gal(f)) en {(3, S3), (4, S4), (4, A4)}.

Las predicciones son DESCRIPCIONES (etiquetas y dimensiones), nunca
endomorfismos calculados.
"""

import logging
import re
from typing import List, Optional, Tuple, Union

from src.algebra.cyclotomic import cyclotomic_poly
from src.algebra.number_theory import euler_phi, prime_power_decomposition, require_coprime
from src.algebra.polynomial import Polynomial
from src.models.invariant_models import (
    DecompositionLevel, EndAlgebraDescription, EndFactor, GaloisLabel,
    LevelStatus, NonIsotrivialPrediction, Verdict,
)
from src.utils.errors import InvalidInputError, OutsideHypothesesError

logger = logging.getLogger(__name__)

THEOREM_TABLE = {(3, GaloisLabel.S3), (4, GaloisLabel.S4), (4, GaloisLabel.A4)}
DOUBLY_TRANSITIVE_LABELS = {GaloisLabel.S3, GaloisLabel.S4, GaloisLabel.A4}
CONJECTURAL = 'conjectural per cited prior work, not asserted'
CM_CURVE = 'y^2 = x^3 - x'


def _validate(n: int, q: int) -> Tuple[int, int]:
    if not isinstance(n, int) or n < 3:
        raise InvalidInputError(f"n={n} debe ser un entero >= 3")
    p, r = prime_power_decomposition(q)
    require_coprime(n, q)
    return p, r


def factor_geometric_poly(q: int) -> List[Polynomial]:
    """[Phi_p, Phi_{p^2}, ..., Phi_{p^r}]; su producto es 1 + t + ... + t^(q-1)."""
    p, r = prime_power_decomposition(q)
    return [cyclotomic_poly(p, i) for i in range(1, r + 1)]


def new_part_dim(n: int, q: int) -> int:
    """dim J^(f,q) = (n-1)(q - q/p)/2."""
    p, _ = _validate(n, q)
    twice = (n - 1) * (q - q // p)
    if twice % 2:
        raise InvalidInputError(f"Dimensión no entera para n={n}, q={q}")
    return twice // 2


def decomposition_ledger(n: int, q: int) -> List[DecompositionLevel]:
    """Niveles i = 1..r con la dimensión de cada parte nueva; suman el género."""
    p, r = _validate(n, q)
    return [DecompositionLevel(i, p ** i, new_part_dim(n, p ** i)) for i in range(1, r + 1)]


def _parse_label(label: Union[GaloisLabel, str, None]) -> Optional[Union[GaloisLabel, str]]:
    if label is None or isinstance(label, GaloisLabel):
        return label
    try:
        return GaloisLabel.parse(label)
    except ValueError:
        text = str(label).strip().upper()
        if re.fullmatch(r'[SA]\d+', text):
            return text
        raise OutsideHypothesesError(f"outside theorem hypotheses: etiqueta {label}")


def _label_text(label) -> Optional[str]:
    if label is None:
        return None
    return label.value if isinstance(label, GaloisLabel) else label


def _large_symmetric_or_alternating(n: int, label) -> bool:
    """Sn o An con n >= 5 (grupos doblemente transitivos fuera de la tabla)."""
    return isinstance(label, str) and n >= 5 and label in (f"S{n}", f"A{n}")


def _level_factor(n: int, modulus: int) -> EndFactor:
    if (n, modulus) == (3, 2):
        return EndFactor('Q')
    if (n, modulus) == (3, 4):
        return EndFactor('matrix', 4, 2)
    return EndFactor('cyclotomic', modulus)


def _level_annotations(n: int, p: int, r: int) -> List[str]:
    notes = []
    for i in range(1, r + 1):
        m = p ** i
        if (n, m) == (3, 2):
            notes.append("level 1: C_{f,2} elliptic curve, End = Z")
        elif (n, m) == (3, 4):
            notes.append(f"level 2: J^(f,4) isogenous to the square of {CM_CURVE}")
        elif r == 1:
            notes.append(f"End(J(C_{{f,{p}}})) = Z[zeta_{p}]")
        else:
            notes.append(f"level {i}: End(J^(f,{m})) = Z[zeta_{m}]")
    return notes


def predict_end_algebra(n: int, q: int, label) -> EndAlgebraDescription:
    """
    Predicción de End^0 como producto sobre los niveles.

    Args:
        n: Grado de f
        q: Potencia de primo
        label: GaloisLabel o texto ('S3', 'S4', 'A4'; 'Sn'/'An' con n >= 5 da un libro conjetural)

    Returns:
        EndAlgebraDescription con factores, niveles, anotaciones y estado

    Raises:
        OutsideHypothesesError: etiqueta fuera de la tabla de teoremas
        InvalidInputError: entrada no coprima
    """
    p, r = _validate(n, q)
    parsed = _parse_label(label)
    levels = decomposition_ledger(n, q)
    if isinstance(parsed, GaloisLabel) and (n, parsed) in THEOREM_TABLE:
        factors = [_level_factor(n, lv.modulus) for lv in levels]
        description = EndAlgebraDescription(n, q, p, r, parsed.value, factors, levels,
                                            _level_annotations(n, p, r), 'theorem')
    elif _large_symmetric_or_alternating(n, parsed):
        factors = [EndFactor('cyclotomic', lv.modulus) for lv in levels]
        description = EndAlgebraDescription(n, q, p, r, parsed, factors, levels, [], CONJECTURAL)
    else:
        raise OutsideHypothesesError(
            f"outside theorem hypotheses: (n={n}, Gal={_label_text(parsed)})")
    logger.debug(f"End^0 predicho para n={n}, q={q}: {description.product_label}")
    return description


def _is_doubly_transitive_label(n: int, label) -> bool:
    if isinstance(label, GaloisLabel):
        return label in DOUBLY_TRANSITIVE_LABELS and int(label.value[1]) == n
    return _large_symmetric_or_alternating(n, label)


def predict_nonisotrivial(n: int, q: int, label=None,
                          doubly_transitive: Optional[bool] = None) -> NonIsotrivialPrediction:
    """
    Predicción de no isotrivialidad completa de J(C_{f,q}) para f = g(x) - t.

    Para (n, p) = (3, 2) el nivel 1 es la curva elíptica no isotrivial, el
    nivel 2 es isotrivial (cuadrado de una curva CM constante) y los niveles
    >= 3 son completamente no isotriviales.

    Args:
        label: Etiqueta de Galois (opcional si se da doubly_transitive)
        doubly_transitive: Bandera explícita; tiene prioridad sobre la etiqueta

    Returns:
        NonIsotrivialPrediction; fully=None si las hipótesis no se cumplen
    """
    p, r = _validate(n, q)
    parsed = _parse_label(label)
    dt = doubly_transitive if doubly_transitive is not None else _is_doubly_transitive_label(n, parsed)
    text = _label_text(parsed)
    if not dt:
        levels = [LevelStatus(i, p ** i, 'not covered', False) for i in range(1, r + 1)]
        return NonIsotrivialPrediction(n, q, p, r, text, None, levels)
    if (n, p) == (3, 2):
        levels = []
        for i in range(1, r + 1):
            if i == 1:
                levels.append(LevelStatus(1, 2, 'non-isotrivial elliptic curve, End^0 = Q', True))
            elif i == 2:
                levels.append(LevelStatus(2, 4, f'isotrivial: constant CM square of {CM_CURVE}', False))
            else:
                levels.append(LevelStatus(i, 2 ** i, 'completely non-isotrivial', True))
        return NonIsotrivialPrediction(n, q, p, r, text, r == 1, levels)
    levels = [LevelStatus(i, p ** i, 'completely non-isotrivial', True) for i in range(1, r + 1)]
    return NonIsotrivialPrediction(n, q, p, r, text, True, levels)


def bigend_dichotomy(dim_x: int, deg_e: int, centralizer_dim: int) -> Verdict:
    """
    Dicotomía para X de dimensión dim_x con un cuerpo E de grado deg_e
    actuando, y centralizador de dimensión centralizer_dim.

    Formas admitidas: dim_x = deg_e (cota 4) o 2 dim_x = 3 deg_e (cota 9).

    Raises:
        InvalidInputError: relación no admitida o centralizer_dim < 1
    """
    if dim_x < 1 or deg_e < 1:
        raise InvalidInputError("dim_x y deg_e deben ser positivos")
    if centralizer_dim < 1:
        raise InvalidInputError("centralizer_dim debe ser >= 1")
    if (2 * dim_x) % deg_e:
        raise InvalidInputError(f"deg_e={deg_e} no divide a 2*dim_x={2 * dim_x}")
    if dim_x == deg_e:
        square = False
    elif 2 * dim_x == 3 * deg_e:
        square = True
    else:
        raise InvalidInputError(f"Relación no admitida entre dim_x={dim_x} y deg_e={deg_e}")
    bound = (2 * dim_x // deg_e) ** 2
    k = centralizer_dim
    if k > bound:
        return Verdict.OUT_OF_BOUND
    if k == 1:
        return Verdict.EQUALS_E
    if not square:
        return Verdict.CM_TYPE
    if k in (3, 9):
        return Verdict.CM_TYPE
    return Verdict.CONTAINS_CM_SUBVARIETY


def bigend_shape(n: int, p: int) -> Tuple[int, int]:
    """(dim J(C_{f,p}), [Q(zeta_p):Q]) para n en {3, 4}."""
    _, r = _validate(n, p)
    if r != 1:
        raise InvalidInputError(f"p={p} debe ser primo")
    if n not in (3, 4):
        raise InvalidInputError(f"La dicotomía solo cubre n = 3 o 4 (n={n})")
    return (n - 1) * (p - 1) // 2, euler_phi(p)


def bigend_for_jacobian(n: int, p: int, centralizer_dim: int) -> Verdict:
    dim_x, deg_e = bigend_shape(n, p)
    return bigend_dichotomy(dim_x, deg_e, centralizer_dim)
