#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Servicio de invariantes: lógica de aplicación sobre los módulos de cálculo.
Responsabilidad única: validar la petición, delegar en UNA operación del
núcleo y devolver un diccionario {'success': ...} serializable.
"""

import logging
from typing import Any, Callable, Dict, Optional, Sequence

from src.algebra.number_theory import is_prime, prime_power_decomposition
from src.algebra.parser import parse_polynomial
from src.curves.curve_model import chart_identity_check, gluing_exponents
from src.curves.differentials import NewtonTriangle, full_spectrum, genus_formula, interior_points
from src.curves.elliptic import depress_cubic, is_isotrivial, j_invariant, verify_hp_identity
from src.galois.galois_classifier import classify_polynomial
from src.galois.heart_module import heart_centralizer_dim, is_doubly_transitive
from src.galois.permutations import group_from_text, named_group
from src.jacobians.cm_obstruction import invariant_automorphisms, square_case_feasible
from src.jacobians.decomposition import decomposition_ledger, predict_end_algebra, predict_nonisotrivial
from src.utils.errors import InvalidInputError, error_type_of
from src.utils.helpers import to_jsonable

logger = logging.getLogger(__name__)


def resolve_q(q: Optional[int] = None, p: Optional[int] = None, r: Optional[int] = None) -> int:
    """
    Determina q a partir de --q o de --p/--r y valida que sea potencia de primo.

    Raises:
        InvalidInputError: si falta q o no es potencia de primo
    """
    if q is None:
        if p is None or r is None:
            raise InvalidInputError("Se requiere q o el par (p, r)")
        if not is_prime(p) or r < 1:
            raise InvalidInputError(f"p={p} debe ser primo y r={r} >= 1")
        q = p ** r
    elif p is not None or r is not None:
        if p is None or r is None or p ** r != q:
            raise InvalidInputError(f"q={q} no coincide con p={p}, r={r}")
    prime_power_decomposition(q)
    return q


def _echo(n: Optional[int], q: int) -> Dict[str, Any]:
    p, r = prime_power_decomposition(q)
    data = {'q': q, 'p': p, 'r': r}
    if n is not None:
        data = {'n': n, **data}
    return data


class InvariantService:
    """
    Servicio que encapsula las operaciones de invariantes.
    Cada método devuelve {'success': True, ...} o
    {'success': False, 'error': ..., 'error_type': ...}.
    """

    def __init__(self):
        logger.info("Servicio de invariantes inicializado")

    def _run(self, action: str, fn: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
        try:
            payload = fn()
            return {'success': True, **to_jsonable(payload)}
        except Exception as e:
            error_type = error_type_of(e)
            if error_type == 'invalid_input':
                logger.warning(f"Entrada no válida en {action}: {e}")
            else:
                logger.error(f"Error en {action}: {e}")
            return {'success': False, 'error': str(e), 'error_type': error_type}

    def genus(self, n: int, q: int = None, p: int = None, r: int = None) -> Dict[str, Any]:
        """Género (n-1)(q-1)/2 de C_{f,q}."""
        def action():
            qq = resolve_q(q, p, r)
            return {**_echo(n, qq), 'genus': genus_formula(n, qq)}
        return self._run('genus', action)

    def spectrum(self, n: int, q: int = None, p: int = None, r: int = None) -> Dict[str, Any]:
        """Espectro de delta_q* y base de diferenciales."""
        def action():
            qq = resolve_q(q, p, r)
            eigen = full_spectrum(n, qq)
            basis = interior_points(NewtonTriangle(n, qq))
            return {**_echo(n, qq), 'multiplicities': eigen.to_dict()['multiplicities'],
                    'basis': [e.to_dict() for e in basis]}
        return self._run('spectrum', action)

    def decompose(self, n: int, q: int = None, p: int = None, r: int = None) -> Dict[str, Any]:
        """Libro de dimensiones de las partes nuevas."""
        def action():
            qq = resolve_q(q, p, r)
            levels = decomposition_ledger(n, qq)
            return {**_echo(n, qq), 'levels': levels,
                    'total_dim': sum(lv.new_part_dim for lv in levels)}
        return self._run('decompose', action)

    def endo(self, n: int, galois: str, q: int = None, p: int = None, r: int = None) -> Dict[str, Any]:
        """Predicción de End^0."""
        def action():
            qq = resolve_q(q, p, r)
            return predict_end_algebra(n, qq, galois).to_dict()
        return self._run('endo', action)

    def nonisotrivial(self, n: int, galois: str = None, q: int = None, p: int = None,
                      r: int = None, doubly_transitive: Optional[bool] = None) -> Dict[str, Any]:
        """Predicción de no isotrivialidad completa."""
        def action():
            if galois is None and doubly_transitive is None:
                raise InvalidInputError("Se requiere la etiqueta de Galois o la bandera doubly_transitive")
            qq = resolve_q(q, p, r)
            return predict_nonisotrivial(n, qq, galois, doubly_transitive).to_dict()
        return self._run('nonisotrivial', action)

    def cm_record(self, n: int, q: int) -> Dict[str, Any]:
        return self._run('cm-scan', lambda: invariant_automorphisms(n, q).to_dict())

    def feasible_record(self, n: int, q: int) -> Dict[str, Any]:
        return self._run('feasible-scan', lambda: square_case_feasible(n, q).to_dict())

    def galois(self, poly: str) -> Dict[str, Any]:
        """Clasificación de Galois racional o geométrica según la forma del polinomio."""
        def action():
            f = parse_polynomial(poly)
            label, mode = classify_polynomial(f)
            return {'poly': str(f), 'label': label.value, 'mode': mode}
        return self._run('galois', action)

    def jinv(self, poly: str) -> Dict[str, Any]:
        """Invariante j de y^2 = f(x)."""
        def action():
            f = parse_polynomial(poly)
            w = depress_cubic(f)
            j = j_invariant(w)
            return {'poly': str(f), 'weierstrass': w.to_dict(), 'j': str(j.value),
                    'isotrivial': is_isotrivial(j)}
        return self._run('jinv', action)

    def hp_check(self, pole: int = 1728) -> Dict[str, Any]:
        return self._run('hp-check', lambda: {'pole': pole, 'holds': verify_hp_identity(pole)})

    def model_check(self, poly: str, q: int = None, p: int = None, r: int = None) -> Dict[str, Any]:
        """Identidad de cartas del modelo proyectivo."""
        def action():
            qq = resolve_q(q, p, r)
            f = parse_polynomial(poly)
            gluing = gluing_exponents(f.degree(), qq, f)
            return {**gluing.to_dict(), 'poly': str(f), 'holds': chart_identity_check(f, qq)}
        return self._run('model-check', action)

    def heart(self, p: int, group: str = None, degree: int = None,
              generators: Optional[Sequence[str]] = None) -> Dict[str, Any]:
        """Dimensión del centralizador del corazón."""
        def action():
            if generators:
                if degree is None:
                    raise InvalidInputError("Con generadores explícitos se requiere el grado")
                G = group_from_text(degree, generators)
            elif group:
                G = named_group(group, degree)
            else:
                raise InvalidInputError("Se requiere un grupo con nombre o generadores")
            return {'degree': G.degree, 'p': p, 'order': G.order(),
                    'doubly_transitive': is_doubly_transitive(G) if G.degree >= 2 else False,
                    'centralizer_dim': heart_centralizer_dim(G, p)}
        return self._run('heart', action)
