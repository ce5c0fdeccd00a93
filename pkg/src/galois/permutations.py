#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Grupos de permutaciones pequeños (grado <= 12) dados por generadores.

Las permutaciones son tuplas de imágenes sobre {0..n-1}; la composición
(s * t)(k) = s(t(k)). Cierres y órbitas por búsqueda en anchura.
"""

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from src.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]
MAX_DEGREE = 12


def compose(s: Perm, t: Perm) -> Perm:
    return tuple(s[k] for k in t)


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for k, image in enumerate(s):
        out[image] = k
    return tuple(out)


def _check_bijection(perm: Sequence[int], degree: int) -> Perm:
    perm = tuple(int(k) for k in perm)
    if len(perm) != degree or sorted(perm) != list(range(degree)):
        raise InvalidInputError(f"{perm} no es una biyección de {{0..{degree - 1}}}")
    return perm


def from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Perm:
    images = list(range(degree))
    seen = set()
    for cycle in cycles:
        for a in cycle:
            if not 0 <= a < degree or a in seen:
                raise InvalidInputError(f"Ciclo no válido {tuple(cycle)} en grado {degree}")
            seen.add(a)
        for k, a in enumerate(cycle):
            images[a] = cycle[(k + 1) % len(cycle)]
    return tuple(images)


def parse_permutation(text: str, degree: int) -> Perm:
    """
    Analiza una permutación en notación de ciclos '(0 1)(2 3)' o en una
    línea '1 0 3 2'.
    """
    text = text.strip()
    if text.startswith('('):
        groups = re.findall(r'\(([^()]*)\)', text)
        if re.sub(r'\([^()]*\)', '', text).strip():
            raise InvalidInputError(f"Notación de ciclos mal formada: '{text}'")
        cycles = [[int(a) for a in re.split(r'[\s,]+', g.strip()) if a] for g in groups]
        return from_cycles(cycles, degree)
    tokens = [a for a in re.split(r'[\s,\[\]]+', text) if a]
    try:
        return _check_bijection([int(a) for a in tokens], degree)
    except ValueError as e:
        raise InvalidInputError(f"Permutación mal formada: '{text}'") from e


@dataclass(frozen=True)
class PermGroup:
    """Grupo generado por `generators` actuando sobre {0..degree-1}."""
    degree: int
    generators: Tuple[Perm, ...]

    def __post_init__(self):
        if not 1 <= self.degree <= MAX_DEGREE:
            raise InvalidInputError(f"Grado {self.degree} fuera de [1, {MAX_DEGREE}]")
        gens = tuple(_check_bijection(g, self.degree) for g in self.generators)
        object.__setattr__(self, 'generators', gens)

    @cached_property
    def elements(self) -> FrozenSet[Perm]:
        identity = tuple(range(self.degree))
        els = {identity}
        boundary = [identity]
        while boundary:
            new = []
            for g in self.generators:
                for h in boundary:
                    gh = compose(g, h)
                    if gh not in els:
                        els.add(gh)
                        new.append(gh)
            boundary = new
        return frozenset(els)

    def order(self) -> int:
        return len(self.elements)

    def orbit(self, point) -> List:
        """Órbita de un punto o de una tupla de puntos bajo la acción diagonal."""
        start = point if isinstance(point, tuple) else (point,)
        seen = {start}
        boundary = [start]
        while boundary:
            new = []
            for g in self.generators:
                for pt in boundary:
                    image = tuple(g[k] for k in pt)
                    if image not in seen:
                        seen.add(image)
                        new.append(image)
            boundary = new
        return sorted(seen)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def conjugate(self, pi: Perm) -> 'PermGroup':
        """Grupo pi G pi^-1."""
        pi = _check_bijection(pi, self.degree)
        pi_inv = inverse(pi)
        return PermGroup(self.degree, tuple(compose(compose(pi, g), pi_inv) for g in self.generators))


def group_from_text(degree: int, generators: Sequence[str]) -> PermGroup:
    return PermGroup(degree, tuple(parse_permutation(g, degree) for g in generators))


def named_group(label: str, degree: int = None) -> PermGroup:
    """
    Grupos con nombre: Sn, An, Cn, D4, V4 y 'trivial' (este último requiere degree).

    Raises:
        InvalidInputError: etiqueta desconocida
    """
    text = label.strip().upper()
    if text in ('TRIVIAL', '1'):
        if degree is None:
            raise InvalidInputError("El grupo trivial requiere el grado")
        return PermGroup(degree, ())
    if text == 'D4':
        return PermGroup(4, (from_cycles([[0, 1, 2, 3]], 4), from_cycles([[0, 2]], 4)))
    if text == 'V4':
        return PermGroup(4, (from_cycles([[0, 1], [2, 3]], 4), from_cycles([[0, 2], [1, 3]], 4)))
    match = re.fullmatch(r'([SAC])(\d+)', text)
    if not match:
        raise InvalidInputError(f"Grupo desconocido: {label}")
    kind, n = match.group(1), int(match.group(2))
    if degree is not None and degree != n:
        raise InvalidInputError(f"{label} no tiene grado {degree}")
    if kind == 'S':
        gens = (from_cycles([[0, 1]], n), from_cycles([list(range(n))], n)) if n >= 2 else ()
    elif kind == 'A':
        gens = tuple(from_cycles([[0, 1, k]], n) for k in range(2, n))
    else:
        gens = (from_cycles([list(range(n))], n),) if n >= 2 else ()
    return PermGroup(n, gens)
