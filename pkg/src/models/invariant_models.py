#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Modelos de datos para los informes de invariantes.
Cada informe se serializa a un diccionario JSON exacto (to_dict) y se
reconstruye desde él (from_dict); los racionales viajan como texto 'a/b'.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from src.algebra.number_theory import euler_phi
from src.algebra.rational import format_rational


class GaloisLabel(str, Enum):
    """Etiqueta de clasificación de Galois para cúbicas y cuárticas."""
    S3 = 'S3'
    C3 = 'C3'
    S4 = 'S4'
    A4 = 'A4'
    D4 = 'D4'
    C4 = 'C4'
    V4 = 'V4'
    REDUCIBLE = 'Reducible'

    @classmethod
    def parse(cls, text: str) -> 'GaloisLabel':
        for label in cls:
            if label.value.lower() == str(text).strip().lower():
                return label
        raise ValueError(f"Etiqueta de Galois desconocida: {text}")


class Verdict(str, Enum):
    """Resultado de la dicotomía de álgebras de endomorfismos grandes."""
    EQUALS_E = 'EqualsE'
    CM_TYPE = 'CMType'
    CONTAINS_CM_SUBVARIETY = 'ContainsCMSubvariety'
    OUT_OF_BOUND = 'OutOfBound'


@dataclass(frozen=True)
class LatticeBasisElement:
    """Punto interior (j, i) del triángulo de Newton y su diferencial x^(j-1) dx / y^(q-i)."""
    j: int
    i: int
    eigen_exponent: int
    q: int

    @property
    def differential(self) -> str:
        return f"x^{self.j - 1} dx / y^{self.q - self.i}"

    def to_dict(self) -> Dict[str, Any]:
        return {'j': self.j, 'i': self.i, 'eigen_exponent': self.eigen_exponent,
                'differential': self.differential}


@dataclass
class EigenSpectrum:
    """Multiplicidades i -> [n i / q] de los autovalores de delta_q* sobre las diferenciales."""
    n: int
    q: int
    multiplicities: Dict[int, int]

    def total(self) -> int:
        return sum(self.multiplicities.values())

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'q': self.q,
                'multiplicities': {str(i): m for i, m in sorted(self.multiplicities.items())}}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'EigenSpectrum':
        return cls(data['n'], data['q'], {int(i): int(m) for i, m in data['multiplicities'].items()})


@dataclass(frozen=True)
class EndFactor:
    """Factor de un álgebra de endomorfismos: Q, Q(zeta_m) o Mat_size(Q(zeta_m))."""
    kind: str
    modulus: Optional[int] = None
    size: Optional[int] = None

    @property
    def reduced_dim(self) -> int:
        if self.kind == 'Q':
            return 1
        degree = euler_phi(self.modulus)
        if self.kind == 'cyclotomic':
            return degree
        return self.size * self.size * degree

    @property
    def label(self) -> str:
        if self.kind == 'Q':
            return 'Q'
        if self.kind == 'cyclotomic':
            return f"Q(zeta_{self.modulus})"
        return f"Mat_{self.size}(Q(zeta_{self.modulus}))"

    def to_dict(self) -> Dict[str, Any]:
        if self.kind == 'Q':
            return {'kind': 'Q'}
        if self.kind == 'cyclotomic':
            return {'kind': 'cyclotomic', 'modulus': self.modulus}
        return {'kind': 'matrix', 'size': self.size, 'modulus': self.modulus}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'EndFactor':
        return cls(data['kind'], data.get('modulus'), data.get('size'))


@dataclass(frozen=True)
class DecompositionLevel:
    """Nivel i del libro de dimensiones: parte nueva J^(f, p^i) y su cuerpo Q(zeta_{p^i})."""
    level: int
    modulus: int
    new_part_dim: int

    @property
    def field_label(self) -> str:
        return f"Q(zeta_{self.modulus})"

    def to_dict(self) -> Dict[str, Any]:
        return {'level': self.level, 'modulus': self.modulus,
                'field': self.field_label, 'new_part_dim': self.new_part_dim}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'DecompositionLevel':
        return cls(data['level'], data['modulus'], data['new_part_dim'])


@dataclass
class EndAlgebraDescription:
    """
    Descripción formal de End^0 como producto de factores, con anotaciones
    integrales y el estado (teorema o conjetural).
    """
    n: int
    q: int
    p: int
    r: int
    label: str
    factors: List[EndFactor]
    levels: List[DecompositionLevel]
    annotations: List[str] = field(default_factory=list)
    status: str = 'theorem'

    @property
    def total_reduced_dim(self) -> int:
        return sum(f.reduced_dim for f in self.factors)

    @property
    def product_label(self) -> str:
        return ' x '.join(f.label for f in self.factors)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n, 'q': self.q, 'p': self.p, 'r': self.r, 'galois': self.label,
            'factors': [f.to_dict() for f in self.factors],
            'levels': [lv.to_dict() for lv in self.levels],
            'total_reduced_dim': self.total_reduced_dim,
            'product_label': self.product_label,
            'annotations': list(self.annotations),
            'status': self.status,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'EndAlgebraDescription':
        return cls(data['n'], data['q'], data['p'], data['r'], data['galois'],
                   [EndFactor.from_dict(f) for f in data['factors']],
                   [DecompositionLevel.from_dict(lv) for lv in data['levels']],
                   list(data.get('annotations', [])), data.get('status', 'theorem'))


@dataclass(frozen=True)
class LevelStatus:
    """Estado de isotrivialidad de la parte nueva de un nivel."""
    level: int
    modulus: int
    status: str
    completely_nonisotrivial: bool

    def to_dict(self) -> Dict[str, Any]:
        return {'level': self.level, 'modulus': self.modulus, 'status': self.status,
                'completely_nonisotrivial': self.completely_nonisotrivial}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LevelStatus':
        return cls(data['level'], data['modulus'], data['status'], data['completely_nonisotrivial'])


@dataclass
class NonIsotrivialPrediction:
    """Predicción de no isotrivialidad completa; fully=None significa desconocido."""
    n: int
    q: int
    p: int
    r: int
    label: Optional[str]
    fully: Optional[bool]
    levels: List[LevelStatus] = field(default_factory=list)

    @property
    def nonisotrivial_levels(self) -> List[int]:
        return [lv.level for lv in self.levels if lv.completely_nonisotrivial]

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'q': self.q, 'p': self.p, 'r': self.r, 'galois': self.label,
                'fully': self.fully, 'nonisotrivial_levels': self.nonisotrivial_levels,
                'levels': [lv.to_dict() for lv in self.levels]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'NonIsotrivialPrediction':
        return cls(data['n'], data['q'], data['p'], data['r'], data['galois'], data['fully'],
                   [LevelStatus.from_dict(lv) for lv in data['levels']])


@dataclass
class InvariantAutoReport:
    """Automorfismos m de (Z/qZ)* que dejan invariante la función de multiplicidades."""
    n: int
    q: int
    p: int
    r: int
    invariant_ms: List[int]
    zero_set_ms: List[int] = field(default_factory=list)

    @property
    def divergent(self) -> bool:
        return self.invariant_ms != self.zero_set_ms

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'q': self.q, 'p': self.p, 'r': self.r,
                'invariant_ms': list(self.invariant_ms), 'zero_set_ms': list(self.zero_set_ms),
                'divergent': self.divergent}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'InvariantAutoReport':
        return cls(data['n'], data['q'], data['p'], data['r'],
                   list(data['invariant_ms']), list(data.get('zero_set_ms', [])))


@dataclass
class FeasibilityReport:
    """Criba de factibilidad del caso de centralizador cuadrado."""
    n: int
    q: int
    p: int
    r: int
    b_set: List[int]
    dim_w: Fraction
    divisibility_ok: bool

    @property
    def b_count(self) -> int:
        return len(self.b_set)

    @property
    def feasible(self) -> bool:
        return (self.dim_w.denominator == 1
                and self.b_count <= self.dim_w
                and self.divisibility_ok)

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'q': self.q, 'p': self.p, 'r': self.r,
                'b_count': self.b_count, 'b_set': list(self.b_set),
                'dim_w': format_rational(self.dim_w),
                'divisibility_ok': self.divisibility_ok, 'feasible': self.feasible}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FeasibilityReport':
        return cls(data['n'], data['q'], data['p'], data['r'], list(data['b_set']),
                   Fraction(data['dim_w']), data['divisibility_ok'])


@dataclass(frozen=True)
class GeometricSquareVerdict:
    """Veredicto de cuadrado geométrico: lugares con valuación impar."""
    is_square: bool
    odd_places: List[Any] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {'is_square': self.is_square,
                'odd_places': [[str(place), parity] for place, parity in self.odd_places]}


@dataclass
class AcceptanceResult:
    """Resultado de un criterio de aceptación."""
    criterion: int
    name: str
    passed: bool
    detail: str = ''
    elapsed: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {'criterion': self.criterion, 'name': self.name, 'passed': self.passed,
                'detail': self.detail, 'elapsed_ms': int(self.elapsed * 1000)}
