#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests para permutations.py y heart_module.py.
"""

import sys
import os
import itertools

import pytest

# Configurar path para imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.galois.permutations import (
    compose, inverse, from_cycles, parse_permutation, PermGroup,
    group_from_text, named_group
)
from src.galois.heart_module import is_doubly_transitive, heart_action_matrix, heart_centralizer_dim
from src.utils.errors import InvalidInputError


class TestPermutations:
    """Permutaciones como tuplas de imágenes."""

    def test_cycles_and_one_line(self):
        assert from_cycles([[0, 1, 2]], 3) == (1, 2, 0)
        assert parse_permutation('(0 1)(2 3)', 4) == (1, 0, 3, 2)
        assert parse_permutation('1 0 3 2', 4) == (1, 0, 3, 2)
        assert parse_permutation('(0,2)', 3) == (2, 1, 0)

    @pytest.mark.parametrize("text,degree", [('(0 0)', 3), ('(0 5)', 3), ('0 0 1', 3), ('(0 1) x', 3), ('a b', 2)])
    def test_malformed(self, text, degree):
        with pytest.raises(InvalidInputError):
            parse_permutation(text, degree)

    def test_compose_and_inverse(self):
        s = (1, 2, 0)
        assert compose(s, inverse(s)) == (0, 1, 2)
        assert compose(s, s) == (2, 0, 1)


class TestPermGroup:
    """Cierre, órbitas y grupos con nombre."""

    @pytest.mark.parametrize("label,order", [('S3', 6), ('S4', 24), ('A4', 12), ('D4', 8),
                                             ('V4', 4), ('C4', 4), ('S5', 120), ('A5', 60)])
    def test_orders(self, label, order):
        assert named_group(label).order() == order

    def test_trivial_requires_degree(self):
        assert named_group('trivial', 5).order() == 1
        with pytest.raises(InvalidInputError):
            named_group('trivial')
        with pytest.raises(InvalidInputError):
            named_group('Q8')
        with pytest.raises(InvalidInputError):
            named_group('S4', 5)

    def test_orbits_and_transitivity(self):
        G = named_group('D4')
        assert G.is_transitive()
        assert len(G.orbit((0, 1))) == 4
        H = group_from_text(4, ['(0 1)'])
        assert H.orbit(0) == [(0,), (1,)]
        assert not H.is_transitive()

    def test_conjugate_preserves_order(self):
        G = named_group('D4')
        assert G.conjugate((1, 0, 2, 3)).order() == 8

    def test_degree_bound(self):
        with pytest.raises(InvalidInputError):
            PermGroup(13, ())


class TestHeart:
    """Centralizador del corazón sobre F_p."""

    @pytest.mark.parametrize("label,dt", [('S3', True), ('S4', True), ('A4', True),
                                          ('D4', False), ('V4', False), ('C4', False), ('A5', True)])
    def test_double_transitivity(self, label, dt):
        assert is_doubly_transitive(named_group(label)) is dt

    @pytest.mark.parametrize("label,p,expected", [('S3', 2, 1), ('A4', 3, 1), ('S4', 3, 1), ('S4', 5, 1),
                                                  ('D4', 3, 2), ('V4', 3, 3), ('C3', 2, 2), ('C3', 7, 2),
                                                  ('A5', 2, 1)])
    def test_centralizer_dimensions(self, label, p, expected):
        assert heart_centralizer_dim(named_group(label), p) == expected

    @pytest.mark.parametrize("n,p", [(3, 2), (4, 3), (5, 2), (6, 5)])
    def test_trivial_group(self, n, p):
        assert heart_centralizer_dim(named_group('trivial', n), p) == (n - 1) ** 2

    @pytest.mark.parametrize("label", ['S3', 'S4', 'A4', 'S5', 'A5'])
    def test_doubly_transitive_heart_is_absolutely_simple(self, label):
        G = named_group(label)
        for p in (2, 3, 5, 7, 11):
            if G.degree % p:
                assert heart_centralizer_dim(G, p) == 1, f"{label}, p={p}"

    @pytest.mark.parametrize("label,p", [('S3', 5), ('C3', 7), ('S4', 3), ('A4', 5), ('D4', 3),
                                         ('V4', 7), ('C4', 5), ('A5', 2), ('C5', 3)])
    def test_centralizer_invariant_under_conjugation(self, label, p):
        G = named_group(label)
        expected = heart_centralizer_dim(G, p)
        step = 1 if G.degree <= 4 else 7
        for pi in itertools.islice(itertools.permutations(range(G.degree)), 0, None, step):
            assert heart_centralizer_dim(G.conjugate(pi), p) == expected, f"{label}, pi={pi}"

    def test_rejections(self):
        with pytest.raises(InvalidInputError):
            heart_centralizer_dim(named_group('S4'), 2)
        with pytest.raises(InvalidInputError):
            heart_centralizer_dim(named_group('S3'), 4)

    def test_action_is_homomorphism(self):
        g, h = (1, 2, 0, 3), (0, 1, 3, 2)
        lhs = heart_action_matrix(compose(g, h), 5)
        rhs = heart_action_matrix(g, 5) @ heart_action_matrix(h, 5)
        assert lhs == rhs

    def test_shared_groups(self, small_groups):
        """Solo D4 tiene centralizador mayor que los escalares."""
        dims = {label: heart_centralizer_dim(G, 5) for label, G in small_groups.items()}
        assert dims == {'S3': 1, 'A4': 1, 'S4': 1, 'D4': 2}
