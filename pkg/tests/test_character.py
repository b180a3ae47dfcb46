from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edrep.characters import (Character, CharacterTable, character_field, character_table, compose,
                              decompose, envelope_dimension, envelope_matrix_dimension, family_character,
                              family_matrix_rep, fs_indicator, galois_orbits, inner_product,
                              matrix_rep_from_generators)
from edrep.cyclotomic import BaseField, CycloNum
from edrep.errors import GroupMismatch, NotACharacter, NotAHomomorphism, NotIrreducible, ValuesNotInField
from edrep.groups import from_generators, quaternion_semidirect, schilling_two_group

from conftest import SMALL_GROUPS, cyclic, explicit_irreducibles, mat, q8, s3

Q = BaseField.rationals()
ZERO = CycloNum.rational(0)


def check_orthogonality(T: CharacterTable) -> None:
    G = T.group
    h = len(T)
    assert h == G.num_classes
    for i in range(h):
        for j in range(h):
            assert inner_product(T[i], T[j]) == (1 if i == j else 0)
    for a in range(h):
        for b in range(h):
            s = sum((T[i].values[a] * T[i].values[b].conj() for i in range(h)), ZERO)
            expected = G.order // G.class_sizes[a] if a == b else 0
            assert s == CycloNum.rational(expected)
    assert sum(d * d for d in T.degrees()) == G.order


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_orthogonality_small(name, tables):
    check_orthogonality(tables[name])


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_table_matches_explicit_models(name, tables):
    T = tables[name]
    G = T.group
    found = set()
    for images in explicit_irreducibles(name):
        rep = matrix_rep_from_generators(G, images)
        chi = rep.character()
        found.add(T.index_of(chi))
        k = character_field(chi, Q)
        assert envelope_dimension(chi, k, T) == envelope_matrix_dimension(rep, k)
    assert found == set(range(len(T)))


def test_degrees():
    assert sorted(character_table(s3()).degrees()) == [1, 1, 2]
    assert sorted(character_table(q8()).degrees()) == [1, 1, 1, 1, 2]
    T = character_table(cyclic(2))
    assert sorted(T.degrees()) == [1, 1]
    assert {v.rational_value() for chi in T for v in chi.values} == {1, -1}


def test_larger_tables():
    for G in (quaternion_semidirect(7), schilling_two_group(16), from_generators(
            [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)])):
        check_orthogonality(character_table(G))


def regular_character(G):
    return Character(G, [CycloNum.rational(G.order if c == 0 else 0) for c in range(G.num_classes)])


def test_inner_products():
    G = s3()
    T = character_table(G)
    triv = next(chi for chi in T if all(v == CycloNum.rational(1) for v in chi.values))
    sign = next(chi for chi in T if chi.degree == 1 and chi != triv)
    two = next(chi for chi in T if chi.degree == 2)
    assert inner_product(triv, triv) == 1
    assert inner_product(two, two) == 1
    assert inner_product(triv, sign) == 0
    with pytest.raises(GroupMismatch):
        inner_product(triv, character_table(q8())[0])


def test_decompose():
    G = s3()
    T = character_table(G)
    mults = decompose(regular_character(G), T)
    assert sorted(zip(T.degrees(), mults)) == [(1, 1), (1, 1), (2, 2)]
    # permutation character on 3 points: fixed-point counts
    perm = Character(G, [CycloNum.rational(sum(1 for i in range(3) if G.class_rep(c)[i] == i))
                         for c in range(G.num_classes)])
    m = decompose(perm, T)
    assert compose(m, T) == perm
    assert sorted(zip(T.degrees(), m)) == [(1, 0), (1, 1), (2, 1)]
    C2 = cyclic(2)
    T2 = character_table(C2)
    m = decompose(Character(C2, [CycloNum.rational(3)] * 2), T2)
    assert sorted(m) == [0, 3]
    with pytest.raises(NotACharacter):
        decompose(Character(C2, [CycloNum.rational(1), CycloNum.rational(0)]), T2)


def test_fs_indicator():
    T = character_table(q8())
    assert fs_indicator(next(c for c in T if c.degree == 2)) == -1
    assert all(fs_indicator(c) == 1 for c in T if c.degree == 1)
    S = character_table(s3())
    assert fs_indicator(next(c for c in S if c.degree == 2)) == 1
    C3 = character_table(cyclic(3))
    assert sorted(fs_indicator(c) for c in C3) == [0, 0, 1]
    with pytest.raises(NotIrreducible):
        fs_indicator(regular_character(s3()))


def test_character_field_and_orbits():
    T = character_table(q8())
    assert character_field(next(c for c in T if c.degree == 2), Q).degree() == 1
    assert galois_orbits(T, Q) == [(i,) for i in range(5)]
    T5 = character_table(cyclic(5))
    faithful = next(c for c in T5 if not all(v.is_rational() for v in c.values))
    assert character_field(faithful, Q).same_field(BaseField.cyclotomic(5))
    assert len(galois_orbits(T5, BaseField.cyclotomic(5))) == 5
    assert character_field(faithful, BaseField.cyclotomic(5)).same_field(BaseField.cyclotomic(5))
    T3 = character_table(cyclic(3))
    assert sorted(len(o) for o in galois_orbits(T3, Q)) == [1, 2]


def test_envelope_dimension():
    T = character_table(q8())
    two = next(c for c in T if c.degree == 2)
    assert envelope_dimension(two, Q, T) == 4
    C3 = cyclic(3)
    assert envelope_dimension(regular_character(C3), Q, character_table(C3)) == 3
    assert envelope_dimension(T[0] * 1, Q, T) == 1
    T5 = character_table(cyclic(5))
    faithful = next(c for c in T5 if not all(v.is_rational() for v in c.values))
    with pytest.raises(ValuesNotInField):
        envelope_dimension(faithful, Q, T5)


def test_envelope_matrix_dimension():
    G = q8()
    i = CycloNum.zeta(4)
    rep = matrix_rep_from_generators(G, [mat([[i, 0], [0, -i]]), mat([[0, -1], [1, 0]])])
    assert envelope_matrix_dimension(rep, Q) == 4
    assert envelope_matrix_dimension(matrix_rep_from_generators(G, [mat([[1]]), mat([[1]])]), Q) == 1
    C2 = cyclic(2)
    assert envelope_matrix_dimension(matrix_rep_from_generators(C2, [mat([[0, 1], [1, 0]])]), Q) == 2
    with pytest.raises(NotAHomomorphism):
        matrix_rep_from_generators(C2, [mat([[0, 2], [1, 0]])])


def test_family_character_matches_matrix_model():
    for G in (quaternion_semidirect(3), quaternion_semidirect(7), schilling_two_group(8)):
        rep = family_matrix_rep(G)
        rep.check_homomorphism()
        chi = rep.character()
        assert chi == family_character(G)
        assert inner_product(chi, chi) == 1
        assert fs_indicator(chi) == -1


def test_character_json_round_trip():
    T = character_table(quaternion_semidirect(3))
    for chi in T:
        data = json.loads(json.dumps(chi.to_json()))
        back = Character.from_json(data)
        assert back.values == chi.values
        assert Character.from_json(data, T.group) == chi


perms = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.permutations(list(range(n))).map(tuple), min_size=1, max_size=2))


@settings(max_examples=30, deadline=None)
@given(perms, st.integers(0, 10))
def test_random_permutation_groups(gens, seed):
    G = from_generators(gens)
    T = character_table(G, seed=seed)
    check_orthogonality(T)
    # degrees divide the group order and the table does not depend on the seed
    assert all(G.order % d == 0 for d in T.degrees())
    assert {tuple(c.values) for c in T} == {tuple(c.values) for c in character_table(G)}


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=5, max_size=5))
def test_decompose_compose_inverse(mults):
    T = character_table(q8())
    chi = compose(mults, T)
    assert decompose(chi, T) == mults
    if any(mults):
        assert inner_product(chi, chi) == sum(m * m for m in mults)
        assert Fraction(chi.degree) == sum(m * d for m, d in zip(mults, T.degrees()))
