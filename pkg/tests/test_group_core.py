from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edrep.errors import BadOrder, BadPrime, CapExceeded, NotPermutation
from edrep.groups import (FiniteGroup, direct_product, from_generators, perm_mul, quaternion_semidirect,
                          schilling_two_group)

from conftest import cyclic, s3


def brute_closure(gens):
    n = len(gens[0])
    seen = {tuple(range(n))}
    while True:
        new = {tuple(g[x[i]] for i in range(n)) for g in gens for x in seen} - seen
        if not new:
            return seen
        seen |= new


def brute_classes(elements):
    n = len(next(iter(elements)))
    inv = {g: tuple(sorted(range(n), key=lambda i: g[i])) for g in elements}
    out, left = [], set(elements)
    while left:
        x = left.pop()
        cls = {tuple(g[x[inv[g][i]]] for i in range(n)) for g in elements}
        left -= cls
        out.append(cls)
    return out


def test_c2():
    G = from_generators([(1, 0)])
    assert G.order == 2 and G.num_classes == 2


def test_s3_order_classes_exponent():
    G = s3()
    assert (G.order, G.num_classes, G.exponent) == (6, 3, 6)


def test_empty_and_malformed_rejected():
    with pytest.raises(NotPermutation):
        from_generators([])
    with pytest.raises(NotPermutation):
        from_generators([(0, 0, 1)])
    with pytest.raises(NotPermutation):
        from_generators([(1, 0), (0, 1, 2)])


def test_cap():
    with pytest.raises(CapExceeded):
        from_generators([(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)], cap=100)


def presentation_elements(p: int) -> set[tuple[int, int]]:
    # a^i y^j with y a y^-1 = a^-1, y^4 = 1: normal forms i mod p, j mod 4
    return {(i, j) for i in range(p) for j in range(4)}


@pytest.mark.parametrize("p", [3, 7, 11])
def test_quaternion_semidirect(p):
    G = quaternion_semidirect(p)
    assert G.order == len(presentation_elements(p)) == 4 * p
    assert G.exponent == 4 * p
    assert G.num_classes == len(brute_classes(set(G.elements)))
    a, y = G.generators
    yinv = tuple(sorted(range(G.degree), key=lambda i: y[i]))
    ainv = tuple(sorted(range(G.degree), key=lambda i: a[i]))
    assert perm_mul(perm_mul(y, a), yinv) == ainv


@pytest.mark.parametrize("p", [5, 2, 9])
def test_quaternion_semidirect_bad_prime(p):
    with pytest.raises(BadPrime):
        quaternion_semidirect(p)


@pytest.mark.parametrize("s,order", [(4, 8), (8, 16), (16, 32), (32, 64)])
def test_schilling(s, order):
    G = schilling_two_group(s)
    assert G.order == order
    assert G.prime_power() == (2, order.bit_length() - 1)
    # generalized quaternion: a unique involution
    assert sum(1 for c in range(G.num_classes) if G.class_orders[c] == 2) == 1


@pytest.mark.parametrize("s", [6, 2, 0, 12])
def test_schilling_bad_order(s):
    with pytest.raises(BadOrder):
        schilling_two_group(s)


def test_direct_products():
    C2, C3 = cyclic(2), cyclic(3)
    assert direct_product([C2]).order == 2
    G = direct_product([C2, C3])
    assert G.order == 6 and G.is_abelian() and G.exponent == 6
    Q = schilling_two_group(4)
    P = direct_product([Q, Q])
    assert (P.order, P.num_classes) == (64, 25)
    with pytest.raises(CapExceeded):
        direct_product([Q, Q, Q], cap=500)


def test_json_round_trip():
    G = quaternion_semidirect(7)
    data = json.loads(json.dumps(G.to_json()))
    H = FiniteGroup.from_json(data)
    assert H.to_json() == G.to_json()
    assert H.order == 28 and H.components == G.components


perms = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.permutations(list(range(n))).map(tuple), min_size=1, max_size=3))


@settings(max_examples=60, deadline=None)
@given(perms)
def test_closure_and_classes_match_brute_force(gens):
    G = from_generators(gens)
    elems = brute_closure(gens)
    assert set(G.elements) == elems
    classes = brute_classes(elems)
    assert sorted(G.class_sizes) == sorted(len(c) for c in classes)
    assert sum(G.class_sizes) == G.order
    assert all(G.order % s == 0 for s in G.class_sizes)
    for c in range(G.num_classes):
        assert {G.elements[i] for i in G.classes[c][1]} in classes
