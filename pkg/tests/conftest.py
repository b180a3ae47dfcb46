"""Shared fixtures: small groups built directly from permutations and explicit
irreducible matrix models used as an independent oracle for character tables."""

from __future__ import annotations

import itertools

import pytest

from edrep.cyclotomic import CycloNum
from edrep.groups import from_generators, quaternion_semidirect, schilling_two_group


def Z(x) -> CycloNum:
    return x if isinstance(x, CycloNum) else CycloNum.rational(x)


def mat(rows) -> tuple:
    return tuple(tuple(Z(x) for x in row) for row in rows)


def s3():
    return from_generators([(1, 2, 0), (1, 0, 2)])


def c2xc2():
    return from_generators([(1, 0, 2, 3), (0, 1, 3, 2)])


def d4():
    return from_generators([(1, 2, 3, 0), (0, 3, 2, 1)])


def cyclic(n: int):
    return from_generators([tuple((i + 1) % n for i in range(n))])


def q8():
    return schilling_two_group(4)


def qs3():
    return quaternion_semidirect(3)


def explicit_irreducibles(name: str) -> list[list[tuple]]:
    """Generator images of every irreducible representation, written by hand."""
    i = CycloNum.zeta(4)
    w = CycloNum.zeta(3)
    if name == "S3":
        # generators: 3-cycle, transposition
        return [[mat([[1]]), mat([[1]])], [mat([[1]]), mat([[-1]])],
                [mat([[0, -1], [1, -1]]), mat([[0, 1], [1, 0]])]]
    if name == "C2xC2":
        return [[mat([[s]]), mat([[t]])] for s, t in itertools.product((1, -1), repeat=2)]
    if name == "D4":
        ones = [[mat([[s]]), mat([[t]])] for s, t in itertools.product((1, -1), repeat=2)]
        return ones + [[mat([[0, -1], [1, 0]]), mat([[1, 0], [0, -1]])]]
    if name == "Q8":
        # generators a (order 4), y with y a y^-1 = a^-1, y^2 = a^2
        ones = [[mat([[s]]), mat([[t]])] for s, t in itertools.product((1, -1), repeat=2)]
        return ones + [[mat([[i, 0], [0, -i]]), mat([[0, -1], [1, 0]])]]
    if name == "QS3":
        # generators a (order 3), y (order 4) with y a y^-1 = a^-1
        ones = [[mat([[1]]), mat([[i ** j]])] for j in range(4)]
        twos = [[mat([[w, 0], [0, w ** 2]]), mat([[0, -1], [1, 0]])],
                [mat([[w, 0], [0, w ** 2]]), mat([[0, 1], [1, 0]])]]
        return ones + twos
    raise KeyError(name)


SMALL_GROUPS = {"S3": s3, "C2xC2": c2xc2, "D4": d4, "Q8": q8, "QS3": qs3}


@pytest.fixture(scope="session")
def tables():
    from edrep.characters import character_table
    return {name: character_table(make()) for name, make in SMALL_GROUPS.items()}
