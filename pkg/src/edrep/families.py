"""The two named constructions: the Schilling-type 2-groups over Q and the
product of quaternion-type groups over a real multiquadratic-type field."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .characters import Character, CharacterTable, character_table, family_character, orbit_sum
from .cyclotomic import BaseField
from .errors import BadOrder
from .groups import DEFAULT_CAP, FiniteGroup, direct_product, quaternion_semidirect, schilling_two_group
from .schur import _check_prime_list, brauer_field


@dataclass
class FamilyInstance:
    group: FiniteGroup
    character: Character
    field: BaseField
    components: tuple[Character, ...]
    _table: CharacterTable | None = field(default=None, repr=False)

    @cached_property
    def table(self) -> CharacterTable:
        # computed on demand: large products only need the group and character
        return self._table if self._table is not None else character_table(self.group)

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "character": self.character.to_json(),
                "field": self.field.to_json()}


def schilling_family(l: int) -> FamilyInstance:
    """s = 2^(l+2); chi is the Q-orbit sum of the 2-dimensional character."""
    if l < 0:
        raise BadOrder("l must be nonnegative")
    G = schilling_two_group(2 ** (l + 2))
    k = BaseField.rationals()
    table = character_table(G)
    chi1 = family_character(G)
    return FamilyInstance(G, orbit_sum(chi1, table, k), k, (chi1,), table)


def brauer_family(primes: Sequence[int], cap: int = DEFAULT_CAP) -> FamilyInstance:
    """G = prod C_p : C_4 and chi = chi_1 + ... + chi_l over k = Q(zeta_p + zeta_p^-1, ...)."""
    primes = _check_prime_list(primes)
    G = direct_product([quaternion_semidirect(p) for p in primes], cap=cap)
    k = brauer_field(primes)
    comps = tuple(family_character(G, i) for i in range(len(primes)))
    chi = comps[0]
    for c in comps[1:]:
        chi = chi + c
    return FamilyInstance(G, chi, k, comps)
