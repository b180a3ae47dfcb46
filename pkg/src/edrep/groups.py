"""Finite permutation groups with conjugacy class and power-map data.

Groups are stored with their full element list; this is meant for desk-scale
groups (order up to ``DEFAULT_CAP``).  Permutations are tuples ``p`` with
``p[i]`` the image of ``i``, and products compose right to left:
``(g*h)[i] = g[h[i]]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .arith import is_prime, lcm, units
from .errors import BadOrder, BadPrime, CapExceeded, NotPermutation

DEFAULT_CAP = 10_000

Perm = tuple


def perm_mul(g: Perm, h: Perm) -> Perm:
    return tuple(g[i] for i in h)


def perm_inv(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, gi in enumerate(g):
        out[gi] = i
    return tuple(out)


def perm_cycles(g: Perm) -> list[list[int]]:
    seen = [False] * len(g)
    cycles = []
    for i in range(len(g)):
        if not seen[i]:
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = g[j]
            cycles.append(cyc)
    return cycles


def perm_order(g: Perm) -> int:
    return lcm(*(len(c) for c in perm_cycles(g)))


def perm_pow(g: Perm, j: int) -> Perm:
    out = [0] * len(g)
    for cyc in perm_cycles(g):
        n = len(cyc)
        for pos, x in enumerate(cyc):
            out[x] = cyc[(pos + j) % n]
    return tuple(out)


def _check_perms(gens) -> list[Perm]:
    if not gens:
        raise NotPermutation("at least one generator is required")
    gens = [tuple(int(x) for x in g) for g in gens]
    d = len(gens[0])
    for g in gens:
        if len(g) != d or sorted(g) != list(range(d)):
            raise NotPermutation(f"{list(g)} is not a permutation of 0..{d - 1}")
    if d == 0:
        raise NotPermutation("empty permutation")
    return gens


@dataclass(frozen=True)
class FamilyComponent:
    """A named-family factor living on points offset .. offset+size-1.

    The factor acts on those points by its regular representation, so the
    image of ``offset`` under an element identifies the element's normal form.
    """

    kind: str  # "quaternion_semidirect" or "schilling"
    param: int  # p, resp. s
    offset: int
    size: int

    def normal_forms(self) -> list[tuple[int, int]]:
        return _family_normal_forms(self.kind, self.param)

    def project(self, g: Perm) -> tuple[int, int]:
        """Normal form (i, j) of the component of g, meaning a^i y^j."""
        return self.normal_forms()[g[self.offset] - self.offset]

    def to_json(self) -> dict:
        return {"kind": self.kind, "param": self.param, "offset": self.offset, "size": self.size}


class FiniteGroup:
    """Permutation group with elements, classes, exponent and power maps.

    Treat instances as immutable.
    """

    def __init__(self, generators: Sequence[Perm], *, cap: int = DEFAULT_CAP,
                 labels: Sequence[str] | None = None,
                 components: Sequence[FamilyComponent] = (), name: str = ""):
        gens = _check_perms(generators)
        self.generators = tuple(gens)
        self.degree = len(gens[0])
        self.labels = tuple(labels) if labels else tuple(f"g{i + 1}" for i in range(len(gens)))
        if len(self.labels) != len(gens):
            raise NotPermutation("one label per generator is required")
        self.components = tuple(components)
        self.name = name

        identity = tuple(range(self.degree))
        elements = [identity]
        index = {identity: 0}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = perm_mul(s, x)
                    if y not in index:
                        index[y] = len(elements)
                        elements.append(y)
                        nxt.append(y)
                        if len(elements) > cap:
                            raise CapExceeded(f"group order exceeds cap {cap}")
            frontier = nxt
        self.elements = elements
        self.index = index
        self.order = len(elements)

        inv_gens = [perm_inv(s) for s in gens]
        class_of = [-1] * self.order
        classes: list[tuple[int, tuple[int, ...]]] = []
        for i in range(self.order):
            if class_of[i] >= 0:
                continue
            c = len(classes)
            class_of[i] = c
            members = [i]
            stack = [i]
            while stack:
                x = elements[stack.pop()]
                for s, si in zip(gens, inv_gens):
                    y = index[perm_mul(perm_mul(s, x), si)]
                    if class_of[y] < 0:
                        class_of[y] = c
                        members.append(y)
                        stack.append(y)
            classes.append((i, tuple(sorted(members))))
        self.classes = classes
        self.class_of = class_of
        self.class_sizes = tuple(len(m) for _, m in classes)
        self.class_orders = tuple(perm_order(elements[r]) for r, _ in classes)
        self.exponent = lcm(*self.class_orders)

    # basic data
    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def class_rep(self, c: int) -> Perm:
        return self.elements[self.classes[c][0]]

    def class_of_element(self, g: Perm) -> int:
        return self.class_of[self.index[tuple(g)]]

    def power_class(self, c: int, j: int) -> int:
        """Class of g^j for g in class c (any integer j)."""
        return self.class_of[self.index[perm_pow(self.class_rep(c), j)]]

    def power_map(self, j: int) -> tuple[int, ...]:
        return tuple(self.power_class(c, j) for c in range(self.num_classes))

    @cached_property
    def power_class_map(self) -> dict[int, tuple[int, ...]]:
        """Unit j mod exponent -> class permutation c -> class of g^j."""
        return {j: self.power_map(j) for j in units(self.exponent)}

    @cached_property
    def inverse_classes(self) -> tuple[int, ...]:
        return self.power_map(-1)

    def mul(self, g: Perm, h: Perm) -> Perm:
        return perm_mul(g, h)

    def is_abelian(self) -> bool:
        return self.num_classes == self.order

    def prime_power(self) -> tuple[int, int] | None:
        """(p, a) when the order is p^a with a >= 1."""
        n = self.order
        if n == 1:
            return None
        p = next(q for q in range(2, n + 1) if n % q == 0)
        a = 0
        while n % p == 0:
            n //= p
            a += 1
        return (p, a) if n == 1 else None

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<FiniteGroup{tag} order={self.order} classes={self.num_classes} exponent={self.exponent}>"

    # serialization
    def to_json(self) -> dict:
        out = {
            "degree": self.degree,
            "generators": [list(g) for g in self.generators],
            "labels": list(self.labels),
        }
        if self.components:
            out["components"] = [c.to_json() for c in self.components]
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict, cap: int = DEFAULT_CAP) -> FiniteGroup:
        gens = data.get("generators") or []
        if "degree" in data and gens and any(len(g) != int(data["degree"]) for g in gens):
            raise NotPermutation("generator length does not match degree")
        comps = [FamilyComponent(c["kind"], int(c["param"]), int(c["offset"]), int(c["size"]))
                 for c in data.get("components", [])]
        return cls(gens, cap=cap, labels=data.get("labels"), components=comps, name=data.get("name", ""))


def from_generators(gens: Sequence[Sequence[int]], cap: int = DEFAULT_CAP, labels=None) -> FiniteGroup:
    return FiniteGroup([tuple(g) for g in gens], cap=cap, labels=labels)


# named families --------------------------------------------------------------

def _family_normal_forms(kind: str, param: int) -> list[tuple[int, int]]:
    if kind == "quaternion_semidirect":
        return [(i, j) for j in range(4) for i in range(param)]
    if kind == "schilling":
        return [(i, j) for j in range(2) for i in range(param)]
    raise ValueError(f"unknown family {kind}")


def _family_mul(kind: str, param: int, x: tuple[int, int], z: tuple[int, int]) -> tuple[int, int]:
    (i, j), (k, l) = x, z
    sign = -1 if j % 2 else 1
    if kind == "quaternion_semidirect":
        # y a y^-1 = a^-1, y of order 4
        return ((i + sign * k) % param, (j + l) % 4)
    # schilling: y a y^-1 = a^-1, y^2 = a^(s/2)
    i2 = i + sign * k
    jl = j + l
    if jl >= 2:
        i2 += param // 2
        jl -= 2
    return (i2 % param, jl)


def _regular_perm(kind: str, param: int, g: tuple[int, int]) -> Perm:
    nf = _family_normal_forms(kind, param)
    pos = {x: n for n, x in enumerate(nf)}
    return tuple(pos[_family_mul(kind, param, g, x)] for x in nf)


def _family_group(kind: str, param: int, name: str) -> FiniteGroup:
    size = len(_family_normal_forms(kind, param))
    gens = [_regular_perm(kind, param, (1, 0)), _regular_perm(kind, param, (0, 1))]
    comp = FamilyComponent(kind, param, 0, size)
    return FiniteGroup(gens, labels=("a", "y"), components=[comp], name=name)


def quaternion_semidirect(p: int) -> FiniteGroup:
    """<a, y | a^p = y^4 = 1, y a y^-1 = a^-1> of order 4p, for p = 3 mod 4."""
    if not (is_prime(p) and p % 4 == 3):
        raise BadPrime(f"{p} is not a prime congruent to 3 mod 4")
    return _family_group("quaternion_semidirect", p, f"C{p}:C4")


def schilling_two_group(s: int) -> FiniteGroup:
    """<a, y | a^s = 1, y^2 = a^(s/2), y a y^-1 = a^-1> of order 2s, s = 2^(l+2)."""
    if s < 4 or s & (s - 1):
        raise BadOrder(f"{s} is not a power of 2 that is at least 4")
    return _family_group("schilling", s, f"Q{2 * s}")


def direct_product(gs: Sequence[FiniteGroup], cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Product acting on the disjoint union of the factors' point sets."""
    if not gs:
        raise NotPermutation("direct product of an empty list")
    if math.prod(g.order for g in gs) > cap:
        raise CapExceeded(f"product order exceeds cap {cap}")
    total = sum(g.degree for g in gs)
    gens, labels, comps = [], [], []
    offset = 0
    for n, g in enumerate(gs):
        for s, lab in zip(g.generators, g.labels):
            perm = list(range(total))
            for i, si in enumerate(s):
                perm[offset + i] = offset + si
            gens.append(tuple(perm))
            labels.append(f"{lab}{n + 1}" if len(gs) > 1 else lab)
        for c in g.components:
            comps.append(FamilyComponent(c.kind, c.param, c.offset + offset, c.size))
        offset += g.degree
    name = " x ".join(g.name or f"G{n + 1}" for n, g in enumerate(gs))
    return FiniteGroup(gens, cap=cap, labels=labels, components=comps, name=name)


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([tuple((i + 1) % n for i in range(n))], labels=("c",), name=f"C{n}")
