"""Character tables (Burnside-Dixon), inner products, Frobenius-Schur
indicators, character fields, Galois orbits and envelope dimensions."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .arith import is_prime, lcm
from .cyclotomic import BaseField, CycloNum, field_degree, fixed_by, rank_rational
from .errors import (GroupMismatch, NotACharacter, NotAHomomorphism, NotIrreducible,
                     ValuesNotInField)
from .groups import FiniteGroup, perm_inv


class Character:
    """Class function with cyclotomic values, one per conjugacy class."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values: Sequence[CycloNum]):
        if len(values) != group.num_classes:
            raise ValueError("one value per conjugacy class is required")
        e = group.exponent
        self.group = group
        self.values = tuple(v if isinstance(v, CycloNum) else CycloNum.rational(v) for v in values)
        self.values = tuple(v.lift(lcm(e, v.conductor)) for v in self.values)

    @property
    def degree(self) -> int:
        d = self.values[0]
        if not d.is_integer():
            raise NotACharacter(f"value at identity {d} is not an integer")
        return int(d.rational_value())

    def __add__(self, other: Character) -> Character:
        _same_group(self, other)
        return Character(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, m: int) -> Character:
        return Character(self.group, [v * m for v in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def galois_conjugate(self, j: int) -> Character:
        """chi o (g -> g^j), realized through the power map on classes."""
        G = self.group
        pm = G.power_class_map.get(j % G.exponent) if math.gcd(j, G.exponent) == 1 else None
        if pm is None:
            pm = G.power_map(j)
        return Character(G, [self.values[pm[c]] for c in range(G.num_classes)])

    def __repr__(self):
        return "Character(" + ", ".join(str(v) for v in self.values) + ")"

    def to_json(self) -> dict:
        G = self.group
        return {
            "group": G.to_json(),
            "class_representatives": [list(G.class_rep(c)) for c in range(G.num_classes)],
            "values": [v.to_json() for v in self.values],
        }

    @classmethod
    def from_json(cls, data: dict, group: FiniteGroup | None = None) -> Character:
        G = group if group is not None else FiniteGroup.from_json(data["group"])
        vals = [CycloNum.from_json(v) for v in data["values"]]
        reps = data.get("class_representatives")
        if reps is None:
            return cls(G, vals)
        out: list[CycloNum | None] = [None] * G.num_classes
        for rep, v in zip(reps, vals):
            out[G.class_of_element(tuple(rep))] = v
        if any(v is None for v in out):
            raise GroupMismatch("class representatives do not cover every class")
        return cls(G, out)


def _same_group(a: Character, b: Character) -> None:
    if a.group is not b.group:
        if a.group.to_json() != b.group.to_json():
            raise GroupMismatch("characters belong to different groups")


@dataclass(frozen=True)
class CharacterTable:
    group: FiniteGroup
    irreducibles: tuple[Character, ...]

    def __len__(self):
        return len(self.irreducibles)

    def __getitem__(self, i) -> Character:
        return self.irreducibles[i]

    def degrees(self) -> list[int]:
        return [x.degree for x in self.irreducibles]

    def index_of(self, chi: Character) -> int:
        for i, x in enumerate(self.irreducibles):
            if x.values == chi.values:
                return i
        raise NotIrreducible("character is not in the table")

    def to_json(self) -> dict:
        G = self.group
        return {
            "group": G.to_json(),
            "class_representatives": [list(G.class_rep(c)) for c in range(G.num_classes)],
            "class_sizes": list(G.class_sizes),
            "class_orders": list(G.class_orders),
            "irreducibles": [[v.to_json() for v in x.values] for x in self.irreducibles],
        }

    def to_text(self) -> str:
        G = self.group
        header = ["class"] + [f"{G.class_orders[c]}{chr(97 + c % 26) if c < 26 else c}"
                              for c in range(G.num_classes)]
        sizes = ["size"] + [str(s) for s in G.class_sizes]
        rows = [[f"X.{i + 1}"] + [str(v) for v in x.values] for i, x in enumerate(self.irreducibles)]
        table = [header, sizes] + rows
        widths = [max(len(r[c]) for r in table) for c in range(len(header))]
        return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in table)


# modular linear algebra used by Dixon's method --------------------------------

def _dixon_prime(e: int, order: int) -> int:
    ell = e + 1
    while not (is_prime(ell) and ell * ell > 4 * order):
        ell += e
    return ell


def _primitive_root(ell: int) -> int:
    from .arith import factorize

    fs = list(factorize(ell - 1))
    for g in range(2, ell):
        if all(pow(g, (ell - 1) // q, ell) != 1 for q in fs):
            return g
    return 1


def _matmul_mod(A: np.ndarray, B: np.ndarray, ell: int) -> np.ndarray:
    if ell * ell * max(A.shape[1], 1) < 2**62:
        return (A @ B) % ell
    return np.array((A.astype(object) @ B.astype(object)) % ell, dtype=np.int64)


def _rref_mod(A: np.ndarray, ell: int) -> tuple[np.ndarray, list[int]]:
    A = A.copy() % ell
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            A[[r, sel]] = A[[sel, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, ell) % ell
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r]) % ell) % ell
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _nullspace_mod(A: np.ndarray, ell: int) -> np.ndarray:
    R, pivots = _rref_mod(A, ell)
    ncols = A.shape[1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for n, fcol in enumerate(free):
        basis[n, fcol] = 1
        for i, pc in enumerate(pivots):
            basis[n, pc] = (-R[i, fcol]) % ell
    return basis


def _charpoly_mod(mat: np.ndarray, ell: int) -> list[int]:
    """Characteristic polynomial (low -> high) via Hessenberg reduction."""
    n = mat.shape[0]
    h = mat.copy() % ell
    for m in range(1, n - 1):
        nz = np.nonzero(h[m:, m - 1])[0]
        if nz.size == 0:
            continue
        piv = m + int(nz[0])
        if piv != m:
            h[[piv, m]] = h[[m, piv]]
            h[:, [piv, m]] = h[:, [m, piv]]
        inv = pow(int(h[m, m - 1]), -1, ell)
        for i in range(m + 1, n):
            f = int(h[i, m - 1]) * inv % ell
            if f:
                h[i] = (h[i] - f * h[m]) % ell
                h[:, m] = (h[:, m] + f * h[:, i]) % ell
    h = [[int(x) for x in row] for row in h]
    polys = [[1]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        p = [0] + prev
        for i, c in enumerate(prev):
            p[i] = (p[i] - h[m - 1][m - 1] * c) % ell
        t = 1
        for i in range(1, m):
            t = t * h[m - i][m - i - 1] % ell
            coef = t * h[m - i - 1][m - 1] % ell
            for kk, c in enumerate(polys[m - i - 1]):
                p[kk] = (p[kk] - coef * c) % ell
        polys.append(p)
    return polys[n]


def _roots_mod(poly: list[int], ell: int) -> list[int]:
    xs = np.arange(ell, dtype=np.int64)
    acc = np.zeros(ell, dtype=np.int64)
    for c in reversed(poly):
        acc = (acc * xs + c) % ell
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def _split(space: np.ndarray, mat: np.ndarray, ell: int) -> list[np.ndarray]:
    """Split an invariant subspace (basis vectors as rows) into eigenspaces of mat."""
    basis, pivots = _rref_mod(space, ell)
    d = basis.shape[0]
    images = _matmul_mod(basis, mat.T, ell)
    # column i of coords holds the coordinates of mat * basis[i]
    coords = images[:, pivots].T.copy()
    pieces = []
    for lam in _roots_mod(_charpoly_mod(coords, ell), ell):
        shifted = (coords - lam * np.eye(d, dtype=np.int64)) % ell
        null = _nullspace_mod(shifted, ell)
        pieces.append(_matmul_mod(null, basis, ell))
    if sum(p.shape[0] for p in pieces) != d:
        raise ArithmeticError("class matrices failed to diagonalize modulo the Dixon prime")
    return pieces


def class_structure_constants(G: FiniteGroup) -> np.ndarray:
    """a[j, r, s] = #{(x, y) in C_j x C_r : x y = g_s}."""
    k = G.num_classes
    a = np.zeros((k, k, k), dtype=np.int64)
    inverses = [perm_inv(x) for x in G.elements]
    for s in range(k):
        gs = G.class_rep(s)
        for xi, xinv in enumerate(inverses):
            y = tuple(xinv[i] for i in gs)
            a[G.class_of[xi], G.class_of[G.index[y]], s] += 1
    return a


def character_table(G: FiniteGroup, seed: int = 0) -> CharacterTable:
    """All absolutely irreducible characters of G, with exact values."""
    k = G.num_classes
    e = G.exponent
    n = G.order
    if k == 1:
        return CharacterTable(G, (Character(G, [CycloNum.rational(1, e)]),))
    ell = _dixon_prime(e, n)
    consts = class_structure_constants(G) % ell
    rng = random.Random(seed)
    # a random combination of class matrices separates most characters at once
    coefs = np.array([rng.randrange(1, ell) for _ in range(k)], dtype=np.int64)
    comb = np.zeros((k, k), dtype=np.int64)
    for j in range(k):
        comb = (comb + coefs[j] * consts[j]) % ell
    spaces = [np.eye(k, dtype=np.int64)]
    for mat in [comb] + [consts[j] for j in range(1, k)]:
        if all(sp.shape[0] == 1 for sp in spaces):
            break
        nxt = []
        for sp in spaces:
            nxt.extend(_split(sp, mat, ell) if sp.shape[0] > 1 else [sp])
        spaces = nxt
    if len(spaces) != k or any(sp.shape[0] != 1 for sp in spaces):
        raise ArithmeticError("Dixon splitting did not produce one-dimensional eigenspaces")

    z = pow(_primitive_root(ell), (ell - 1) // e, ell)
    zpow = [pow(z, i, ell) for i in range(e)]
    inv_sizes = [pow(s, -1, ell) for s in G.class_sizes]
    inv_cls = G.inverse_classes
    power_seq = [[G.power_class(c, t) for t in range(G.class_orders[c])] for c in range(k)]
    dft: dict[int, np.ndarray] = {}
    for o in set(G.class_orders):
        step = e // o
        dft[o] = np.array([[zpow[(-step * kk * t) % e] for t in range(o)] for kk in range(o)],
                          dtype=np.int64)
    chars = []
    for sp in spaces:
        w = [int(x) for x in sp[0]]
        w0 = pow(w[0], -1, ell)
        w = [x * w0 % ell for x in w]
        S = sum(w[s] * w[inv_cls[s]] * inv_sizes[s] for s in range(k)) % ell
        d2 = n * pow(S, -1, ell) % ell
        deg = next(d for d in range(1, math.isqrt(n) + 1) if d * d % ell == d2)
        modvals = [deg * w[s] * inv_sizes[s] % ell for s in range(k)]
        values = []
        for c in range(k):
            o = G.class_orders[c]
            vec = np.array([modvals[x] for x in power_seq[c]], dtype=np.int64).reshape(o, 1)
            mults = _matmul_mod(dft[o], vec, ell)[:, 0] * pow(o, -1, ell) % ell
            if int(mults.max()) > deg:
                raise ArithmeticError("eigenvalue multiplicities failed to lift")
            step = e // o
            values.append(CycloNum.from_exponents(e, {kk * step: int(m) for kk, m in enumerate(mults) if m}))
        chars.append(Character(G, values))
    chars.sort(key=lambda x: (x.degree, [tuple(-c for c in v.coeffs) for v in x.values]))
    return CharacterTable(G, tuple(chars))


# operations on characters ----------------------------------------------------

def inner_product(a: Character, b: Character) -> Fraction:
    _same_group(a, b)
    G = a.group
    tot = CycloNum.rational(0, G.exponent)
    for c in range(G.num_classes):
        tot = tot + a.values[c] * b.values[c].conj() * G.class_sizes[c]
    return tot.rational_value() / G.order


def fs_indicator(chi: Character) -> int:
    """Frobenius-Schur indicator (1/|G|) sum_g chi(g^2)."""
    if inner_product(chi, chi) != 1:
        raise NotIrreducible("Frobenius-Schur indicator needs an irreducible character")
    G = chi.group
    tot = CycloNum.rational(0, G.exponent)
    for c in range(G.num_classes):
        tot = tot + chi.values[G.power_class(c, 2)] * G.class_sizes[c]
    val = tot.rational_value() / G.order
    assert val in (-1, 0, 1), val
    return int(val)


def _field_residues(k: BaseField, e: int) -> list[int]:
    """Elements of k's fixing group, reduced to units mod e."""
    L = lcm(k.conductor, e)
    return sorted({j % e for j in k.lift(L).subgroup})


def character_field(chi: Character, k: BaseField) -> BaseField:
    """k(chi): fixing subgroup H_k intersected with the stabilizer of chi's values."""
    L = lcm(chi.group.exponent, k.conductor)
    H = frozenset(j for j in k.lift(L).subgroup
                  if all(v.galois_apply(j % v.conductor) == v for v in chi.values))
    return BaseField(L, H).normalized()


def is_k_valued(chi: Character, k: BaseField) -> bool:
    return all(fixed_by(v, k) for v in chi.values)


def _key(chi: Character) -> tuple:
    # exact, cheap dictionary key (values share the group's conductor)
    return tuple((v.conductor, v.coeffs) for v in chi.values)


def galois_orbits(table: CharacterTable, k: BaseField) -> list[tuple[int, ...]]:
    """Orbits of Gal(k(zeta_e)/k) on the irreducibles."""
    G = table.group
    lookup = {_key(x): i for i, x in enumerate(table.irreducibles)}
    parent = list(range(len(table)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for j in _field_residues(k, G.exponent):
        for i, x in enumerate(table.irreducibles):
            img = lookup[_key(x.galois_conjugate(j))]
            a, b = find(i), find(img)
            if a != b:
                parent[max(a, b)] = min(a, b)
    orbits: dict[int, list[int]] = {}
    for i in range(len(table)):
        orbits.setdefault(find(i), []).append(i)
    return sorted(tuple(o) for o in orbits.values())


def decompose(chi: Character, table: CharacterTable) -> list[int]:
    mults = []
    for x in table.irreducibles:
        m = inner_product(chi, x)
        if m.denominator != 1 or m < 0:
            raise NotACharacter(f"multiplicity {m} is not a nonnegative integer")
        mults.append(int(m))
    return mults


def compose(mults: Sequence[int], table: CharacterTable) -> Character:
    G = table.group
    vals = [CycloNum.rational(0, G.exponent)] * G.num_classes
    for m, x in zip(mults, table.irreducibles):
        if m:
            vals = [a + b * m for a, b in zip(vals, x.values)]
    return Character(G, vals)


def envelope_dimension(chi: Character, k: BaseField, table: CharacterTable) -> int:
    """dim_k Env_k(chi): sum over k-orbits O in chi of [k(chi_O):k] * deg^2."""
    if not is_k_valued(chi, k):
        raise ValuesNotInField("character values are not in the base field")
    mults = decompose(chi, table)
    total = 0
    for orbit in galois_orbits(table, k):
        if mults[orbit[0]] == 0:
            continue
        rep = table[orbit[0]]
        r = field_degree(character_field(rep, k), k)
        assert r == len(orbit), (r, orbit)
        total += r * rep.degree ** 2
    return total


# explicit matrix models ------------------------------------------------------

Matrix = tuple  # tuple of rows of CycloNum


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, m = len(A), len(B[0])
    return tuple(tuple(sum((A[i][t] * B[t][j] for t in range(len(B))), CycloNum.rational(0))
                       for j in range(m)) for i in range(n))


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(CycloNum.rational(1 if i == j else 0) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class MatrixRep:
    """A representation given by one matrix per group element (element order)."""

    group: FiniteGroup
    images: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return len(self.images[0])

    def check_homomorphism(self) -> None:
        G = self.group
        for s in G.generators:
            rs = self.images[G.index[s]]
            for xi, x in enumerate(G.elements):
                sx = G.index[tuple(s[i] for i in x)]
                if mat_mul(rs, self.images[xi]) != self.images[sx]:
                    raise NotAHomomorphism("rho(s x) != rho(s) rho(x)")

    def character(self) -> Character:
        G = self.group
        vals = []
        for c in range(G.num_classes):
            M = self.images[G.classes[c][0]]
            vals.append(sum((M[i][i] for i in range(self.dim)), CycloNum.rational(0)))
        return Character(G, vals)

    def direct_sum(self, other: MatrixRep) -> MatrixRep:
        zero = CycloNum.rational(0)
        out = []
        for A, B in zip(self.images, other.images):
            n, m = len(A), len(B)
            rows = [tuple(A[i]) + (zero,) * m for i in range(n)]
            rows += [(zero,) * n + tuple(B[i]) for i in range(m)]
            out.append(tuple(rows))
        return MatrixRep(self.group, tuple(out))


def matrix_rep_from_generators(G: FiniteGroup, gen_images: Sequence[Matrix]) -> MatrixRep:
    """Extend generator images to every element along the closure order."""
    n = len(gen_images[0])
    images: dict[int, Matrix] = {0: identity_matrix(n)}
    frontier = [0]
    while frontier:
        nxt = []
        for xi in frontier:
            x = G.elements[xi]
            for s, S in zip(G.generators, gen_images):
                yi = G.index[tuple(s[i] for i in x)]
                if yi not in images:
                    images[yi] = mat_mul(S, images[xi])
                    nxt.append(yi)
        frontier = nxt
    rep = MatrixRep(G, tuple(images[i] for i in range(G.order)))
    rep.check_homomorphism()
    return rep


def envelope_matrix_dimension(rep: MatrixRep, k: BaseField) -> int:
    """dim_k of the k-span of {rho(g)}, by exact rank over Q."""
    rep.check_homomorphism()
    L = lcm(k.conductor, *(v.conductor for M in rep.images for row in M for v in row))
    basis = k.lift(L).q_basis()
    rows = []
    for M in rep.images:
        flat = [v.lift(L) for row in M for v in row]
        for b in basis:
            vec: list[Fraction] = []
            for v in flat:
                vec.extend((b * v).coeffs)
            rows.append(vec)
    rank = rank_rational(rows)
    if rank % k.degree():
        raise ArithmeticError("span dimension is not a multiple of [k:Q]")
    return rank // k.degree()


# the named families' designated characters ------------------------------------

def _family_zeta(kind: str, param: int) -> CycloNum:
    return CycloNum.zeta(param)


def family_matrix_rep(G: FiniteGroup, component: int = 0) -> MatrixRep:
    """a -> diag(zeta, zeta^-1), y -> [[0, -1], [1, 0]] on the chosen factor."""
    comp = G.components[component]
    z = _family_zeta(comp.kind, comp.param)
    zero, one = CycloNum.rational(0), CycloNum.rational(1)
    Y = ((zero, -one), (one, zero))
    images = []
    for g in G.elements:
        i, j = comp.project(g)
        D = ((z ** i, zero), (zero, z ** (-i)))
        for _ in range(j):
            D = mat_mul(D, Y)
        images.append(D)
    return MatrixRep(G, tuple(images))


def family_character(G: FiniteGroup, component: int = 0) -> Character:
    """Character of the 2-dimensional representation attached to a family factor."""
    comp = G.components[component]
    z = _family_zeta(comp.kind, comp.param)
    vals = []
    for c in range(G.num_classes):
        i, j = comp.project(G.class_rep(c))
        if j % 2:
            vals.append(CycloNum.rational(0))
        else:
            sign = 1 if j == 0 else -1
            vals.append((z ** i + z ** (-i)) * sign)
    return Character(G, vals)


def orbit_sum(chi: Character, table: CharacterTable, k: BaseField) -> Character:
    """Sum of the Galois orbit over k containing the irreducible chi."""
    i = table.index_of(chi)
    orbit = next(o for o in galois_orbits(table, k) if i in o)
    return compose([1 if t in orbit else 0 for t in range(len(table))], table)
