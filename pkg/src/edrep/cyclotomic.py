"""Exact arithmetic in cyclotomic fields Q(zeta_e) and their subfields.

A :class:`CycloNum` is stored as the residue of a rational polynomial modulo
the cyclotomic polynomial Phi_e, i.e. by its coordinates in the power basis
1, z, ..., z^(phi(e)-1).  Subfields of Q(zeta_e) are encoded by their fixing
subgroup in (Z/eZ)^* (:class:`BaseField`).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .arith import divisors, lcm, mobius, totient, units
from .errors import BadSubgroup, NotASubfield, NotAUnit, ValuesNotInField


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials (coefficients low -> high), den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(e: int) -> tuple[tuple[int, ...], ...]:
    # row k holds the power-basis coordinates of z^k mod Phi_e, 0 <= k < e
    phi = cyclotomic_poly(e)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(e):
        rows.append(tuple(cur))
        # multiply by z and reduce with the monic relation z^deg = -sum phi_i z^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _canon(c):
    # integral coordinates are kept as ints, which keeps arithmetic fast
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _reduce(e: int, exps: dict[int, Fraction]) -> tuple[Fraction, ...]:
    table = _reduction_table(e)
    out = [0] * len(table[0])
    for k, c in exps.items():
        if not c:
            continue
        for i, t in enumerate(table[k % e]):
            if t:
                out[i] += c * t
    return tuple(out)


@lru_cache(maxsize=None)
def _trace_weights(e: int) -> tuple[Fraction, ...]:
    # Tr(z^i) / phi(e) = mu(m) / phi(m) with m = e / gcd(i, e)
    return tuple(Fraction(mobius(e // math.gcd(i, e)), totient(e // math.gcd(i, e)))
                 for i in range(totient(e)))


class CycloNum:
    """Element of Q(zeta_e) with exact rational coordinates."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable):
        coeffs = tuple(_canon(c) for c in coeffs)
        if conductor < 1:
            raise ValueError("conductor must be positive")
        if len(coeffs) != totient(conductor):
            raise ValueError(f"expected {totient(conductor)} coefficients, got {len(coeffs)}")
        self.conductor = conductor
        self.coeffs = coeffs

    # constructors
    @classmethod
    def rational(cls, q, conductor: int = 1) -> CycloNum:
        n = totient(conductor)
        return cls(conductor, [q] + [0] * (n - 1))

    @classmethod
    def zeta(cls, e: int, k: int = 1) -> CycloNum:
        return cls(e, _reduce(e, {k % e: 1}))

    @classmethod
    def from_exponents(cls, e: int, exps: dict[int, object]) -> CycloNum:
        """sum of c * zeta_e^k over the mapping k -> c."""
        acc: dict[int, Fraction] = {}
        for k, c in exps.items():
            acc[k % e] = acc.get(k % e, 0) + _canon(c)
        return cls(e, _reduce(e, acc))

    # conductor handling
    def lift(self, L: int) -> CycloNum:
        if L % self.conductor:
            raise ValueError(f"{self.conductor} does not divide {L}")
        if L == self.conductor:
            return self
        step = L // self.conductor
        return CycloNum(L, _reduce(L, {i * step: c for i, c in enumerate(self.coeffs) if c}))

    def _common(self, other) -> tuple[CycloNum, CycloNum]:
        if not isinstance(other, CycloNum):
            other = CycloNum.rational(other, self.conductor)
        L = lcm(self.conductor, other.conductor)
        return self.lift(L), other.lift(L)

    # ring structure
    def __add__(self, other):
        a, b = self._common(other)
        return CycloNum(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._common(other)
        return CycloNum(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.conductor, [c * other for c in self.coeffs])
        a, b = self._common(other)
        e = a.conductor
        acc: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    k = (i + j) % e
                    acc[k] = acc.get(k, 0) + x * y
        return CycloNum(e, _reduce(e, acc))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return (self.inverse()) ** (-n)
        out = CycloNum.rational(1, self.conductor)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> CycloNum:
        """Inverse via the product of the other Galois conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        others = CycloNum.rational(1, self.conductor)
        for j in units(self.conductor)[1:]:
            others = others * self.galois_apply(j)
        norm = (self * others).rational_value()
        return others * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    # comparison
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash(self.normalized_trace())

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0])

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    # Galois action
    def galois_apply(self, j: int) -> CycloNum:
        """Image under zeta_e -> zeta_e^j."""
        e = self.conductor
        if math.gcd(j, e) != 1:
            raise NotAUnit(f"{j} is not a unit mod {e}")
        if j % e == 1 % e:
            return self
        return CycloNum(e, _reduce(e, {(i * j) % e: c for i, c in enumerate(self.coeffs) if c}))

    def conj(self) -> CycloNum:
        return self.galois_apply(-1)

    def normalized_trace(self) -> Fraction:
        """Tr_{Q(zeta_e)/Q}(x) / phi(e); independent of the chosen conductor."""
        weights = _trace_weights(self.conductor)
        return sum((c * w for c, w in zip(self.coeffs, weights) if c), Fraction(0))

    def minimal_conductor(self) -> int:
        for f in divisors(self.conductor):
            if self.in_conductor(f):
                return f
        return self.conductor

    def in_conductor(self, f: int) -> bool:
        # x lies in Q(zeta_f) iff fixed by every unit that is 1 mod f
        e = self.conductor
        return all(self.galois_apply(j) == self for j in units(e) if j % f == 1 % f)

    def reduce_conductor(self) -> CycloNum:
        f = self.minimal_conductor()
        if f == self.conductor:
            return self
        # coordinates in the power basis of Q(zeta_f) are unique; solve for them
        cols = [CycloNum.zeta(f, i).lift(self.conductor).coeffs for i in range(totient(f))]
        return CycloNum(f, _solve_rational(cols, list(self.coeffs)))

    # display / serialization
    def to_complex(self) -> complex:
        e = self.conductor
        return sum(float(c) * cmath.exp(2j * math.pi * i / e) for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"CycloNum({self})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if i == 0 else (f"z{self.conductor}" + (f"^{i}" if i > 1 else ""))
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> CycloNum:
        return cls(int(data["conductor"]), [Fraction(c) for c in data["coeffs"]])


def _solve_rational(cols: list[tuple[Fraction, ...]], rhs: list[Fraction]) -> list[Fraction]:
    # least-effort exact solve of sum x_i cols[i] = rhs (columns independent)
    n = len(cols)
    rows = [[cols[j][i] for j in range(n)] + [rhs[i]] for i in range(len(rhs))]
    piv_row = 0
    where = [-1] * n
    for col in range(n):
        sel = next((r for r in range(piv_row, len(rows)) if rows[r][col]), None)
        if sel is None:
            continue
        rows[piv_row], rows[sel] = rows[sel], rows[piv_row]
        inv = 1 / rows[piv_row][col]
        rows[piv_row] = [v * inv for v in rows[piv_row]]
        for r in range(len(rows)):
            if r != piv_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv_row])]
        where[col] = piv_row
        piv_row += 1
    return [rows[where[c]][n] if where[c] >= 0 else Fraction(0) for c in range(n)]


def galois_apply(x: CycloNum, j: int) -> CycloNum:
    return x.galois_apply(j)


@dataclass(frozen=True)
class BaseField:
    """Subfield Q(zeta_e)^H of a cyclotomic field, given by its fixing subgroup H."""

    conductor: int
    subgroup: frozenset[int]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        e = self.conductor
        H = frozenset(j % e for j in self.subgroup)
        object.__setattr__(self, "subgroup", H)
        if any(math.gcd(j, e) != 1 for j in H):
            raise BadSubgroup(f"subgroup contains non-units mod {e}")
        if 1 % e not in H:
            raise BadSubgroup("subgroup must contain 1")
        if any((a * b) % e not in H for a in H for b in H):
            raise BadSubgroup("subgroup not closed under multiplication")

    # named fields
    @classmethod
    def rationals(cls) -> BaseField:
        return cls(1, frozenset({0}), "Q")

    @classmethod
    def cyclotomic(cls, e: int) -> BaseField:
        return cls(e, frozenset({1 % e}), f"Q(zeta_{e})")

    @classmethod
    def real_cyclotomic(cls, e: int) -> BaseField:
        return cls(e, frozenset({1 % e, (-1) % e}), f"Q(zeta_{e})^+")

    def degree(self) -> int:
        """[k : Q]."""
        return totient(self.conductor) // len(self.subgroup)

    def lift(self, L: int) -> BaseField:
        """Same field, encoded inside Q(zeta_L)."""
        if L % self.conductor:
            raise ValueError(f"{self.conductor} does not divide {L}")
        H = frozenset(j for j in units(L) if (j % self.conductor) in self.subgroup)
        return BaseField(L, H, self.label)

    def normalized(self) -> BaseField:
        """Encoding with the smallest possible conductor."""
        L = self.conductor
        for f in divisors(L):
            kernel = [j for j in units(L) if j % f == 1 % f]
            if all(j in self.subgroup for j in kernel):
                return BaseField(f, frozenset(j % f for j in self.subgroup), self.label)
        return self

    def same_field(self, other: BaseField) -> bool:
        L = lcm(self.conductor, other.conductor)
        return self.lift(L).subgroup == other.lift(L).subgroup

    def contains(self, x: CycloNum) -> bool:
        return fixed_by(x, self)

    def contains_field(self, other: BaseField) -> bool:
        L = lcm(self.conductor, other.conductor)
        return self.lift(L).subgroup <= other.lift(L).subgroup

    def is_real(self) -> bool:
        """True when the field is fixed by complex conjugation."""
        return (-1) % self.conductor in self.subgroup

    def coset_representatives(self) -> list[int]:
        """One unit mod e per element of Gal(k/Q)."""
        e = self.conductor
        seen: set[int] = set()
        reps = []
        for j in units(e):
            if j in seen:
                continue
            reps.append(j)
            seen.update((j * h) % e for h in self.subgroup)
        return reps

    def q_basis(self) -> list[CycloNum]:
        """A Q-basis of the field, as elements of Q(zeta_e)."""
        e = self.conductor
        basis: list[CycloNum] = []
        rows: list[list[Fraction]] = []
        for i in range(e):
            t = CycloNum.from_exponents(e, {(i * h) % e: 1 for h in self.subgroup})
            if rank_rational(rows + [list(t.coeffs)]) > len(rows):
                rows.append(list(t.coeffs))
                basis.append(t)
            if len(basis) == self.degree():
                break
        return basis

    def __str__(self):
        if self.label:
            return self.label
        if self.degree() == 1:
            return "Q"
        if len(self.subgroup) == 1:
            return f"Q(zeta_{self.conductor})"
        return f"Q(zeta_{self.conductor})^<{sorted(self.subgroup)}>"

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "fixing_subgroup": sorted(self.subgroup), "label": self.label}

    @classmethod
    def from_json(cls, data: dict) -> BaseField:
        return cls(int(data["conductor"]), frozenset(int(j) for j in data["fixing_subgroup"]), data.get("label", ""))


def fixed_by(x: CycloNum, H) -> bool:
    """True iff x is fixed by every element of H.

    ``H`` is a BaseField or an iterable of units modulo ``x.conductor``.
    """
    e = x.conductor
    if isinstance(H, BaseField):
        L = lcm(e, H.conductor)
        residues = {j % e for j in H.lift(L).subgroup}
    else:
        residues = {j % e for j in H}
    return all(x.galois_apply(j) == x for j in residues)


def stabilizer_field(xs: Iterable[CycloNum]) -> BaseField:
    """The field Q(xs), encoded by {j : sigma_j fixes every x}."""
    xs = list(xs)
    e = lcm(*(x.conductor for x in xs)) if xs else 1
    xs = [x.lift(e) for x in xs]
    H = frozenset(j for j in units(e) if all(x.galois_apply(j) == x for x in xs))
    return BaseField(e, H).normalized()


def field_degree(k: BaseField, sub: BaseField) -> int:
    """[k : sub] for sub contained in k."""
    L = lcm(k.conductor, sub.conductor)
    hk, hs = k.lift(L).subgroup, sub.lift(L).subgroup
    if not hk <= hs:
        raise NotASubfield(f"{sub} is not contained in {k}")
    return len(hs) // len(hk)


def compositum(a: BaseField, b: BaseField) -> BaseField:
    L = lcm(a.conductor, b.conductor)
    return BaseField(L, a.lift(L).subgroup & b.lift(L).subgroup).normalized()


def field_norm(x: CycloNum, k: BaseField) -> Fraction:
    """N_{k/Q}(x) for x in k, as the product of its Galois conjugates."""
    if not fixed_by(x, k):
        raise ValuesNotInField(f"{x} is not in {k}")
    L = lcm(x.conductor, k.conductor)
    kk = k.lift(L)
    out = CycloNum.rational(1, x.conductor)
    for j in kk.coset_representatives():
        out = out * x.galois_apply(j % x.conductor)
    return out.rational_value()


def rank_rational(rows: list[list[Fraction]]) -> int:
    """Rank of a rational matrix by Gaussian elimination."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        sel = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / p[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], p)]
        rank += 1
        if rank == len(rows):
            break
    return rank
