"""Hilbert symbols over Q, the norm / two-squares independence test for the
quaternion family, and Schur indices for the supported strategies."""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arith import DEFAULT_RHO_BUDGET, factorize, is_prime, lcm, units
from .characters import Character, character_field, family_character, fs_indicator, inner_product
from .cyclotomic import BaseField, CycloNum, field_degree, field_norm, stabilizer_field
from .errors import (BadPlace, BadPrime, InconsistentHint, InputError, NotIrreducible,
                     SchurUnsupported)
from .groups import FiniteGroup, perm_pow

INFINITY = "inf"
_INF_NAMES = {"inf", "infinity", "oo", "∞", "-1"}


# Hilbert symbols ---------------------------------------------------------------

def _square_class_integer(x) -> int:
    q = Fraction(x)
    if q == 0:
        raise InputError("Hilbert symbol arguments must be nonzero")
    # a/b and a*b differ by the square b^2
    return q.numerator * q.denominator


def _legendre(u: int, p: int) -> int:
    t = pow(u % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def _split_p(x: int, p: int) -> tuple[int, int]:
    a = 0
    while x % p == 0:
        x //= p
        a += 1
    return a, x


def _parse_place(place) -> int | str:
    if isinstance(place, str):
        if place.strip().lower() in _INF_NAMES:
            return INFINITY
        try:
            place = int(place)
        except ValueError:
            raise BadPlace(f"unknown place {place!r}") from None
    if isinstance(place, float) and math.isinf(place):
        return INFINITY
    if isinstance(place, int) and is_prime(place):
        return place
    raise BadPlace(f"{place!r} is neither a prime nor infinity")


def hilbert_symbol(a, b, place) -> int:
    """(a, b)_v for nonzero rationals a, b and v a prime or infinity."""
    v = _parse_place(place)
    a, b = _square_class_integer(a), _square_class_integer(b)
    if v == INFINITY:
        return -1 if a < 0 and b < 0 else 1
    p = v
    alpha, u = _split_p(a, p)
    beta, w = _split_p(b, p)
    if p != 2:
        sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
        return sign * _legendre(u, p) ** beta * _legendre(w, p) ** alpha

    def eps(x):
        return ((x - 1) // 2) % 2

    def omega(x):
        return ((x * x - 1) // 8) % 2

    e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)
    return -1 if e % 2 else 1


def ramification_candidates(a, b) -> list:
    """Places where (a, b) can ramify: infinity, 2 and the odd primes of a and b."""
    primes = {2}
    for x in (Fraction(a), Fraction(b)):
        for n in (x.numerator, x.denominator):
            if abs(n) > 1:
                primes.update(factorize(n))
    return [INFINITY] + sorted(primes)


@dataclass(frozen=True)
class QuaternionQ:
    """The quaternion algebra (a, b) over Q."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a == 0 or self.b == 0:
            raise InputError("quaternion algebra parameters must be nonzero")

    def ramified_places(self) -> list:
        return [v for v in ramification_candidates(self.a, self.b)
                if hilbert_symbol(self.a, self.b, v) == -1]


def quaternion_splits_q(alg: QuaternionQ) -> bool:
    return not alg.ramified_places()


# sums of two squares and the norm test ------------------------------------------

def sum_of_two_squares(n: int, budget: int = DEFAULT_RHO_BUDGET) -> bool:
    """Fermat: n > 0 is a sum of two squares iff primes 3 mod 4 occur evenly."""
    if n < 1:
        raise InputError("sum_of_two_squares needs a positive integer")
    return all(e % 2 == 0 for p, e in factorize(n, budget).items() if p % 4 == 3)


def _check_prime_list(primes: Sequence[int]) -> list[int]:
    primes = [int(p) for p in primes]
    if not primes:
        raise BadPrime("the prime list is empty")
    if len(set(primes)) != len(primes):
        raise BadPrime("the primes must be distinct")
    for p in primes:
        if not (is_prime(p) and p % 4 == 3):
            raise BadPrime(f"{p} is not a prime congruent to 3 mod 4")
    return primes


def local_degree_exponent(p: int, full: Sequence[int]) -> int:
    """[k : Q(zeta_p + zeta_p^-1)] for k generated by the real subfields of the full list."""
    return math.prod((q - 1) // 2 for q in full if q != p)


def norm_T(S: Sequence[int], full: Sequence[int] | None = None) -> int:
    """N_{k/Q} of T = prod_{p in S} (zeta_p - zeta_p^-1)^2, by the closed form."""
    S = _check_prime_list(S)
    full = _check_prime_list(full if full is not None else S)
    missing = set(S) - set(full)
    if missing:
        raise BadPrime(f"{sorted(missing)} not in the full prime list")
    return (-1) ** len(S) * math.prod(p ** local_degree_exponent(p, full) for p in S)


def brauer_field(primes: Sequence[int]) -> BaseField:
    """k = Q(zeta_p + zeta_p^-1 : p in primes) inside Q(zeta_P), P the product."""
    primes = _check_prime_list(primes)
    P = math.prod(primes)
    H = frozenset(j for j in units(P) if all(j % p in (1, p - 1) for p in primes))
    label = "Q(" + ", ".join(f"zeta_{p}+zeta_{p}^-1" for p in sorted(primes)) + ")"
    return BaseField(P, H, label)


def T_element(S: Sequence[int]) -> CycloNum:
    out = CycloNum.rational(1)
    for p in S:
        z = CycloNum.zeta(p)
        out = out * (z - z.inverse()) ** 2
    return out


def norm_T_direct(S: Sequence[int], full: Sequence[int] | None = None) -> Fraction:
    """The same norm as a product of Galois conjugates in the cyclotomic field."""
    S = _check_prime_list(S)
    full = _check_prime_list(full if full is not None else S)
    return field_norm(T_element(S), brauer_field(full))


@dataclass(frozen=True)
class SubsetCheck:
    subset: tuple[int, ...]
    N: int
    factorization: dict[int, int]
    verdict: str
    ok: bool

    def to_json(self) -> dict:
        return {
            "subset": list(self.subset),
            "N": str(self.N),
            "factorization": {str(p): e for p, e in self.factorization.items()},
            "verdict": self.verdict,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class IndependenceCertificate:
    primes: tuple[int, ...]
    passed: bool
    rows: tuple[SubsetCheck, ...]

    def row(self, subset: Sequence[int]) -> SubsetCheck:
        key = tuple(sorted(subset))
        return next(r for r in self.rows if r.subset == key)

    def to_json(self) -> dict:
        return {"primes": list(self.primes), "independent": self.passed,
                "subsets": [r.to_json() for r in self.rows]}

    def to_text(self) -> str:
        lines = [f"primes {list(self.primes)}: {'independent' if self.passed else 'NOT certified'}"]
        for r in self.rows:
            fac = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in r.factorization.items())
            lines.append(f"  {list(r.subset)}  N = {r.N} = {'-' if r.N < 0 else ''}{fac}  {r.verdict}")
        return "\n".join(lines)


def norm_independence_test(primes: Sequence[int],
                           budget: int = DEFAULT_RHO_BUDGET) -> IndependenceCertificate:
    """Check every nonempty subset: N_{k/Q}(T_S) must not be a sum of two squares."""
    primes = sorted(_check_prime_list(primes))
    rows = []
    for size in range(1, len(primes) + 1):
        for S in itertools.combinations(primes, size):
            N = norm_T(S, primes)
            fac = factorize(N, budget)
            if N < 0:
                verdict, ok = "negative, not a norm from Q(i)", True
            elif sum_of_two_squares(N, budget):
                verdict, ok = "sum of two squares, test inconclusive", False
            else:
                verdict, ok = "not a sum of two squares", True
            rows.append(SubsetCheck(S, N, fac, verdict, ok))
    return IndependenceCertificate(tuple(primes), all(r.ok for r in rows), tuple(rows))


# Schur indices -------------------------------------------------------------------

class SchurStrategy(str, enum.Enum):
    CYCLOTOMIC_BASE = "CyclotomicBase"
    P_GROUP_RULE = "PGroupRule"
    QUATERNION_FAMILY = "QuaternionFamily"
    FS_REAL_TEST = "FSRealTest"
    PERMUTATION_MULTIPLICITY = "PermutationMultiplicity"
    USER_SUPPLIED = "UserSupplied"


@dataclass(frozen=True)
class SchurIndexResult:
    value: int
    strategy: SchurStrategy
    certificate: str
    family: tuple[str, int] | None = None  # (kind, parameter) for QuaternionFamily results

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("Schur index must be positive")

    def to_json(self) -> dict:
        return {"value": self.value, "strategy": self.strategy.value, "certificate": self.certificate}


@dataclass
class _Evidence:
    degree: int
    fs: int
    kchi: BaseField
    lower: int = 1
    upper: int = 0
    notes: list[str] = field(default_factory=list)


def contains_full_cyclotomic(k: BaseField, e: int) -> bool:
    return k.contains_field(BaseField.cyclotomic(e))


def local_degree_at_2(K: BaseField) -> int:
    """[K_v : Q_2] for a place v over 2 (all equal, K/Q being abelian)."""
    L = K.conductor
    odd = L
    while odd % 2 == 0:
        odd //= 2
    powers_of_two = {pow(2, t, odd) % odd for t in range(max(odd, 1))} if odd > 1 else {0}
    decomposition = {j for j in units(L) if (j % odd if odd > 1 else 0) in powers_of_two}
    return len(decomposition) // len(decomposition & K.subgroup)


def permutation_characters(G: FiniteGroup) -> list[tuple[str, list[Fraction]]]:
    """Permutation characters on the natural points and on cosets of cyclic subgroups."""
    out = []
    natural = [Fraction(sum(1 for i, x in enumerate(G.class_rep(c)) if i == x))
               for c in range(G.num_classes)]
    out.append(("natural action", natural))
    for c in range(G.num_classes):
        g = G.class_rep(c)
        o = G.class_orders[c]
        counts = [0] * G.num_classes
        for t in range(o):
            counts[G.class_of[G.index[perm_pow(g, t)]]] += 1
        vals = [Fraction(counts[d] * G.order, G.class_sizes[d] * o) for d in range(G.num_classes)]
        out.append((f"cosets of <class {c}>", vals))
    return out


def _perm_multiplicity(vals: list[Fraction], chi: Character) -> int:
    G = chi.group
    tot = CycloNum.rational(0, G.exponent)
    for c in range(G.num_classes):
        tot = tot + chi.values[c].conj() * (vals[c] * G.class_sizes[c])
    m = tot.rational_value() / G.order
    assert m.denominator == 1 and m >= 0
    return int(m)


def _designated_family_character(chi: Character, k: BaseField):
    """(component, zeta conductor) when chi is a k-conjugate of a family character."""
    G = chi.group
    L = lcm(G.exponent, k.conductor)
    residues = {j % G.exponent for j in k.lift(L).subgroup}
    for n, comp in enumerate(G.components):
        base = family_character(G, n)
        for j in residues:
            if base.galois_conjugate(j).values == chi.values:
                return n, comp
    return None


def _quaternion_family(chi: Character, k: BaseField, ev: _Evidence) -> SchurIndexResult | None:
    hit = _designated_family_character(chi, k)
    if hit is None or not ev.kchi.is_real():
        return None
    _, comp = hit
    s = comp.param
    z = CycloNum.zeta(s)
    T = (z - z.inverse()) ** 2
    text = (f"Env is the quaternion algebra ((z{s} - z{s}^-1)^2, -1) over k(chi) = {ev.kchi}; "
            f"k(chi) is real and (z{s} - z{s}^-1)^2 < 0 at every real place, so the algebra "
            "is the Hamilton quaternions there and is not split")
    if comp.kind == "quaternion_semidirect":
        F = stabilizer_field([T])
        base_norm = field_norm(T, F)
        expo = field_degree(ev.kchi, F)
        N = base_norm ** expo
        text += (f"; norm check: N_(k(chi)/Q)(T) = ({base_norm})^{expo} = {N} < 0, "
                 "so T is not a norm from k(chi)(i)")
        if N >= 0:
            return None
    return SchurIndexResult(2, SchurStrategy.QUATERNION_FAMILY, text, (comp.kind, s))


def _evidence(chi: Character, k: BaseField) -> _Evidence:
    degree = chi.degree
    ev = _Evidence(degree, fs_indicator(chi), character_field(chi, k))
    if ev.fs == -1 and ev.kchi.is_real():
        ev.lower = 2
        ev.notes.append("fs = -1 and k(chi) is real, so the real places force 2 | m")
    g = degree
    for name, vals in permutation_characters(chi.group):
        mult = _perm_multiplicity(vals, chi)
        if mult:
            g = math.gcd(g, mult)
            if g == ev.lower:
                ev.notes.append(f"<pi, chi> = {mult} for the permutation character on {name}")
                break
    ev.upper = g
    ev.notes.append(f"m divides {g} (degree and rational permutation multiplicities)")
    return ev


def schur_index(chi: Character, k: BaseField, hint: int | None = None) -> SchurIndexResult:
    """m_k(chi) for an absolutely irreducible chi, via the first strategy that applies."""
    if inner_product(chi, chi) != 1:
        raise NotIrreducible("Schur index needs an absolutely irreducible character")
    G = chi.group
    degree = chi.degree
    if hint is not None:
        hint = int(hint)
        if hint < 1 or degree % hint:
            raise InconsistentHint(f"hint {hint} does not divide the degree {degree}")
    result = _automatic(chi, k)
    if result is not None:
        if hint is not None and hint != result.value:
            raise InconsistentHint(f"hint {hint} contradicts {result.strategy.value} value {result.value}")
        return result
    ev = _evidence(chi, k)
    if hint is not None:
        if hint % ev.lower or ev.upper % hint:
            raise InconsistentHint(f"hint {hint} is outside the certified range: {'; '.join(ev.notes)}")
        return SchurIndexResult(hint, SchurStrategy.USER_SUPPLIED,
                                f"user value {hint}, consistent with: " + "; ".join(ev.notes))
    raise SchurUnsupported(
        f"no strategy certifies m_k(chi) for degree {degree} on a group of order {G.order}: "
        + "; ".join(ev.notes))


def _automatic(chi: Character, k: BaseField) -> SchurIndexResult | None:
    G = chi.group
    e = G.exponent
    if contains_full_cyclotomic(k, e):
        return SchurIndexResult(1, SchurStrategy.CYCLOTOMIC_BASE,
                                f"k contains Q(zeta_{e}), so every representation is realizable over k")
    pp = G.prime_power()
    if pp is not None:
        p = pp[0]
        if p != 2:
            return SchurIndexResult(1, SchurStrategy.P_GROUP_RULE,
                                    f"|G| = {p}^{pp[1]} with p odd: Schur indices of p-groups are 1")
        fs = fs_indicator(chi)
        if fs != -1:
            return SchurIndexResult(1, SchurStrategy.P_GROUP_RULE,
                                    f"2-group with Frobenius-Schur indicator {fs}: index 1")
        K = character_field(chi, k)
        if K.is_real():
            return SchurIndexResult(2, SchurStrategy.P_GROUP_RULE,
                                    "2-group, Frobenius-Schur indicator -1 and k(chi) real: index 2 "
                                    "(implementation rule)")
        ld = local_degree_at_2(K)
        value = 1 if ld % 2 == 0 else 2
        return SchurIndexResult(value, SchurStrategy.P_GROUP_RULE,
                                f"2-group with indicator -1: the algebra is (-1,-1) over k(chi) = {K}, "
                                f"which is not real and has local degree {ld} over Q_2, so it is "
                                + ("split" if value == 1 else "ramified at the places over 2")
                                + " (implementation rule)")
    ev_fs = fs_indicator(chi)
    K = character_field(chi, k)
    ev = _Evidence(chi.degree, ev_fs, K)
    fam = _quaternion_family(chi, k, ev)
    if fam is not None:
        return fam
    if ev_fs == -1 and K.is_real() and chi.degree == 2:
        return SchurIndexResult(2, SchurStrategy.FS_REAL_TEST,
                                "indicator -1 with k(chi) real gives 2 | m, and m divides the degree 2")
    ev = _evidence(chi, k)
    if ev.upper == ev.lower:
        strategy = SchurStrategy.FS_REAL_TEST if ev.lower == 2 else SchurStrategy.PERMUTATION_MULTIPLICITY
        return SchurIndexResult(ev.lower, strategy, "; ".join(ev.notes))
    return None
