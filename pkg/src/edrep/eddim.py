"""Essential dimension of characters: k-irreducible factors, ed_p formulas,
canonical p-dimension of Weil transfers and the assembled report."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from .arith import factorize, is_power_of, is_prime, p_part
from .characters import (Character, CharacterTable, character_field, character_table, decompose,
                         galois_orbits, is_k_valued)
from .cyclotomic import BaseField, field_degree
from .errors import (BadDivisibility, BadPrime, IndependenceFails, InputError, NonConstantMultiplicity,
                     NotBalanced, NotPPowers, ValuesNotInField)
from .groups import FiniteGroup
from .schur import (IndependenceCertificate, SchurIndexResult, SchurStrategy, brauer_field,
                    norm_independence_test, schur_index)


def _check_prime(p: int) -> int:
    if not is_prime(int(p)):
        raise BadPrime(f"{p} is not prime")
    return int(p)


@dataclass(frozen=True)
class KIrredFactor:
    """m * (sum of one Galois orbit of absolutely irreducible characters)."""

    orbit: tuple[int, ...]
    r: int
    m: int
    multiplicity: int
    schur: SchurIndexResult
    degree: int

    def __post_init__(self):
        if self.schur.value % self.m:
            raise BadDivisibility(f"m = {self.m} does not divide the Schur index {self.schur.value}")

    @property
    def dim_x(self) -> int:
        """dim of the Weil transfer of SB(D, m): r m (schur - m)."""
        return self.r * self.m * (self.schur.value - self.m)

    def to_json(self) -> dict:
        return {"orbit": list(self.orbit), "r": self.r, "m": self.m,
                "multiplicity": self.multiplicity, "degree": self.degree,
                "schur": self.schur.to_json()}


@dataclass(frozen=True)
class CsaDescriptor:
    """Weil transfer data: [Z:k], deg D of the division algebra, m, balanced flag."""

    center_degree: int
    algebra_degree: int
    m: int
    balanced: bool = True

    def __post_init__(self):
        if min(self.center_degree, self.algebra_degree, self.m) < 1:
            raise InputError("descriptor entries must be positive")
        if self.m > self.algebra_degree:
            raise BadDivisibility("m exceeds the algebra degree")

    @property
    def dimension(self) -> int:
        return self.center_degree * self.m * (self.algebra_degree - self.m)


def k_irreducible_decomposition(chi: Character, table: CharacterTable, k: BaseField,
                                schur_hints: Mapping[int, int] | None = None) -> list[KIrredFactor]:
    """Split a k-valued character into k-irreducible pieces with reduced multiplicities.

    ``schur_hints`` maps an irreducible index (any member of the orbit) to a
    user supplied Schur index.
    """
    if not is_k_valued(chi, k):
        raise ValuesNotInField("character values are not in the base field")
    hints = dict(schur_hints or {})
    mults = decompose(chi, table)
    out = []
    for orbit in galois_orbits(table, k):
        ms = {mults[i] for i in orbit}
        if ms == {0}:
            continue
        if len(ms) != 1:
            raise NonConstantMultiplicity(f"multiplicities {sorted(ms)} differ on orbit {list(orbit)}")
        mult = ms.pop()
        rep = table[orbit[0]]
        r = field_degree(character_field(rep, k), k)
        if r != len(orbit):
            raise ArithmeticError(f"orbit size {len(orbit)} differs from [k(chi):k] = {r}")
        hint = next((hints[i] for i in orbit if i in hints), None)
        s = schur_index(rep, k, hint)
        out.append(KIrredFactor(tuple(orbit), r, math.gcd(mult, s.value), mult, s, rep.degree))
    return out


def ed_p_irreducible(r: int, m: int, schur: int, p: int) -> int:
    """r' m' (schur' - m'), primes denoting p-primary parts."""
    p = _check_prime(p)
    if min(r, m, schur) < 1:
        raise InputError("r, m and the Schur index must be positive")
    if schur % m:
        raise BadDivisibility(f"m = {m} does not divide the Schur index {schur}")
    return p_part(r, p) * p_part(m, p) * (p_part(schur, p) - p_part(m, p))


def ed_exact_if_applicable(f: KIrredFactor, p: int) -> int | None:
    p = _check_prime(p)
    if is_power_of(f.r, p) and is_power_of(f.schur.value, p):
        return f.dim_x
    return None


def ed_upper(factors: Sequence[KIrredFactor]) -> int:
    return sum(f.dim_x for f in factors)


def ed_dim_bounds(n: int, g: int) -> tuple[int, int]:
    if n < 1 or g < 1:
        raise InputError("degree and group order must be positive")
    return n * n // 4, g * g // 4


def cd_p_weil(d: CsaDescriptor, p: int) -> int:
    """cd_p of the Weil transfer of SB(D, m): [Z:k]' m' (deg D' - m')."""
    p = _check_prime(p)
    if not d.balanced:
        raise NotBalanced("the closed form is only certified for balanced algebras")
    if d.algebra_degree % d.m:
        raise BadDivisibility(f"m = {d.m} does not divide deg D = {d.algebra_degree}")
    return (p_part(d.center_degree, p) * p_part(d.m, p)
            * (p_part(d.algebra_degree, p) - p_part(d.m, p)))


def cd_p_weil_gcd(d: CsaDescriptor, j: int, p: int) -> int:
    """cd_p_weil after replacing j by gcd(j, deg D)."""
    if not 1 <= j <= d.algebra_degree:
        raise BadDivisibility(f"j = {j} must lie between 1 and deg D = {d.algebra_degree}")
    return cd_p_weil(replace(d, m=math.gcd(j, d.algebra_degree)), p)


def is_p_incompressible(center_degree: int, algebra_degree: int, m: int, balanced: bool, p: int) -> bool:
    p = _check_prime(p)
    for name, x in (("center degree", center_degree), ("algebra degree", algebra_degree), ("m", m)):
        if not is_power_of(x, p):
            raise NotPPowers(f"{name} {x} is not a power of {p}")
    if m > algebra_degree:
        raise NotPPowers("m exceeds the algebra degree")
    if not balanced:
        raise NotBalanced("incompressibility is only certified for balanced algebras")
    return True


def conic_product_ed(primes: Sequence[int]) -> tuple[int, IndependenceCertificate]:
    """ed of chi_1 + ... + chi_l for the quaternion family: l once independence is certified."""
    cert = norm_independence_test(primes)
    if not cert.passed:
        raise IndependenceFails("the norm test does not certify independence")
    return len(cert.primes), cert


def weil_has_point(indices: Sequence[int], m: int) -> bool:
    if not indices:
        raise InputError("at least one index is required")
    return all(m % i == 0 for i in indices)


@dataclass
class EdReport:
    group_order: int
    degree: int
    field: str
    primes: list[int]
    factors: list[KIrredFactor]
    ed_p: dict[int, list[int]]
    exact_per_factor: dict[int, list[int | None]]
    lower: dict[int, int]
    upper: int
    exact: int | None
    exact_reason: str
    dim_bounds: tuple[int, int]
    notes: list[str] = field(default_factory=list)
    independence: IndependenceCertificate | None = None

    def to_json(self) -> dict:
        out = {
            "group_order": self.group_order,
            "degree": self.degree,
            "field": self.field,
            "primes": self.primes,
            "factors": [f.to_json() for f in self.factors],
            "ed_p": {str(p): v for p, v in self.ed_p.items()},
            "exact_per_factor": {str(p): v for p, v in self.exact_per_factor.items()},
            "lower": {str(p): v for p, v in self.lower.items()},
            "upper": self.upper,
            "exact": self.exact,
            "exact_reason": self.exact_reason,
            "degree_bound": self.dim_bounds[0],
            "order_bound": self.dim_bounds[1],
            "notes": self.notes,
        }
        if self.independence is not None:
            out["independence"] = self.independence.to_json()
        return out

    def to_text(self) -> str:
        lines = [f"character of degree {self.degree} on a group of order {self.group_order} over {self.field}"]
        for n, f in enumerate(self.factors):
            lines.append(f"  factor {n + 1}: orbit {list(f.orbit)}  r={f.r}  m={f.m} "
                         f"(multiplicity {f.multiplicity})  schur={f.schur.value} [{f.schur.strategy.value}]")
            lines.append(f"    {f.schur.certificate}")
        for p in self.primes:
            lines.append(f"  ed_{p}: per factor {self.ed_p[p]}, lower bound {self.lower[p]}")
        lines.append(f"  upper bound: {self.upper}")
        lines.append(f"  ed: {self.exact if self.exact is not None else 'not certified'}"
                     + (f" ({self.exact_reason})" if self.exact_reason else ""))
        lines.append(f"  floor(n^2/4) = {self.dim_bounds[0]}, floor(|G|^2/4) = {self.dim_bounds[1]}")
        lines.extend(f"  note: {s}" for s in self.notes)
        return "\n".join(lines)


def _conic_family_primes(G: FiniteGroup, factors: Sequence[KIrredFactor]) -> list[int] | None:
    """Primes of the quaternion-family components when every factor is one of their conics."""
    primes = []
    for f in factors:
        if (f.r, f.m, f.schur.value) != (1, 1, 2) or f.schur.strategy != SchurStrategy.QUATERNION_FAMILY:
            return None
        if f.schur.family is None or f.schur.family[0] != "quaternion_semidirect":
            return None
        primes.append(f.schur.family[1])
    if len(set(primes)) != len(primes):
        return None
    return primes


def ed_report(G: FiniteGroup, k: BaseField, chi: Character, primes: Sequence[int],
              table: CharacterTable | None = None,
              schur_hints: Mapping[int, int] | None = None) -> EdReport:
    primes = sorted({_check_prime(p) for p in primes})
    if table is None:
        table = character_table(G)
    factors = k_irreducible_decomposition(chi, table, k, schur_hints)
    ed_p = {p: [ed_p_irreducible(f.r, f.m, f.schur.value, p) for f in factors] for p in primes}
    exact_pf = {p: [ed_exact_if_applicable(f, p) for f in factors] for p in primes}
    lower = {p: max(v, default=0) for p, v in ed_p.items()}
    upper = ed_upper(factors)
    notes = ["lower bound per prime is the maximum of the factors' ed_p (implementation rule: "
             "specialize the detection functor to one factor)",
             "upper bound is the sum of r m (schur - m) over factors (subadditivity)"]
    exact, reason, cert = None, "", None
    if upper == 0:
        exact, reason = 0, "upper bound is 0"
    elif len(factors) == 1:
        f = factors[0]
        s = f.schur.value
        sp = next(iter(factorize(s)))
        if is_power_of(s, sp) and is_power_of(f.r, sp):
            exact = f.dim_x
            reason = f"single factor with r and the Schur index powers of {sp}: ed = ed_{sp} = r m (schur - m)"
    if exact is None:
        fam = _conic_family_primes(G, factors)
        if fam is not None:
            full = sorted(c.param for c in G.components if c.kind == "quaternion_semidirect")
            if set(fam) <= set(full) and k.same_field(brauer_field(full)):
                cert = norm_independence_test(full)
                if cert.passed:
                    exact = len(fam)
                    reason = (f"product of {len(fam)} conics with independent Brauer classes "
                              "(norm and two-squares certificate), so cd = number of conics")
                else:
                    notes.append("the norm test did not certify independence of the conics")
    report = EdReport(G.order, chi.degree, str(k), primes, factors, ed_p, exact_pf, lower, upper,
                      exact, reason, ed_dim_bounds(chi.degree, G.order), notes, cert)
    return report
