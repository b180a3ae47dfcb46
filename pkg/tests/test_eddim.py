from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edrep.characters import character_table
from edrep.cyclotomic import BaseField, CycloNum
from edrep.eddim import (CsaDescriptor, KIrredFactor, cd_p_weil, cd_p_weil_gcd, conic_product_ed, ed_dim_bounds,
                         ed_exact_if_applicable, ed_p_irreducible, ed_report, ed_upper,
                         is_p_incompressible, k_irreducible_decomposition, weil_has_point)
from edrep.errors import (BadDivisibility, BadPrime, NonConstantMultiplicity, NotBalanced, NotPPowers,
                          ValuesNotInField)
from edrep.families import brauer_family, schilling_family
from edrep.schur import SchurIndexResult, SchurStrategy

from conftest import cyclic, q8, s3

Q = BaseField.rationals()


def ppart(x: int, p: int) -> int:
    """p-primary part by trial division, written independently of the library."""
    out = 1
    while x % p == 0:
        x //= p
        out *= p
    return out


def test_decomposition_q8():
    T = character_table(q8())
    chi = next(c for c in T if c.degree == 2)
    [f] = k_irreducible_decomposition(chi, T, Q)
    assert (f.r, f.m, f.schur.value) == (1, 1, 2)
    [f] = k_irreducible_decomposition(chi + chi, T, Q)
    assert (f.r, f.m, f.multiplicity) == (1, 2, 2)


def test_decomposition_c3():
    T = character_table(cyclic(3))
    nontriv = [c for c in T if not all(v == CycloNum.rational(1) for v in c.values)]
    [f] = k_irreducible_decomposition(nontriv[0] + nontriv[1], T, Q)
    assert (f.r, f.m, f.schur.value) == (2, 1, 1)
    with pytest.raises(ValuesNotInField):
        k_irreducible_decomposition(nontriv[0], T, Q)
    with pytest.raises((ValuesNotInField, NonConstantMultiplicity)):
        k_irreducible_decomposition(nontriv[0] * 2 + nontriv[1], T, Q)


def test_ed_p_examples():
    assert ed_p_irreducible(1, 1, 2, 2) == 1
    for l in range(5):
        assert ed_p_irreducible(2 ** l, 1, 2, 2) == 2 ** l
    assert ed_p_irreducible(3, 4, 4, 2) == 0
    with pytest.raises(BadDivisibility):
        ed_p_irreducible(1, 3, 4, 2)
    with pytest.raises(BadPrime):
        ed_p_irreducible(1, 1, 2, 4)


def _factor(r, m, schur):
    res = SchurIndexResult(schur, SchurStrategy.USER_SUPPLIED, "test")
    return KIrredFactor((0,), r, m, m, res, 2)


def test_exact_and_upper():
    assert ed_exact_if_applicable(_factor(1, 1, 2), 2) == 1
    assert ed_exact_if_applicable(_factor(4, 1, 2), 2) == 4
    assert ed_exact_if_applicable(_factor(3, 1, 2), 2) is None
    assert ed_upper([_factor(1, 1, 2)]) == 1
    assert ed_upper([_factor(1, 1, 2), _factor(1, 1, 2)]) == 2
    assert ed_upper([_factor(1, 2, 2)]) == 0


def test_dim_bounds():
    assert ed_dim_bounds(2, 8) == (1, 16)
    assert ed_dim_bounds(1, 1) == (0, 0)


def test_cd_weil_examples():
    assert cd_p_weil(CsaDescriptor(2, 4, 2), 2) == 8
    for p, n in ((2, 3), (3, 2), (5, 1)):
        assert cd_p_weil(CsaDescriptor(1, p ** n, 1), p) == p ** n - 1
    assert cd_p_weil(CsaDescriptor(6, 6, 3), 3) == 0
    assert cd_p_weil_gcd(CsaDescriptor(1, 4, 1), 3, 2) == 3
    assert cd_p_weil_gcd(CsaDescriptor(1, 4, 1), 4, 2) == 0
    assert cd_p_weil_gcd(CsaDescriptor(2, 6, 1), 6, 2) == 0
    with pytest.raises(NotBalanced):
        cd_p_weil(CsaDescriptor(2, 8, 2, balanced=False), 2)
    with pytest.raises(BadDivisibility):
        cd_p_weil(CsaDescriptor(1, 6, 4), 2)
    with pytest.raises(BadDivisibility):
        cd_p_weil_gcd(CsaDescriptor(1, 4, 1), 5, 2)


def test_incompressible():
    assert is_p_incompressible(2, 8, 2, True, 2)
    assert is_p_incompressible(1, 27, 3, True, 3)
    with pytest.raises(NotBalanced):
        is_p_incompressible(2, 8, 2, False, 2)
    with pytest.raises(NotPPowers):
        is_p_incompressible(3, 8, 2, True, 2)


def test_conics_and_points():
    for primes, l in (([3], 1), ([3, 7], 2), ([3, 7, 11], 3)):
        assert conic_product_ed(primes)[0] == l
    assert weil_has_point([2, 2], 2)
    assert not weil_has_point([4, 2], 2)
    assert weil_has_point([1], 1)


def test_report_q8():
    T = character_table(q8())
    chi = next(c for c in T if c.degree == 2)
    rep = ed_report(T.group, Q, chi, [2], table=T)
    assert rep.exact == 1 and rep.ed_p[2] == [1] and rep.upper == 1
    assert rep.exact <= rep.dim_bounds[0]
    assert "PGroupRule" in rep.to_text()
    assert rep.to_json()["exact"] == 1


def test_report_s3():
    T = character_table(s3())
    chi = next(c for c in T if c.degree == 2)
    rep = ed_report(T.group, Q, chi, [2, 3], table=T)
    assert rep.exact == 0


@pytest.mark.parametrize("l", [0, 1, 2])
def test_report_schilling(l):
    fam = schilling_family(l)
    rep = ed_report(fam.group, fam.field, fam.character, [2], table=fam.table)
    [f] = rep.factors
    assert f.r == 2 ** l
    assert rep.exact == 2 ** l


def test_report_brauer_pair():
    fam = brauer_family([3, 7])
    rep = ed_report(fam.group, fam.field, fam.character, [2], table=fam.table)
    assert rep.exact == 2
    assert rep.independence is not None and rep.independence.passed


def test_report_with_hint():
    T = character_table(q8())
    i = next(j for j, c in enumerate(T) if c.degree == 2)
    rep = ed_report(T.group, Q, T[i], [2], table=T, schur_hints={i: 2})
    assert rep.exact == 1 and rep.factors[0].schur.value == 2


primes = st.sampled_from([2, 3, 5, 7])


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 64), st.integers(1, 64), st.integers(1, 64), primes)
def test_cd_formula_matches_oracle(center, deg, m, p):
    if m > deg or deg % m:
        with pytest.raises(BadDivisibility):
            cd_p_weil(CsaDescriptor(center, deg, m), p)
        return
    value = cd_p_weil(CsaDescriptor(center, deg, m), p)
    assert value == ppart(center, p) * ppart(m, p) * (ppart(deg, p) - ppart(m, p))
    assert 0 <= value <= center * m * (deg - m)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 16), st.integers(0, 4), st.integers(0, 4), primes)
def test_ed_p_bounded_by_dimension(r, a, b, p):
    schur = 2 ** (a + b)
    m = 2 ** a
    v = ed_p_irreducible(r, m, schur, p)
    assert 0 <= v <= r * m * (schur - m)
    if p == 2 and r & (r - 1) == 0:
        assert v == r * m * (schur - m)
