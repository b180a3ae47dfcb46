"""Integer helpers: primality, factorization with an effort budget, p-parts."""

from __future__ import annotations

import math
import random
from functools import lru_cache

from .errors import FactorizationTimeout

TRIAL_DIVISION_LIMIT = 10**6
DEFAULT_RHO_BUDGET = 2_000_000

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24 with the fixed bases."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random, budget: list[int]) -> int:
    # Brent's variant; budget[0] is a shared iteration counter
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                budget[0] -= min(m, r - k)
                if budget[0] < 0:
                    raise FactorizationTimeout(f"Pollard rho budget exhausted on {n}")
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, budget: int = DEFAULT_RHO_BUDGET, seed: int = 0) -> dict[int, int]:
    """Prime factorization of a nonzero integer (sign dropped).

    Trial division up to ``TRIAL_DIVISION_LIMIT`` and then Pollard rho with a
    fixed seed; raises FactorizationTimeout once ``budget`` rho iterations are
    spent.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n and p <= TRIAL_DIVISION_LIMIT:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n == 1:
        return out
    rng = random.Random(seed)
    left = [budget]
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _pollard_rho(m, rng, left)
        stack += [d, m // d]
    return dict(sorted(out.items()))


def p_part(x: int, p: int) -> int:
    """Highest power of p dividing the positive integer x."""
    if x < 1:
        raise ValueError("p_part needs a positive integer")
    q = 1
    while x % p == 0:
        x //= p
        q *= p
    return q


def is_power_of(x: int, p: int) -> bool:
    return x >= 1 and p_part(x, p) == x


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    f = factorize(n) if n > 1 else {}
    if any(v > 1 for v in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def units(n: int) -> list[int]:
    """Residues in (Z/nZ)^*; for n = 1 this is [0] (the trivial group)."""
    if n == 1:
        return [0]
    return [j for j in range(1, n) if math.gcd(j, n) == 1]


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out
