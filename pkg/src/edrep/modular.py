"""Rank varieties of (Z/p)^2-representations over F_p(a_1, ..., a_t).

Matrices have entries in the rational function field F_p(a_1..a_t); the
polynomial kernel (gcd, factorization, exact division) is python-flint's
``nmod_mpoly``.  Only prime fields F_p are supported as base fields.
"""

from __future__ import annotations

import ast
import math
import random
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import flint
from flint.utils.flint_exceptions import DomainError

from .arith import is_prime
from .errors import (DegenerateEvaluation, DuplicatePoint, InputError, InvalidRep, IrrationalRoots,
                     UnsupportedPrime)

PENCIL_VAR = "_t"


def poly_context(p: int, variables: Sequence[str]):
    if not is_prime(p):
        raise InvalidRep(f"{p} is not prime (only prime fields F_p are supported)")
    return flint.nmod_mpoly_ctx.get(tuple(variables), modulus=p)


class RatFunc:
    """Reduced fraction num/den of polynomials over F_p, den monic in flint's term order."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        ctx = num.context()
        if den is None:
            den = ctx.constant(1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = ctx.constant(1)
        else:
            g = num.gcd(den)
            if not g.is_one():
                num, den = num / g, den / g
        lc = int(den.leading_coefficient())
        if lc != 1:
            inv = pow(lc, -1, ctx.modulus())
            num, den = num * inv, den * inv
        self.num, self.den = num, den

    @property
    def ctx(self):
        return self.num.context()

    @classmethod
    def const(cls, ctx, c: int) -> RatFunc:
        return cls(ctx.constant(c % ctx.modulus()))

    def _wrap(self, other) -> RatFunc:
        return other if isinstance(other, RatFunc) else RatFunc.const(self.ctx, int(other))

    def __add__(self, other):
        o = self._wrap(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        o = self._wrap(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._wrap(other).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, int):
                other = RatFunc.const(self.ctx, other)
            else:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


# parsing -----------------------------------------------------------------------

def parse_ratfunc(text: str, ctx) -> RatFunc:
    """Parse integers, variables, + - * / ^ and parentheses into F_p(vars)."""
    names = set(ctx.names())
    try:
        tree = ast.parse(str(text).replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise InvalidRep(f"cannot parse {text!r}") from exc

    def ev(node) -> RatFunc:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return RatFunc.const(ctx, node.value)
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise InvalidRep(f"unknown variable {node.id!r} in {text!r}")
            return RatFunc(ctx.gen(ctx.variable_to_index(node.id)))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                expo = node.right
                sign = 1
                if isinstance(expo, ast.UnaryOp) and isinstance(expo.op, ast.USub):
                    sign, expo = -1, expo.operand
                if not (isinstance(expo, ast.Constant) and type(expo.value) is int):
                    raise InvalidRep(f"exponents must be integer literals in {text!r}")
                return ev(node.left) ** (sign * expo.value)
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if b.is_zero():
                    raise InvalidRep(f"division by zero in {text!r}")
                return a / b
        raise InvalidRep(f"unsupported syntax in {text!r}")

    return ev(tree)


# representations ----------------------------------------------------------------

Matrix = tuple  # rows of RatFunc


def _mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, m, inner = len(A), len(B[0]), len(B)
    return tuple(tuple(reduce(lambda s, t: s + A[i][t] * B[t][j], range(inner), A[i][0] * 0)
                       for j in range(m)) for i in range(n))


def _identity(ctx, n: int) -> Matrix:
    return tuple(tuple(RatFunc.const(ctx, int(i == j)) for j in range(n)) for i in range(n))


def _sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def _is_zero(A: Matrix) -> bool:
    return all(x.is_zero() for row in A for x in row)


@dataclass(frozen=True)
class ModularRep:
    """Images M1, M2 of the generators of E = (Z/p)^2 over F_p(variables)."""

    p: int
    variables: tuple[str, ...]
    M1: Matrix
    M2: Matrix

    def __post_init__(self):
        n = len(self.M1)
        for M in (self.M1, self.M2):
            if len(M) != n or any(len(row) != n for row in M):
                raise InvalidRep("M1 and M2 must be square of the same size")
        if n == 0:
            raise InvalidRep("empty representation")
        if _mat_mul(self.M1, self.M2) != _mat_mul(self.M2, self.M1):
            raise InvalidRep("M1 and M2 do not commute")
        I = _identity(self.ctx, n)
        for name, M in (("M1", self.M1), ("M2", self.M2)):
            N = _sub(M, I)
            P = N
            for _ in range(self.p - 1):
                P = _mat_mul(P, N)
            if not _is_zero(P):
                raise InvalidRep(f"({name} - I)^{self.p} is not zero")

    @property
    def n(self) -> int:
        return len(self.M1)

    @property
    def ctx(self):
        return poly_context(self.p, self.variables)

    def direct_sum(self, other: ModularRep) -> ModularRep:
        if (self.p, self.variables) != (other.p, other.variables):
            raise InvalidRep("direct sum needs the same prime and variables")
        zero = RatFunc.const(self.ctx, 0)

        def block(A, B):
            n, m = len(A), len(B)
            return tuple([tuple(A[i]) + (zero,) * m for i in range(n)]
                         + [(zero,) * n + tuple(B[i]) for i in range(m)])
        return ModularRep(self.p, self.variables, block(self.M1, other.M1), block(self.M2, other.M2))

    def conjugate(self, P: Matrix, P_inv: Matrix) -> ModularRep:
        if _mat_mul(P, P_inv) != _identity(self.ctx, self.n):
            raise InvalidRep("P_inv is not the inverse of P")
        return ModularRep(self.p, self.variables, _mat_mul(_mat_mul(P, self.M1), P_inv),
                          _mat_mul(_mat_mul(P, self.M2), P_inv))

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.p, "variables": list(self.variables),
                "M1": [[str(x) for x in row] for row in self.M1],
                "M2": [[str(x) for x in row] for row in self.M2]}

    @classmethod
    def from_json(cls, data: dict) -> ModularRep:
        try:
            p = int(data["p"])
            q = int(data.get("q", p))
            variables = tuple(data.get("variables", ()))
            rows1, rows2 = data["M1"], data["M2"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidRep(f"malformed representation: {exc}") from exc
        if q != p:
            raise InvalidRep(f"only prime fields are supported (q = {q}, p = {p})")
        ctx = poly_context(p, variables)
        M1 = tuple(tuple(parse_ratfunc(x, ctx) for x in row) for row in rows1)
        M2 = tuple(tuple(parse_ratfunc(x, ctx) for x in row) for row in rows2)
        return cls(p, variables, M1, M2)


# points of P^1 ------------------------------------------------------------------

Point = tuple  # (alpha, beta) of RatFunc


def normalize_point(pt: Sequence[RatFunc]) -> Point:
    a, b = pt
    if a.is_zero() and b.is_zero():
        raise InputError("(0:0) is not a projective point")
    if a.is_zero():
        return (a, RatFunc.const(a.ctx, 1))
    return (RatFunc.const(a.ctx, 1), b / a)


def point_key(pt: Point) -> tuple[str, str]:
    return (str(pt[0]), str(pt[1]))


@dataclass(frozen=True)
class PointSet1:
    points: tuple[Point, ...]
    whole_line: bool = False

    def __post_init__(self):
        pts = tuple(sorted((normalize_point(x) for x in self.points), key=point_key))
        keys = [point_key(x) for x in pts]
        if len(set(keys)) != len(keys):
            raise DuplicatePoint("duplicate point after normalization")
        if self.whole_line and pts:
            raise InputError("whole_line excludes an explicit point list")
        object.__setattr__(self, "points", pts)

    def keys(self) -> set[tuple[str, str]]:
        return {point_key(x) for x in self.points}

    def __eq__(self, other):
        if not isinstance(other, PointSet1):
            return NotImplemented
        return self.whole_line == other.whole_line and self.keys() == other.keys()

    def __hash__(self):
        return hash((self.whole_line, frozenset(self.keys())))

    def to_json(self) -> dict:
        return {"whole_line": self.whole_line, "points": [list(point_key(x)) for x in self.points]}

    def __str__(self):
        if self.whole_line:
            return "P^1"
        return "{" + ", ".join(f"({a}:{b})" for a, b in self.points) + "}"


# diagonalization over F_p(a)[t] ----------------------------------------------------

def _tdeg(f) -> int:
    return -1 if f.is_zero() else f.degrees()[0]


def _tlead(f, ctx):
    d = _tdeg(f)
    return ctx.from_dict({k: v for k, v in f.to_dict().items() if k[0] == d})


def _strip_t(f, ctx):
    """Drop the t^d factor of a leading coefficient, giving an element of F_p[a]."""
    d = _tdeg(f)
    return ctx.from_dict({(0,) + k[1:]: v for k, v in f.to_dict().items() if k[0] == d})


def _t_monomial(ctx, d: int):
    return ctx.from_dict({(d,) + (0,) * (ctx.nvars() - 1): 1})


def _reduce_row(row, ctx):
    # divide out the t-free part of the row content (a unit over F_p(a)[t])
    nz = [x for x in row if not x.is_zero()]
    if not nz:
        return row
    g = reduce(lambda a, b: a.gcd(b), nz)
    if _tdeg(g) == 0 and not g.is_one():
        return [x / g for x in row]
    return row


def _multipliers(lp, f, dp: int, ctx):
    """(s, q) with s t-free and s f - q piv of lower t-degree; common factors removed."""
    c = _strip_t(f, ctx)
    g = lp.gcd(c)
    return lp / g, (c / g) * _t_monomial(ctx, _tdeg(f) - dp)


def diagonalize(A: list[list], ctx) -> list:
    """Diagonal entries of a matrix over F_p[t, a] equivalent to A over F_p(a)[t].

    Uses only row and column operations that are invertible over F_p(a)[t]:
    swaps, adding F_p[a][t]-multiples, and scaling by nonzero t-free polynomials.
    """
    M = [list(r) for r in A]
    nrows, ncols = len(M), len(M[0]) if M else 0
    diag = []
    for k in range(min(nrows, ncols)):
        while True:
            cand = [(i, j) for i in range(k, nrows) for j in range(k, ncols) if not M[i][j].is_zero()]
            if not cand:
                return diag + [ctx.constant(0)] * (min(nrows, ncols) - k)
            i, j = min(cand, key=lambda ij: (_tdeg(M[ij[0]][ij[1]]), len(M[ij[0]][ij[1]].to_dict()), ij))
            M[k], M[i] = M[i], M[k]
            for row in M:
                row[k], row[j] = row[j], row[k]
            piv = M[k][k]
            dp = _tdeg(piv)
            lp = _strip_t(piv, ctx)
            done = True
            for i in range(k + 1, nrows):
                while not M[i][k].is_zero() and _tdeg(M[i][k]) >= dp:
                    s, q = _multipliers(lp, M[i][k], dp, ctx)
                    M[i] = _reduce_row([s * a - q * b for a, b in zip(M[i], M[k])], ctx)
                if not M[i][k].is_zero():
                    done = False
            for j in range(k + 1, ncols):
                while not M[k][j].is_zero() and _tdeg(M[k][j]) >= dp:
                    s, q = _multipliers(lp, M[k][j], dp, ctx)
                    for row in M[k:]:
                        row[j] = s * row[j] - q * row[k]
                if not M[k][j].is_zero():
                    done = False
            if done:
                diag.append(M[k][k])
                break
    return diag


def _embed(f, ctx):
    """Polynomial in F_p[a] -> F_p[t, a]."""
    return ctx.from_dict({(0,) + tuple(k): v for k, v in f.to_dict().items()})


def _pencil_rows(rep: ModularRep, which: str) -> tuple[list[list], object]:
    """Rows of N1 + t N2 (or N2 alone) with denominators cleared row by row."""
    if PENCIL_VAR in rep.variables:
        raise InvalidRep(f"variable name {PENCIL_VAR} is reserved")
    big = poly_context(rep.p, (PENCIL_VAR,) + tuple(rep.variables))
    t = big.gen(0)
    I = _identity(rep.ctx, rep.n)
    N1, N2 = _sub(rep.M1, I), _sub(rep.M2, I)
    rows = []
    for i in range(rep.n):
        entries = [(N1[i][j], N2[i][j]) for j in range(rep.n)]
        dens = [x.den for pair in entries for x in pair]
        L = reduce(lambda a, b: a * b / a.gcd(b), dens)
        row = []
        for x1, x2 in entries:
            a1 = _embed(x1.num * (L / x1.den), big)
            a2 = _embed(x2.num * (L / x2.den), big)
            row.append(a2 if which == "N2" else a1 + t * a2)
        rows.append(row)
    return rows, big


def rank_threshold(p: int, n: int) -> int:
    """r = ceil((p-1) n / p): the variety is where all r x r minors vanish."""
    return -(-(p - 1) * n // p)


def rank_variety(rep: ModularRep) -> PointSet1:
    """Points (x1:x2) of P^1 where rank(x1 (M1 - I) + x2 (M2 - I)) < (p-1) n / p."""
    n, r = rep.n, rank_threshold(rep.p, rep.n)
    rows, big = _pencil_rows(rep, "pencil")
    diag = diagonalize(rows, big)
    zeros = sum(1 for d in diag if d.is_zero())
    if n - zeros < r:
        return PointSet1((), True)
    need = n - r + 1
    factors: dict[str, object] = {}
    for d in diag:
        if d.is_zero():
            continue
        _, fac = d.factor()
        for f, _ in fac:
            if _tdeg(f) > 0:
                factors.setdefault(str(f), f)
    small = rep.ctx
    points, irrational = [], []
    for key in sorted(factors):
        f = factors[key]
        count = zeros + sum(1 for d in diag if not d.is_zero() and _divides(f, d))
        if count < need:
            continue
        if _tdeg(f) > 1:
            irrational.append(key)
            continue
        c1 = _strip_t(f, big)
        c0 = f - _tlead(f, big)
        t0 = -RatFunc(_project(c0, small)) / RatFunc(_project(c1, small))
        points.append((RatFunc.const(small, 1), t0))
    if irrational:
        raise IrrationalRoots("the variety has points not defined over the coefficient field",
                              irrational)
    n2 = diagonalize(_pencil_rows(rep, "N2")[0], big)
    if sum(1 for d in n2 if not d.is_zero()) < r:
        points.append((RatFunc.const(small, 0), RatFunc.const(small, 1)))
    return PointSet1(tuple(points))


def _divides(f, d) -> bool:
    try:
        d / f
    except DomainError:
        return False
    return True


def _project(f, small):
    """Polynomial in F_p[t, a] with no t -> F_p[a]."""
    out = {}
    for k, v in f.to_dict().items():
        if k[0]:
            raise ValueError("unexpected t in coefficient")
        out[tuple(k[1:])] = v
    return small.from_dict(out) if out else small.constant(0)


# constructions (p = 2) ------------------------------------------------------------

def point_module(pt: Sequence[RatFunc], p: int = 2, variables: Sequence[str] | None = None) -> ModularRep:
    """2-dimensional representation with rank variety {pt}: M1 = I + beta N, M2 = I - alpha N."""
    if p != 2:
        raise UnsupportedPrime("point modules are only constructed for p = 2")
    alpha, beta = normalize_point(pt)
    ctx = alpha.ctx
    if variables is None:
        variables = ctx.names()
    one, zero = RatFunc.const(ctx, 1), RatFunc.const(ctx, 0)
    M1 = ((one, beta), (zero, one))
    M2 = ((one, -alpha), (zero, one))
    return ModularRep(p, tuple(variables), M1, M2)


def union_rep(points: Sequence[Sequence[RatFunc]], p: int = 2) -> ModularRep:
    if not points:
        raise InputError("at least one point is required")
    if p != 2:
        raise UnsupportedPrime("point modules are only constructed for p = 2")
    pts = [normalize_point(x) for x in points]
    keys = [point_key(x) for x in pts]
    if len(set(keys)) != len(keys):
        raise DuplicatePoint("points must be distinct after normalization")
    reps = [point_module(x, p) for x in pts]
    return reduce(lambda a, b: a.direct_sum(b), reps)


def random_conjugator(ctx, n: int, rng: random.Random, steps: int = 6) -> tuple[Matrix, Matrix]:
    """A random invertible matrix (product of elementary ones) and its inverse."""
    p = ctx.modulus()
    gens = [RatFunc(g) for g in ctx.gens()]
    P, Q = _identity(ctx, n), _identity(ctx, n)
    for _ in range(steps):
        if n == 1:
            c = rng.randrange(1, p)
            E = ((RatFunc.const(ctx, c),),)
            Einv = ((RatFunc.const(ctx, pow(c, -1, p)),),)
        else:
            i, j = rng.sample(range(n), 2)
            c = RatFunc.const(ctx, rng.randrange(p))
            for g in gens:
                c = c + g ** rng.randrange(2) * rng.randrange(p)
            E = [list(row) for row in _identity(ctx, n)]
            Einv = [list(row) for row in _identity(ctx, n)]
            E[i][j], Einv[i][j] = c, -c
            E, Einv = tuple(map(tuple, E)), tuple(map(tuple, Einv))
        P, Q = _mat_mul(E, P), _mat_mul(Q, Einv)
    return P, Q


# transcendence degree ------------------------------------------------------------------

def _affine_coordinates(ps: PointSet1) -> list[RatFunc]:
    out = []
    for a, b in ps.points:
        if not a.is_zero():
            out.append(b)
    return out


def _eval_poly(f, vals, F):
    acc = F(0)
    for monom, c in f.terms():
        term = F(int(c))
        for v, e in zip(vals, monom):
            if e:
                term = term * v ** e
        acc = acc + term
    return acc


def _rank_fq(rows, F) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        sel = next((i for i in range(rank, len(rows)) if not rows[i][col].is_zero()), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        inv = 1 / rows[rank][col]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero():
                f = rows[i][col] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def trdeg_jacobian(coords: Sequence[RatFunc], variables: Sequence[str], p: int, seed: int = 0,
                   retries: int = 16, evaluations: int = 3) -> int:
    """Rank of the Jacobian of the coordinates at random F_{p^s}-points.

    The result never exceeds the transcendence degree; it equals it for
    separably generated extensions (with high probability per evaluation).
    """
    coords = [c for c in coords if not c.is_constant()]
    if not coords or not variables:
        return 0
    rng = random.Random(seed)
    names = list(variables)
    # d(num/den) = (num' den - num den') / den^2; rank is unchanged by dropping den^2
    jac = [[c.num.derivative(v) * c.den - c.num * c.den.derivative(v) for v in names] for c in coords]
    dens = [c.den for c in coords]
    s = max(1, math.ceil(10 / math.log2(p)))
    best, good = 0, 0
    for _ in range(retries):
        F = flint.fq_default_ctx(p, s)
        vals = [F([rng.randrange(p) for _ in range(s)]) for _ in names]
        if any(_eval_poly(d, vals, F).is_zero() for d in dens):
            s += 1
            continue
        best = max(best, _rank_fq([[_eval_poly(f, vals, F) for f in row] for row in jac], F))
        good += 1
        if good >= evaluations or best == min(len(coords), len(names)):
            return best
    if good == 0:
        raise DegenerateEvaluation(f"every random point hit a denominator after {retries} tries")
    return best


def trdeg_exact(coords: Sequence[RatFunc], variables: Sequence[str], p: int) -> int:
    """Transcendence degree by Groebner elimination (valid for inseparable cases too)."""
    import sympy

    coords = [c for c in coords if not c.is_constant()]
    if not coords:
        return 0
    avars = sympy.symbols(list(variables))
    ys = sympy.symbols([f"_y{i}" for i in range(len(coords))])
    z = sympy.Symbol("_z")
    local = {str(v): v for v in avars}

    def to_sym(f):
        return sympy.sympify(str(f).replace("^", "**"), locals=local) if not f.is_zero() else sympy.Integer(0)

    gens = []
    den_prod = sympy.Integer(1)
    for y, c in zip(ys, coords):
        gens.append(sympy.expand(y * to_sym(c.den) - to_sym(c.num)))
        den_prod = den_prod * to_sym(c.den)
    gens.append(sympy.expand(z * den_prod - 1))
    order_vars = [z, *avars, *ys]
    G = sympy.groebner(gens, *order_vars, order="lex", modulus=p)
    elim = [g for g in G.exprs if not (g.free_symbols & ({z} | set(avars)))]
    leading = []
    for g in elim:
        poly = sympy.Poly(g, *ys, modulus=p)
        leading.append(poly.monoms(order="lex")[0])
    best = 0
    m = len(ys)
    for mask in range(1 << m):
        free = {i for i in range(m) if mask >> i & 1}
        if len(free) <= best:
            continue
        if all(any(e and i not in free for i, e in enumerate(mon)) for mon in leading):
            best = len(free)
    return best


def trdeg_of_points(ps: PointSet1, variables: Sequence[str], p: int, seed: int = 0,
                    exact: bool = False, retries: int = 16) -> int:
    if ps.whole_line:
        raise InputError("the whole line has no finite coordinate set")
    coords = _affine_coordinates(ps)
    if exact:
        return trdeg_exact(coords, variables, p)
    return trdeg_jacobian(coords, variables, p, seed=seed, retries=retries)


@dataclass(frozen=True)
class ModularLowerBound:
    n: int
    p: int
    dimension: int
    points: PointSet1
    trdeg: int
    certified: bool
    statement: str
    rep: ModularRep

    def to_json(self) -> dict:
        return {"n": self.n, "p": self.p, "dimension": self.dimension, "rank_variety": self.points.to_json(),
                "trdeg": self.trdeg, "certified": self.certified, "ed_lower_bound": self.trdeg,
                "statement": self.statement, "representation": self.rep.to_json()}


def ed_lower_bound_modular(n: int, p: int = 2, q: int = 2, seed: int = 0) -> ModularLowerBound:
    """Certify ed >= n for E = (Z/2)^2 via the configuration of n generic points."""
    if n < 1:
        raise InputError("n must be at least 1")
    if p != 2 or q != 2:
        raise UnsupportedPrime("the point-module construction needs p = q = 2")
    variables = tuple(f"a{i + 1}" for i in range(n))
    ctx = poly_context(p, variables)
    pts = [(RatFunc.const(ctx, 1), RatFunc(g)) for g in ctx.gens()]
    rep = union_rep(pts, p)
    V = rank_variety(rep)
    if V != PointSet1(tuple(pts)):
        raise ArithmeticError("rank variety of the union differs from the input points")
    td = trdeg_of_points(V, variables, p, seed=seed)
    certified = td == n
    statement = (f"the {2 * n}-dimensional representation has rank variety {V}, whose coordinates "
                 f"generate a field of transcendence degree {td} over F_{p}; hence ed >= {td}, "
                 "and since n is arbitrary, representations of (Z/2)^2 over F_2(a_1, a_2, ...) "
                 "have unbounded essential dimension")
    return ModularLowerBound(n, p, 2 * n, V, td, certified, statement, rep)
