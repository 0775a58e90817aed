"""Exact reference computations for the test suite.

Coefficients are Gaussian rationals held as pairs of ``Fraction``.  The
truncated dual dimension is the nullity of the exact Macaulay matrix,
computed by fraction-free elimination on sparse integer rows.  A complex
matrix ``A + iB`` is handled through its real form ``[[A, -B], [B, A]]``,
whose rank is twice the complex rank.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import exponents_of_degree, monomials_up_to


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, v):
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, complex):
            return cls(Fraction(v.real), Fraction(v.imag))
        return cls(Fraction(v), Fraction(0))

    def __add__(self, o):
        o = GaussianRational.of(o)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-GaussianRational.of(o))

    def __mul__(self, o):
        o = GaussianRational.of(o)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __pow__(self, k):
        out = GaussianRational(Fraction(1))
        for _ in range(k):
            out = out * self
        return out


class ExactPolynomialSystem:
    """Polynomials with exact Gaussian-rational coefficients."""

    def __init__(self, gens, nvars):
        self.nvars = nvars
        self.gens = []
        for g in gens:
            clean = {}
            for e, c in dict(g).items():
                c = GaussianRational.of(c)
                if c:
                    clean[tuple(e)] = c
            self.gens.append(clean)

    @classmethod
    def from_system(cls, F):
        """Exact mirror of a floating point system (each double is taken at face value)."""
        return cls([dict(f.items()) for f in F], F[0].nvars if isinstance(F, list) else F.nvars)

    def translated(self, point):
        """The system ``f(x + y)`` for an exact point ``y``."""
        y = [GaussianRational.of(v) for v in point]
        out = []
        for g in self.gens:
            acc = {}
            for e, c in g.items():
                partial = {(): c}
                for k, yi in zip(e, y):
                    nxt = {}
                    for head, v in partial.items():
                        for j in range(k + 1):
                            w = yi ** (k - j) * math.comb(k, j)
                            if w:
                                nxt[head + (j,)] = v * w
                    partial = nxt
                for ex, v in partial.items():
                    acc[ex] = acc.get(ex, GaussianRational(Fraction(0))) + v
            out.append(acc)
        return ExactPolynomialSystem(out, self.nvars)

    def vanishes_at_origin(self):
        zero = (0,) * self.nvars
        return all(not g.get(zero) for g in self.gens)


def _integer_row(row):
    """Scale a sparse Fraction row to coprime integers."""
    den = 1
    for v in row.values():
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = {j: int(v * den) for j, v in row.items()}
    g = 0
    for v in ints.values():
        g = math.gcd(g, v)
    return {j: v // g for j, v in ints.items()} if g > 1 else ints


def exact_rank(rows):
    """Rank of a matrix given as sparse rows ``{column: Fraction}``.

    Fraction-free elimination: rows are kept integral and divided by their
    content after each update, so entries stay small and sparsity survives.
    """
    pending = [_integer_row(r) for r in rows if r]
    rank = 0
    while pending:
        col = min(min(r) for r in pending)
        hits = [r for r in pending if col in r]
        rest = [r for r in pending if col not in r]
        pivot = min(hits, key=len)
        rank += 1
        p = pivot[col]
        for r in hits:
            if r is pivot:
                continue
            q = r[col]
            new = {}
            for j, v in r.items():
                new[j] = v * p
            for j, v in pivot.items():
                new[j] = new.get(j, 0) - v * q
            new = {j: v for j, v in new.items() if v}
            if new:
                g = 0
                for v in new.values():
                    g = math.gcd(g, v)
                rest.append({j: v // g for j, v in new.items()})
        pending = rest
    return rank


def exact_macaulay_rows(F, d):
    """Sparse rows of the degree-``d`` Macaulay matrix and the column count."""
    n = F.nvars
    mons = monomials_up_to(n, d)
    index = {m: i for i, m in enumerate(mons)}
    rows = []
    for g in F.gens:
        for a in mons:
            row = {}
            for e, c in g.items():
                j = index.get(tuple(x + y for x, y in zip(a, e)))
                if j is not None:
                    row[j] = c
            if row:
                rows.append(row)
    return rows, len(mons)


def exact_dual_dimension(F, d):
    """Exact dimension of the truncated dual in degree ``d`` at the origin."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    if not F.vanishes_at_origin():
        raise ValueError("the exact system must vanish at the origin; translate it first")
    rows, ncols = exact_macaulay_rows(F, d)
    if all(not c.im for r in rows for c in r.values()):
        return ncols - exact_rank([{j: c.re for j, c in r.items()} for r in rows])
    real_rows = []
    for r in rows:
        real_rows.append(
            {**{j: c.re for j, c in r.items() if c.re}, **{ncols + j: -c.im for j, c in r.items() if c.im}}
        )
        real_rows.append(
            {**{j: c.im for j, c in r.items() if c.im}, **{ncols + j: c.re for j, c in r.items() if c.re}}
        )
    return ncols - exact_rank(real_rows) // 2


def exact_standard_monomial_count(M, d):
    """Number of degree-``d`` monomials outside the monomial ideal ``M`` (by enumeration)."""
    return sum(
        1
        for a in exponents_of_degree(M.nvars, d)
        if not any(all(g[i] <= a[i] for i in range(M.nvars)) for g in M.gens)
    )
