"""Local Hilbert functions, initial ideals and Hilbert polynomials.

The initial ideal of ``I`` in the local ring is read off the dual space: with
a graded order on monomial functionals, ``x^a`` lies in the initial ideal
exactly when ``d^a`` is not an initial term of the dual.  Everything after
the g-corners is exact integer / rational arithmetic.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .dual import as_system, iter_truncated_duals, zero_dimensional_dual, Strategy
from .errors import TooManyGeneratorsError
from .numlinalg import DEFAULT_TOL
from .poly import DEFAULT_ORDER, exponents_of_degree

log = logging.getLogger(__name__)

MAX_LATTICE_GENERATORS = 20
GCORNER_MAX_DEGREE = 12
STOPPING_RULE = "hf-match and D >= gmax + emax + 1 (heuristic)"


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens):
    """Drop every exponent divisible by another one (duplicates collapse)."""
    gens = sorted(set(tuple(g) for g in gens), key=sum)
    out = []
    for g in gens:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators (exponent tuples)."""

    gens: frozenset
    nvars: int

    def __post_init__(self):
        gens = frozenset(tuple(int(v) for v in g) for g in self.gens)
        for g in gens:
            if len(g) != self.nvars or min(g, default=0) < 0:
                raise ValueError(f"bad generator {g} for {self.nvars} variables")
        for g in gens:
            for h in gens:
                if g != h and divides(g, h):
                    raise ValueError(f"generators are not minimal: {g} divides {h}")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_generators(cls, gens, nvars):
        return cls(frozenset(minimalize(gens)), nvars)

    def contains(self, a):
        return any(divides(g, a) for g in self.gens)

    __contains__ = contains

    def sorted_gens(self):
        return sorted(self.gens, reverse=True)

    def __len__(self):
        return len(self.gens)


# -- exact polynomials in one variable d, coefficients ascending ------------

def _pmul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _padd(p, q, w=1):
    out = list(p) + [Fraction(0)] * max(0, len(q) - len(p))
    for i, b in enumerate(q):
        out[i] += w * b
    return out


def _ptrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def peval(p, d):
    return sum((c * d ** i for i, c in enumerate(p)), Fraction(0))


def _binomial_poly(shift, n):
    """``C(d - shift + n - 1, n - 1)`` as a polynomial in ``d``."""
    p = [Fraction(1)]
    for i in range(1, n):
        p = _pmul(p, [Fraction(i - shift), Fraction(1)])
    fact = math.factorial(n - 1)
    return [c / fact for c in p]


@dataclass(frozen=True)
class HilbertData:
    """Hilbert function values, Hilbert polynomial and regularity of a monomial ideal.

    ``hp`` lists exact coefficients in ascending powers of ``d``; the zero
    polynomial is the empty list.
    """

    hf_values: tuple
    hp: tuple
    regularity: int
    lattice_degree: int

    @property
    def hp_degree(self):
        return len(self.hp) - 1

    @property
    def leading_coefficient(self):
        return self.hp[-1] if self.hp else Fraction(0)

    def hp_at(self, d):
        return peval(self.hp, d)

    def hp_string(self, var="d"):
        if not self.hp:
            return "0"
        parts = []
        for i in range(len(self.hp) - 1, -1, -1):
            c = self.hp[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            coeff = str(c)
            if mono:
                coeff = "" if c == 1 else ("-" if c == -1 else f"{coeff}*")
            parts.append(coeff + mono)
        return " + ".join(parts).replace("+ -", "- ")


def _lcm_degree_weights(gens, nvars):
    """Signed counts ``{|lcm_S|: sum of (-1)^|S|}`` over all subsets ``S`` (empty set included)."""
    weights = {}

    def walk(start, lcm, sign):
        deg = sum(lcm)
        weights[deg] = weights.get(deg, 0) + sign
        for i in range(start, len(gens)):
            walk(i + 1, tuple(max(a, b) for a, b in zip(lcm, gens[i])), -sign)

    walk(0, (0,) * nvars, 1)
    return {k: v for k, v in weights.items() if v}


def hilbert_series_data(M, max_generators=MAX_LATTICE_GENERATORS):
    """Hilbert function, polynomial and regularity of ``R / M`` (affine, by degree).

    Uses inclusion-exclusion over the lcm lattice of the generators, which
    is exact for degrees at or beyond the largest lcm degree ``L``.
    """
    gens = sorted(M.gens)
    if len(gens) > max_generators:
        raise TooManyGeneratorsError(
            f"{len(gens)} generators exceed the cap of {max_generators}; the lcm lattice "
            "has 2^s terms. Raise max_generators if you can afford it."
        )
    n = M.nvars
    weights = _lcm_degree_weights(gens, n)
    L = sum(tuple(max(col) for col in zip(*gens))) if gens else 0

    hp = []
    for shift, w in weights.items():
        hp = _padd(hp, _binomial_poly(shift, n), w)
    hp = tuple(_ptrim(hp))

    def count(d):
        return sum(w * math.comb(d - a + n - 1, n - 1) for a, w in weights.items() if d >= a)

    hf = tuple(count(d) for d in range(L + 3))
    reg = L
    while reg > 0 and hf[reg - 1] == peval(hp, reg - 1):
        reg -= 1
    return HilbertData(hf, hp, reg, L)


def s_corners(M):
    """Maximal standard monomials: outside ``M`` while every ``x_j * x^a`` is inside."""
    n = M.nvars
    if not M.gens:
        return set()
    box = [max(g[j] for g in M.gens) for j in range(n)]
    if min(box) == 0:
        # a variable absent from every generator never pushes a monomial into M
        return set()
    out = set()
    for a in product(*(range(b) for b in box)):
        if M.contains(a):
            continue
        if all(M.contains(a[:j] + (a[j] + 1,) + a[j + 1:]) for j in range(n)):
            out.add(a)
    return out


def hilbert_function_of_dual(D, degrees):
    """Local Hilbert function ``dim D^d - dim D^(d-1)`` at each requested degree.

    ``D`` is either a :class:`DualSpace` or a dimension profile
    ``[dim D^0, dim D^1, ...]``.
    """
    degrees = list(degrees)
    if isinstance(D, (list, tuple)):
        top = len(D) - 1

        def dim(e):
            return 0 if e < 0 else D[e]
    else:
        top = D.degree_bound if D.degree_bound is not None else float("inf")
        dim = D.dimension_in_degree
    for d in degrees:
        if d < 0:
            raise ValueError(f"negative degree {d}")
        if d > top:
            raise ValueError(f"degree {d} exceeds the computed degree bound {top}")
    return [dim(d) - dim(d - 1) for d in degrees]


def standard_count(gens, n, d):
    return sum(1 for a in exponents_of_degree(n, d) if not any(divides(g, a) for g in gens))


@dataclass(frozen=True)
class GCornerResult:
    """g-corners with the status of the stopping rule.

    ``verified`` is False when the degree cap was hit before the stopping
    rule held; ``ideal`` is then only known to be correct up to ``degree``.
    """

    ideal: MonomialIdeal
    verified: bool
    degree: int
    dual_profile: tuple
    rule: str = STOPPING_RULE

    @property
    def gens(self):
        return self.ideal.sorted_gens()


def g_corners(
    F, y, tol=DEFAULT_TOL, order=DEFAULT_ORDER, strategy=Strategy.BM, max_degree=GCORNER_MAX_DEGREE
):
    """Minimal generators of the initial ideal of ``I`` localized at ``y``.

    Degree by degree, monomials of degree ``d`` that are not initial terms of
    the truncated dual are in the initial ideal; those not divisible by a
    known corner are new corners.  The search stops at degree ``D`` once the
    standard-monomial counts of the candidate ideal match the dual profile
    and ``D >= gmax + emax + 1`` (largest corner degree plus largest
    generator degree plus one).
    """
    F = as_system(F)
    n = F.nvars
    emax = F.max_degree
    corners = []
    profile = []
    D_deg = -1
    for D in iter_truncated_duals(F, y, max_degree, strategy, tol, order):
        d = D.degree_bound
        D_deg = d
        profile.append(D.dim)
        initial = set(D.initial_terms())
        for a in sorted(exponents_of_degree(n, d), key=order.key):
            if a in initial:
                continue
            if not any(divides(g, a) for g in corners):
                corners.append(a)
        hf_dual = [profile[0]] + [profile[i] - profile[i - 1] for i in range(1, d + 1)]
        matches = all(standard_count(corners, n, e) == hf_dual[e] for e in range(d + 1))
        gmax = max((sum(g) for g in corners), default=0)
        if matches and d >= gmax + emax + 1:
            log.debug("g-corner search stopped at degree %d", d)
            return GCornerResult(MonomialIdeal.from_generators(corners, n), True, d, tuple(profile))
    log.warning("g-corner stopping rule not met by degree %d; result unverified", D_deg)
    return GCornerResult(MonomialIdeal.from_generators(corners, n), False, D_deg, tuple(profile))


def local_hilbert_regularity(F, y, tol=DEFAULT_TOL, order=DEFAULT_ORDER, strategy=Strategy.BM):
    """Degree from which the local Hilbert function equals the Hilbert polynomial."""
    G = g_corners(F, y, tol, order, strategy)
    return hilbert_series_data(G.ideal).regularity


def local_dimension_and_multiplicity(
    F, y, tol=DEFAULT_TOL, order=DEFAULT_ORDER, strategy=Strategy.BM
):
    """Local dimension and multiplicity of ``I`` at ``y``.

    A Hilbert polynomial of degree ``r`` and leading coefficient ``c`` gives
    dimension ``r + 1`` and multiplicity ``c * r!``.  A zero polynomial means
    an isolated point, whose multiplicity is the dimension of the full dual.
    """
    G = g_corners(F, y, tol, order, strategy)
    return dimension_and_multiplicity(hilbert_series_data(G.ideal), F, y, tol, order, strategy)


def dimension_and_multiplicity(data, F, y, tol=DEFAULT_TOL, order=DEFAULT_ORDER, strategy=Strategy.BM):
    """Dimension and multiplicity from already computed Hilbert data."""
    if not data.hp:
        D = zero_dimensional_dual(F, y, strategy, tol, order)
        return 0, Fraction(D.dim)
    r = data.hp_degree
    mult = data.leading_coefficient * math.factorial(r)
    if mult.denominator != 1 or mult <= 0:
        raise ArithmeticError(f"multiplicity {mult} is not a positive integer")
    return r + 1, mult
