"""Sparse multivariate polynomials and monomial functionals.

Terms are stored as ``{exponent tuple: complex coefficient}``.  A
:class:`DualFunctional` has the same representation; the exponent ``a`` then
stands for the monomial functional ``d^a`` which extracts the coefficient of
``(x - y)^a`` at the base point ``y``.
"""

import enum
import math
from collections import defaultdict
from itertools import combinations_with_replacement

from .errors import DimensionError

CLEANUP_TOL = 1e-13


class MonomialOrder(enum.Enum):
    GRLEX = "grlex"
    GREVLEX = "grevlex"

    def key(self, a):
        """Sort key, ascending in the graded (dual side) order."""
        if self is MonomialOrder.GRLEX:
            return (sum(a), tuple(a))
        return (sum(a), tuple(-e for e in reversed(a)))


class Side(enum.Enum):
    DUAL = "dual"
    LOCAL = "local"


DEFAULT_ORDER = MonomialOrder.GREVLEX


def compare_monomials(a, b, order=DEFAULT_ORDER, side=Side.DUAL):
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``.

    On the dual side the order is the graded order itself.  The local side
    uses the reversed order, so lower total degree ranks higher.
    """
    if len(a) != len(b):
        raise DimensionError(f"exponent lengths differ: {len(a)} != {len(b)}")
    ka, kb = order.key(a), order.key(b)
    c = (ka > kb) - (ka < kb)
    return c if side is Side.DUAL else -c


def exponents_of_degree(n, d):
    """All exponent vectors of length ``n`` and total degree ``d``."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def monomials_up_to(n, d, order=DEFAULT_ORDER):
    """Exponents of total degree <= d, ascending in ``order``.

    Because the order is graded, the list for ``d - 1`` is a prefix of the
    list for ``d``.
    """
    mons = []
    for k in range(d + 1):
        mons.extend(sorted(exponents_of_degree(n, k), key=order.key))
    return mons


def _check_exponent(e, nvars):
    if len(e) != nvars:
        raise DimensionError(f"exponent {e} does not have length {nvars}")
    if any((not isinstance(v, int)) or v < 0 for v in e):
        raise ValueError(f"exponent {e} must hold non-negative integers")


class Polynomial:
    """Immutable sparse polynomial with complex coefficients."""

    __slots__ = ("_terms", "_nvars")

    def __init__(self, terms, nvars=None):
        terms = dict(terms)
        if nvars is None:
            if not terms:
                raise ValueError("nvars is required for an empty term map")
            nvars = len(next(iter(terms)))
        clean = {}
        for e, c in terms.items():
            e = tuple(int(v) for v in e)
            _check_exponent(e, nvars)
            c = complex(c)
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise ValueError(f"non-finite coefficient {c} at {e}")
            if c != 0:
                clean[e] = c
        self._terms = clean
        self._nvars = nvars

    @classmethod
    def zero(cls, nvars):
        return cls({}, nvars)

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exponent, coeff=1.0):
        return cls({tuple(exponent): coeff}, len(exponent))

    @classmethod
    def variables(cls, nvars):
        return [cls.monomial(tuple(int(i == j) for j in range(nvars))) for i in range(nvars)]

    @property
    def nvars(self):
        return self._nvars

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exponent):
        return self._terms.get(tuple(exponent), 0j)

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def max_abs(self):
        """Largest coefficient modulus (0 for the zero polynomial)."""
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def cleaned(self, rel=CLEANUP_TOL):
        """Drop terms smaller than ``rel`` times the largest coefficient."""
        cut = rel * self.max_abs()
        return type(self)({e: c for e, c in self._terms.items() if abs(c) >= cut}, self._nvars)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionError(f"nvars differ: {self.nvars} != {other.nvars}")
            return other
        if isinstance(other, (int, float, complex)):
            return type(self).constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other.items():
            acc[e] = acc.get(e, 0j) + c
        return type(self)(acc, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return type(self)({e: c * other for e, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = defaultdict(complex)
        for e1, c1 in self._terms.items():
            for e2, c2 in other.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return type(self)(acc, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = type(self).constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self._nvars, frozenset(self._terms.items())))

    def evaluate(self, point):
        point = [complex(v) for v in point]
        if len(point) != self.nvars:
            raise DimensionError(f"point has {len(point)} coordinates, expected {self.nvars}")
        total = 0j
        for e, c in self._terms.items():
            t = c
            for v, k in zip(point, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def sorted_terms(self, order=DEFAULT_ORDER):
        """Terms from largest to smallest in the graded order."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_string(self, names=None, order=DEFAULT_ORDER):
        """Render in the system-file syntax (round-trips through the parser)."""
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        out = ""
        for e, c in self.sorted_terms(order):
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            if c.imag == 0:
                sign = "-" if c.real < 0 else "+"
                mag = abs(c.real)
                body = mono if (mag == 1 and mono) else (f"{mag!r}*{mono}" if mono else repr(mag))
            else:
                sign = "+"
                body = f"{_format_coeff(c)}*{mono}" if mono else _format_coeff(c)
            if not out:
                out = body if sign == "+" else "-" + body
            else:
                out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"{type(self).__name__}({self._terms!r}, nvars={self._nvars})"


class DualFunctional(Polynomial):
    """Element of the local dual space, written in the basis of monomial functionals."""

    __slots__ = ()

    def to_string(self, names=None, order=DEFAULT_ORDER):
        if names is None:
            names = [f"d{i + 1}" for i in range(self.nvars)]
        return super().to_string(names, order)


def _format_coeff(c):
    sign = "-" if math.copysign(1.0, c.imag) < 0 else "+"
    return f"({c.real!r}{sign}{abs(c.imag)!r}i)"


def translate(f, y, cleanup=CLEANUP_TOL):
    """Return ``g`` with ``g(x) = f(x + y)``."""
    y = [complex(v) for v in y]
    if len(y) != f.nvars:
        raise DimensionError(f"point has {len(y)} coordinates, expected {f.nvars}")
    acc = defaultdict(complex)
    for e, c in f.items():
        # product of binomial expansions (x_i + y_i)^e_i
        partial = {(): c}
        for k, yi in zip(e, y):
            nxt = {}
            for head, v in partial.items():
                for j in range(k + 1):
                    w = math.comb(k, j) * yi ** (k - j) if k - j else 1.0
                    if w != 0:
                        nxt[head + (j,)] = v * w
            partial = nxt
        for ex, v in partial.items():
            acc[ex] += v
    g = type(f)(acc, f.nvars)
    return g.cleaned(cleanup) if cleanup else g


def translate_system(polys, y, cleanup=CLEANUP_TOL):
    """Translate every polynomial so that ``y`` moves to the origin."""
    return [translate(f, y, cleanup) for f in polys]


def evaluate_pairing(p, f):
    """Apply the functional ``p`` to ``f``: the sum of ``p_a * f_a``."""
    if p.nvars != f.nvars:
        raise DimensionError(f"nvars differ: {p.nvars} != {f.nvars}")
    if len(p) > len(f):
        p, f = f, p
    return sum((c * f.coefficient(e) for e, c in p.items()), 0j)


def contract(f, p):
    """The functional ``g -> p(f * g)``.

    On monomials ``x^a`` acting on ``d^b`` this gives ``d^(b - a)`` when the
    difference is non-negative and zero otherwise.
    """
    if p.nvars != f.nvars:
        raise DimensionError(f"nvars differ: {p.nvars} != {f.nvars}")
    acc = defaultdict(complex)
    for a, fa in f.items():
        for b, pb in p.items():
            diff = tuple(bi - ai for ai, bi in zip(a, b))
            if min(diff) >= 0:
                acc[diff] += fa * pb
    return DualFunctional(acc, p.nvars)
