"""Truncated and zero-dimensional local dual spaces.

Two strategies compute the truncated dual ``D_y^d[I]``:

* ``DZ`` takes the kernel of the Macaulay matrix whose rows are the
  coefficient vectors of ``x^a * f`` (``|a| <= d``) cut to degree ``d``.
* ``BM`` grows the space one degree at a time: a functional of degree ``k``
  belongs to the dual when every contraction ``sigma_{x_j} p`` lies in the
  degree ``k - 1`` dual and ``p`` kills each generator.

Both return orthonormal coefficient vectors over the monomial functionals of
degree <= d, listed in ascending graded order.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, NotStabilizedError, PointNotOnVarietyError
from .numlinalg import DEFAULT_TOL, numerical_kernel, orthonormal_range
from .poly import (
    DEFAULT_ORDER,
    DualFunctional,
    Polynomial,
    contract,
    monomials_up_to,
    translate,
)

# Generators are scaled to unit max coefficient, so constraint matrices have
# natural scale 1; singular values are never judged against a smaller one.
_REFERENCE_SCALE = 1.0


class Strategy(enum.Enum):
    DZ = "dz"
    BM = "bm"


@dataclass(frozen=True)
class PolynomialSystem:
    gens: tuple

    def __post_init__(self):
        gens = tuple(self.gens)
        if not gens:
            raise ValueError("a polynomial system needs at least one generator")
        n = gens[0].nvars
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError(f"generator {g!r} is not a Polynomial")
            if g.nvars != n:
                raise DimensionError("generators have different numbers of variables")
            if g.is_zero():
                raise ValueError("the zero polynomial is not allowed as a generator")
        object.__setattr__(self, "gens", gens)

    @property
    def nvars(self):
        return self.gens[0].nvars

    @property
    def max_degree(self):
        return max(g.degree for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


def as_system(F):
    return F if isinstance(F, PolynomialSystem) else PolynomialSystem(tuple(F))


@dataclass(frozen=True, eq=False)
class DualSpace:
    """Orthonormal basis of a (truncated) local dual space at ``base_point``.

    ``basis`` has one column per functional; row ``i`` holds the coefficient
    of the monomial functional ``monomials[i]``.  ``degree_bound`` is ``None``
    for a complete dual of an isolated point.
    """

    base_point: tuple
    degree_bound: object
    monomials: tuple
    basis: np.ndarray
    order: object = DEFAULT_ORDER
    tol: float = DEFAULT_TOL
    _index: dict = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "base_point", tuple(complex(v) for v in self.base_point))
        object.__setattr__(self, "monomials", tuple(tuple(m) for m in self.monomials))
        object.__setattr__(self, "_index", {m: i for i, m in enumerate(self.monomials)})

    @property
    def nvars(self):
        return len(self.base_point)

    @property
    def dim(self):
        return self.basis.shape[1]

    def __len__(self):
        return self.dim

    @property
    def max_support_degree(self):
        return sum(self.monomials[-1]) if self.monomials else 0

    def functionals(self):
        out = []
        for col in self.basis.T:
            out.append(DualFunctional({m: c for m, c in zip(self.monomials, col)}, self.nvars))
        return out

    def coefficients_on(self, monomials):
        """Basis re-expressed over another monomial list (missing rows are zero)."""
        out = np.zeros((len(monomials), self.dim), dtype=complex)
        for i, m in enumerate(monomials):
            j = self._index.get(tuple(m))
            if j is not None:
                out[i] = self.basis[j]
        return out

    def initial_terms(self, tol=None):
        """Initial monomials of the space under the graded order.

        A monomial is initial exactly when its coefficient row is independent
        of the rows of all larger monomials, which is the pivot structure of
        a row echelon form with columns in descending order.  The basis is
        orthonormal, so the residual threshold is absolute.
        """
        tol = self.tol if tol is None else tol
        k = self.dim
        picked = []
        Q = np.zeros((k, 0), dtype=complex)
        for i in range(len(self.monomials) - 1, -1, -1):
            if len(picked) == k:
                break
            row = self.basis[i].conj()
            r = row - Q @ (Q.conj().T @ row)
            r = r - Q @ (Q.conj().T @ r)
            nr = np.linalg.norm(r)
            if nr > tol:
                picked.append(self.monomials[i])
                Q = np.column_stack([Q, r / nr])
        return picked

    def dimension_in_degree(self, e):
        """``dim`` of the subspace supported in degree <= e."""
        if self.degree_bound is not None and e > self.degree_bound:
            raise ValueError(f"degree {e} exceeds the degree bound {self.degree_bound}")
        if e < 0:
            return 0
        return sum(1 for m in self.initial_terms() if sum(m) <= e)


def check_point(F, y, tol=DEFAULT_TOL):
    """Reject ``y`` when some generator does not vanish there to within ``tol * ||f||``."""
    F = as_system(F)
    y = tuple(complex(v) for v in y)
    if len(y) != F.nvars:
        raise DimensionError(f"point has {len(y)} coordinates, system has {F.nvars} variables")
    for i, f in enumerate(F):
        res = abs(f.evaluate(y))
        bound = tol * f.max_abs()
        if res > bound:
            raise PointNotOnVarietyError(i, res, bound)
    return y


def _prepared(F, y):
    out = []
    for f in F:
        g = translate(f, y)
        scale = g.max_abs()
        if scale > 0:
            out.append(g * (1.0 / scale))
    return out


def _coefficient_rows(polys, mons):
    index = {m: i for i, m in enumerate(mons)}
    rows = np.zeros((len(polys), len(mons)), dtype=complex)
    for r, f in enumerate(polys):
        for e, c in f.items():
            j = index.get(e)
            if j is not None:
                rows[r, j] = c
    return rows


def macaulay_matrix(F, d, order=DEFAULT_ORDER):
    """Macaulay matrix of ``F`` (already centred at the origin) in degree ``d``.

    Rows are ``x^a * f`` for each generator and each ``|a| <= d``, restricted
    to the terms of degree <= d.  Returns ``(matrix, monomials)`` where the
    monomials index the columns.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    polys = list(F.gens if isinstance(F, PolynomialSystem) else F)
    n = polys[0].nvars
    mons = monomials_up_to(n, d, order)
    shifted = []
    for f in polys:
        for a in mons:
            shifted.append(f * Polynomial.monomial(a))
    return _coefficient_rows(shifted, mons), mons


def _dz(gens, d, order, tol):
    M, mons = macaulay_matrix(gens, d, order)
    return mons, numerical_kernel(M, tol, reference=_REFERENCE_SCALE)


def _contraction_matrices(n, mons_k, mons_prev):
    index = {m: i for i, m in enumerate(mons_prev)}
    mats = []
    for j in range(n):
        C = np.zeros((len(mons_prev), len(mons_k)), dtype=complex)
        for col, b in enumerate(mons_k):
            if b[j] > 0:
                lowered = b[:j] + (b[j] - 1,) + b[j + 1:]
                C[index[lowered], col] = 1.0
        mats.append(C)
    return mats


def _bm_steps(gens, d, order, tol):
    """Yield ``(k, monomials, basis)`` for ``k = 0..d``."""
    n = gens[0].nvars
    B = None
    mons_prev = None
    k = 0
    while k <= d:
        mons = monomials_up_to(n, k, order)
        blocks = [_coefficient_rows(gens, mons)]
        if k > 0:
            for C in _contraction_matrices(n, mons, mons_prev):
                blocks.append(C - B @ (B.conj().T @ C))
        B = numerical_kernel(np.vstack(blocks), tol, reference=_REFERENCE_SCALE)
        mons_prev = mons
        yield k, mons, B
        k += 1


def truncated_dual(F, y, d, strategy=Strategy.BM, tol=DEFAULT_TOL, order=DEFAULT_ORDER):
    """Basis of the truncated dual ``D_y^d[I]`` of ``I = <F>`` at the point ``y``."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    F = as_system(F)
    strategy = Strategy(strategy)
    y = check_point(F, y, tol)
    gens = _prepared(F, y)
    if strategy is Strategy.DZ:
        mons, B = _dz(gens, d, order, tol)
    else:
        for _, mons, B in _bm_steps(gens, d, order, tol):
            pass
    return DualSpace(y, d, mons, B, order, tol)


def iter_truncated_duals(F, y, d_max, strategy=Strategy.BM, tol=DEFAULT_TOL, order=DEFAULT_ORDER):
    """Yield ``D_y^k[I]`` for ``k = 0, 1, ..., d_max`` (``d_max=None`` runs forever)."""
    F = as_system(F)
    strategy = Strategy(strategy)
    y = check_point(F, y, tol)
    gens = _prepared(F, y)
    if strategy is Strategy.BM:
        for k, mons, B in _bm_steps(gens, float("inf") if d_max is None else d_max, order, tol):
            yield DualSpace(y, k, mons, B, order, tol)
    else:
        k = 0
        while d_max is None or k <= d_max:
            mons, B = _dz(gens, k, order, tol)
            yield DualSpace(y, k, mons, B, order, tol)
            k += 1


def dual_dimension_profile(F, y, d_max, strategy=Strategy.BM, tol=DEFAULT_TOL, order=DEFAULT_ORDER):
    """``[dim D^0[I], ..., dim D^d_max[I]]``."""
    if d_max < 0:
        raise ValueError("degree must be non-negative")
    return [D.dim for D in iter_truncated_duals(F, y, d_max, strategy, tol, order)]


def zero_dimensional_dual(
    F, y, strategy=Strategy.BM, tol=DEFAULT_TOL, order=DEFAULT_ORDER, max_degree=50
):
    """Complete dual space at an isolated solution ``y``.

    Degrees are raised until the dimension stays the same for one step; the
    returned space has ``degree_bound=None`` and its dimension is the
    multiplicity of ``y``.
    """
    dims = []
    prev = None
    for D in iter_truncated_duals(F, y, max_degree, strategy, tol, order):
        dims.append(D.dim)
        if prev is not None and D.dim == prev.dim:
            return DualSpace(prev.base_point, None, prev.monomials, prev.basis, order, tol)
        prev = D
    raise NotStabilizedError(max_degree, dims)


def _degree_of_row(mons):
    return np.array([sum(m) for m in mons])


def colon_dual_truncated(D, f, tol=None):
    """Dual space of ``I : <f>`` from the dual space ``D`` of ``I``.

    Every contraction ``sigma_f p`` of a dual element lies in the dual of the
    colon ideal.  For a truncated ``D`` of degree bound ``d`` the result keeps
    only the combinations supported in degree ``d - deg f`` and carries that
    bound; beyond it the truncation of ``D`` does not determine the colon
    dual.  ``f`` is given in the ambient coordinates and is re-centred at the
    base point of ``D``.
    """
    tol = D.tol if tol is None else tol
    if f.nvars != D.nvars:
        raise DimensionError(f"nvars differ: {f.nvars} != {D.nvars}")
    if f.is_zero():
        raise ValueError("cannot form the colon by the zero polynomial")
    g = translate(f, D.base_point)
    mons = list(D.monomials)
    index = {m: i for i, m in enumerate(mons)}
    W = np.zeros((len(mons), D.dim), dtype=complex)
    for col, p in enumerate(D.functionals()):
        for e, c in contract(g, p).items():
            W[index[e], col] = c
    if D.degree_bound is None:
        new_bound = None
        keep = mons
        B = orthonormal_range(W, tol, reference=_REFERENCE_SCALE)
    else:
        if f.degree > D.degree_bound:
            raise ValueError(
                f"deg f = {f.degree} exceeds the degree bound {D.degree_bound} of the dual space"
            )
        new_bound = D.degree_bound - f.degree
        degs = _degree_of_row(mons)
        high = W[degs > new_bound]
        C = numerical_kernel(high, tol, reference=_REFERENCE_SCALE) if high.size else np.eye(D.dim)
        keep = [m for m in mons if sum(m) <= new_bound]
        B = orthonormal_range(W[degs <= new_bound] @ C, tol, reference=_REFERENCE_SCALE)
    return DualSpace(D.base_point, new_bound, keep, B, D.order, tol)
