"""Numerical rank, kernel and subspace comparison via the SVD.

Matrices are plain ``numpy`` arrays.  Ranks use a relative singular value
cutoff: ``s_i`` counts when ``s_i > tol * s_max``.  Callers that know the
natural scale of their matrix can pass ``reference`` so that a matrix made
only of round-off noise is not mistaken for a full-rank one; the cutoff is
then ``tol * max(s_max, reference)``.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionError, NumericalError

DEFAULT_TOL = 1e-6


def _as_matrix(M):
    M = np.asarray(M, dtype=complex)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    if M.ndim != 2:
        raise DimensionError(f"expected a 2-d matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def _check_tol(tol):
    if not 0 <= tol < 1:
        raise ValueError(f"tolerance must lie in [0, 1), got {tol}")


def _svd(M, full):
    try:
        return np.linalg.svd(M, full_matrices=full)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"SVD failed to converge on a {M.shape} matrix") from exc


def _cutoff(s, tol, reference):
    smax = s[0] if len(s) else 0.0
    if reference is not None:
        smax = max(smax, reference)
    return tol * smax, smax


def singular_values(M):
    M = _as_matrix(M)
    if M.size == 0:
        return np.zeros(0)
    try:
        return np.linalg.svd(M, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"SVD failed to converge on a {M.shape} matrix") from exc


def numerical_rank(M, tol=DEFAULT_TOL, reference=None):
    """Number of singular values above ``tol`` times the largest one."""
    _check_tol(tol)
    s = singular_values(M)
    cut, smax = _cutoff(s, tol, reference)
    if smax == 0:
        return 0
    return int(np.count_nonzero(s > cut))


def numerical_kernel(M, tol=DEFAULT_TOL, reference=None):
    """Orthonormal basis (as columns) of the numerical kernel of ``M``.

    The basis vectors are the right singular vectors belonging to the
    singular values at or below the cutoff.  An empty or zero matrix has the
    whole space as its kernel and the identity is returned.
    """
    _check_tol(tol)
    M = _as_matrix(M)
    rows, cols = M.shape
    if rows == 0 or cols == 0:
        return np.eye(cols, dtype=complex)
    _, s, Vh = _svd(M, full=True)
    cut, smax = _cutoff(s, tol, reference)
    rank = 0 if smax == 0 else int(np.count_nonzero(s > cut))
    return Vh[rank:].conj().T.copy()


def orthonormal_range(A, tol=DEFAULT_TOL, reference=None):
    """Orthonormal basis (as columns) of the numerical column space of ``A``."""
    _check_tol(tol)
    A = _as_matrix(A)
    rows, cols = A.shape
    if rows == 0 or cols == 0:
        return np.zeros((rows, 0), dtype=complex)
    U, s, _ = _svd(A, full=False)
    cut, smax = _cutoff(s, tol, reference)
    rank = 0 if smax == 0 else int(np.count_nonzero(s > cut))
    return U[:, :rank].copy()


@dataclass(frozen=True)
class Containment:
    """Outcome of :func:`span_containment`; truthy when contained."""

    contained: bool
    residual: float

    def __bool__(self):
        return self.contained


def span_containment(A, B, tol=DEFAULT_TOL):
    """Check that every column of ``A`` lies in the span of the orthonormal columns of ``B``.

    The residual reported is the largest relative projection error
    ``||a - B B^* a|| / ||a||`` over the nonzero columns ``a`` of ``A``.
    """
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    if B.ndim == 1:
        B = B.reshape(-1, 1)
    if A.shape[0] != B.shape[0]:
        raise DimensionError(f"row counts differ: {A.shape[0]} != {B.shape[0]}")
    worst = 0.0
    for a in A.T:
        na = np.linalg.norm(a)
        if na == 0:
            continue
        r = a - B @ (B.conj().T @ a)
        worst = max(worst, float(np.linalg.norm(r) / na))
    return Containment(worst <= tol, worst)


def principal_angles(A, B):
    """Principal angles (radians, descending) between the column spans of ``A`` and ``B``."""
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if A.shape[0] != B.shape[0]:
        raise DimensionError(f"row counts differ: {A.shape[0]} != {B.shape[0]}")
    return scipy.linalg.subspace_angles(A, B)
