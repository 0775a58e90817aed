import numpy as np
import pytest

from localdual.errors import DimensionError
from localdual.numlinalg import (
    numerical_kernel,
    numerical_rank,
    orthonormal_range,
    principal_angles,
    span_containment,
)

NEAR = np.array([[1, 1], [1, 1 + 1e-12]])


def test_near_singular_oracle():
    # symmetric 2x2: singular values are |eigenvalues| = (2 + e)/2 +- sqrt(e^2 + 4)/2
    e = 1e-12
    s_small = abs((2 + e) / 2 - np.sqrt(e * e + 4) / 2)
    assert s_small < 1e-12
    assert numerical_rank(NEAR, 1e-6) == 1


def test_rank_examples():
    assert numerical_rank(np.eye(3), 1e-6) == 3
    assert numerical_rank(np.zeros((2, 2)), 1e-6) == 0
    assert numerical_rank(np.zeros((0, 4))) == 0


def test_kernel_examples():
    assert numerical_kernel(np.eye(2)).shape == (2, 0)
    K = numerical_kernel(np.array([[1.0, -1.0]]))
    assert K.shape == (2, 1)
    assert abs(abs(np.vdot(K[:, 0], np.array([1, 1]) / np.sqrt(2))) - 1) < 1e-12
    K = numerical_kernel(NEAR, 1e-6)
    assert abs(abs(np.vdot(K[:, 0], np.array([1, -1]) / np.sqrt(2))) - 1) < 1e-9
    assert np.allclose(numerical_kernel(np.zeros((0, 3))), np.eye(3))
    assert np.allclose(numerical_kernel(np.zeros((2, 3))), np.eye(3))


def test_reference_scale_keeps_noise_out():
    noise = np.full((2, 3), 1e-14)
    assert numerical_rank(noise, 1e-6) == 1
    assert numerical_rank(noise, 1e-6, reference=1.0) == 0
    assert numerical_kernel(noise, 1e-6, reference=1.0).shape == (3, 3)


def test_bad_inputs():
    with pytest.raises(ValueError):
        numerical_rank(np.eye(2), 1.5)
    with pytest.raises(ValueError):
        numerical_rank(np.array([[np.inf]]))
    with pytest.raises(DimensionError):
        span_containment(np.eye(2), np.eye(3))


def random_low_rank(rng, m, n, r, spread=1.0):
    A = rng.normal(size=(m, r)) + 1j * rng.normal(size=(m, r))
    B = rng.normal(size=(r, n)) + 1j * rng.normal(size=(r, n))
    return spread * (A @ B)


def householder(rng, n):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    v /= np.linalg.norm(v)
    return np.eye(n) - 2 * np.outer(v, v.conj())


def test_kernel_invariants_random():
    rng = np.random.default_rng(2024)
    tol = 1e-6
    for _ in range(50):
        m, n = rng.integers(1, 12, size=2)
        r = int(rng.integers(0, min(m, n) + 1))
        M = random_low_rank(rng, m, n, r)
        K = numerical_kernel(M, tol)
        smax = np.linalg.norm(M, 2)
        assert K.shape[1] == n - numerical_rank(M, tol)
        assert np.max(np.abs(M @ K), initial=0) <= 10 * tol * smax
        assert np.allclose(K.conj().T @ K, np.eye(K.shape[1]), atol=1e-10)


def test_rank_invariant_under_unitary_and_scaling():
    rng = np.random.default_rng(99)
    for _ in range(40):
        m, n = rng.integers(2, 10, size=2)
        r = int(rng.integers(0, min(m, n) + 1))
        M = random_low_rank(rng, m, n, r)
        rank = numerical_rank(M, 1e-6)
        assert rank == r
        U, V = householder(rng, m), householder(rng, n)
        assert numerical_rank(U @ M @ V, 1e-6) == rank
        for c in (1e-8, -3.0, 2e7j):
            assert numerical_rank(c * M, 1e-6) == rank


def test_span_containment_examples():
    rng = np.random.default_rng(5)
    B = orthonormal_range(rng.normal(size=(6, 3)))
    assert span_containment(B[:, :1], B)
    ortho = numerical_kernel(B.conj().T)[:, :1]
    res = span_containment(ortho, B)
    assert not res
    assert res.residual == pytest.approx(1.0, abs=1e-12)


def test_principal_angles_small_for_same_span():
    rng = np.random.default_rng(1)
    A = rng.normal(size=(5, 2))
    B = A @ np.array([[1.0, 2.0], [0.5, -1.0]])
    assert max(principal_angles(A, B)) < 1e-10
