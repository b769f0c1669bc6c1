"""
에르미트 고유분해 / PSD / 제곱근 / 연산자 노름 테스트
"""
import sys
from pathlib import Path

# 프로젝트 루트 설정
ROOT_DIR = Path(__file__).parent
sys.path.insert(0, str(ROOT_DIR))

import numpy as np
import pytest

from src.linalg import frobenius_norm, herm_eig, is_psd, min_eigenvalue, operator_norm, psd_sqrt
from src.utils.errors import DimensionTooLargeError, NotHermitianError, NotPSDError, NotSquareError
from src.utils.sampling import random_hermitian, random_matrix


# ============================================================
# herm_eig
# ============================================================
def test_herm_eig_diagonal():
    result = herm_eig(np.diag([2.0, -1.0]))
    assert np.allclose(result.eigenvalues, [-1.0, 2.0])
    assert np.allclose(np.abs(result.eigenvectors), [[0, 1], [1, 0]])


def test_herm_eig_swap():
    result = herm_eig([[0, 1], [1, 0]])
    assert np.allclose(result.eigenvalues, [-1.0, 1.0], atol=1e-12)


def test_herm_eig_scalar():
    result = herm_eig([[5.0]])
    assert np.allclose(result.eigenvalues, [5.0])
    assert np.allclose(result.eigenvectors, [[1.0]])
    assert result.sweeps == 0


def test_herm_eig_rejects_rectangular():
    with pytest.raises(NotSquareError):
        herm_eig(np.zeros((2, 3)))


def test_herm_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        herm_eig([[0, 1], [0, 0]])


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_herm_eig_reconstruction_and_unitarity(n):
    rng = np.random.default_rng(n)
    for _ in range(10):
        h = random_hermitian(n, rng)
        result = herm_eig(h)
        scale = 1.0 + frobenius_norm(h)
        v = result.eigenvectors
        assert frobenius_norm(result.reconstruct() - h) <= 1e-9 * scale
        assert frobenius_norm(v.conj().T @ v - np.eye(n)) <= 1e-9
        assert np.all(np.diff(result.eigenvalues) >= 0)


def test_herm_eig_matches_complex_example():
    # [[2, i], [-i, 2]] 의 고유값은 1, 3
    result = herm_eig([[2, 1j], [-1j, 2]])
    assert np.allclose(result.eigenvalues, [1.0, 3.0])


def test_herm_eig_canonical_phase():
    rng = np.random.default_rng(3)
    result = herm_eig(random_hermitian(4, rng))
    for k in range(4):
        column = result.eigenvectors[:, k]
        lead = column[np.flatnonzero(np.abs(column) > 1e-12)[0]]
        assert abs(lead.imag) < 1e-12 and lead.real > 0


# ============================================================
# is_psd / psd_sqrt
# ============================================================
@pytest.mark.parametrize("matrix, expected", [
    (np.diag([1.0, 0.5]), True),
    (np.diag([1.0, -0.5]), False),
    (np.array([[1.0, 1.0], [1.0, 1.0]]), True),
])
def test_is_psd(matrix, expected):
    assert is_psd(matrix) is expected


def test_is_psd_tolerance():
    assert is_psd(np.diag([1.0, -1e-10]))
    assert not is_psd(np.diag([1.0, -1e-6]))


def test_is_psd_unitary_invariance():
    rng = np.random.default_rng(11)
    h = random_hermitian(4, rng)
    v = herm_eig(h).eigenvectors
    assert is_psd(h) == is_psd(v.conj().T @ h @ v)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_min_eigenvalue_matches_herm_eig(n):
    rng = np.random.default_rng(12)
    for _ in range(20):
        h = random_hermitian(n, rng)
        assert min_eigenvalue(h) == pytest.approx(herm_eig(h).eigenvalues[0], abs=1e-10)


def test_min_eigenvalue_shortcuts():
    assert min_eigenvalue(np.diag([3.0, -2.0, 5.0])) == -2.0
    # 2x2 닫힌 형식: t − √(z² + |b|²)
    assert min_eigenvalue([[1, 2j], [-2j, 1]]) == pytest.approx(-1.0, abs=1e-15)
    with pytest.raises(NotHermitianError):
        min_eigenvalue([[0, 1], [0, 0]])


def test_herm_eig_size_limit():
    with pytest.raises(DimensionTooLargeError):
        herm_eig(np.eye(65))
    assert herm_eig(np.eye(64)).eigenvalues.size == 64


def test_psd_sqrt_examples():
    assert np.allclose(psd_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]))
    assert np.allclose(psd_sqrt(np.eye(3)), np.eye(3))
    projection = 0.5 * np.array([[1.0, 1.0], [1.0, 1.0]])
    assert np.allclose(psd_sqrt(projection), projection)


def test_psd_sqrt_squares_back():
    rng = np.random.default_rng(5)
    for n in (2, 3, 6):
        z = random_matrix(n, rng)
        h = z @ z.conj().T
        root = psd_sqrt(h)
        assert frobenius_norm(root @ root - h) <= 1e-8 * (1.0 + frobenius_norm(h))
        assert is_psd(root)


def test_psd_sqrt_clamps_small_negative():
    root = psd_sqrt(np.diag([1.0, -1e-12]))
    assert np.allclose(root, np.diag([1.0, 0.0]))


def test_psd_sqrt_rejects_negative():
    with pytest.raises(NotPSDError):
        psd_sqrt(np.diag([1.0, -1.0]))


# ============================================================
# operator_norm
# ============================================================
def test_operator_norm_examples():
    assert operator_norm(np.diag([3j, 4.0])) == pytest.approx(4.0)
    assert operator_norm(np.zeros((3, 3))) == 0.0
    assert operator_norm([[0, 2], [0, 0]]) == pytest.approx(2.0)


def test_operator_norm_cstar_identity():
    rng = np.random.default_rng(2)
    for n in (1, 2, 4):
        m = random_matrix(n, rng)
        norm = operator_norm(m)
        assert operator_norm(m.conj().T @ m) == pytest.approx(norm ** 2, rel=1e-8)
