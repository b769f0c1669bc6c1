"""
에르미트 행렬 고유분해 모듈
순환(cyclic) Jacobi 회전 기반, 외부 고유값 솔버 없이 numpy 배열 연산만 사용
"""
import math
from dataclasses import dataclass

import numpy as np

from src.utils.constants import Limits, Tolerances
from src.utils.errors import (
    DimensionTooLargeError,
    InvalidMatrixError,
    NoConvergenceError,
    NotHermitianError,
    NotPSDError,
    NotSquareError,
)
from src.utils.logger import logger


@dataclass(frozen=True)
class EigenDecomposition:
    """고유분해 결과"""
    eigenvalues: np.ndarray   # 실수, 오름차순
    eigenvectors: np.ndarray  # 유니타리 행렬 (열 = 고유벡터)
    sweeps: int = 0           # 사용된 Jacobi sweep 수

    def reconstruct(self) -> np.ndarray:
        """V·diag(λ)·V* 복원"""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_matrix(data) -> np.ndarray:
    """입력을 complex128 2차원 배열로 변환 (유한값 검증)"""
    matrix = np.array(data, dtype=np.complex128)
    if matrix.ndim != 2:
        raise InvalidMatrixError(f"expected a 2-D matrix, got ndim={matrix.ndim}")
    if not np.all(np.isfinite(matrix)):
        raise InvalidMatrixError("matrix has non-finite entries")
    return matrix


def frobenius_norm(matrix: np.ndarray) -> float:
    return float(np.linalg.norm(matrix, "fro")) if matrix.size else 0.0


def is_hermitian(matrix: np.ndarray, tol: float = Tolerances.HERMITIAN) -> bool:
    """‖H − H*‖_F ≤ tol·(1+‖H‖_F)"""
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    asymmetry = frobenius_norm(matrix - matrix.conj().T)
    return asymmetry <= tol * (1.0 + frobenius_norm(matrix))


def _check_hermitian(matrix: np.ndarray) -> np.ndarray:
    matrix = as_matrix(matrix)
    rows, cols = matrix.shape
    if rows != cols:
        raise NotSquareError(f"matrix is {rows}x{cols}")
    if not is_hermitian(matrix):
        asymmetry = frobenius_norm(matrix - matrix.conj().T)
        raise NotHermitianError(f"asymmetry {asymmetry:.3e} above tolerance")
    return matrix


def _off_diagonal_norm(a: np.ndarray) -> float:
    return frobenius_norm(a - np.diag(np.diag(a)))


def _is_diagonal(a: np.ndarray) -> bool:
    return not np.any(a - np.diag(np.diag(a)))


def _rotation(app: float, aqq: float, apq: complex) -> np.ndarray:
    """(p, q) 평면에서 apq를 소거하는 2x2 유니타리 G (G* A G 대각화)"""
    r = abs(apq)
    phase = apq / r
    theta = 0.5 * math.atan2(2.0 * r, aqq - app)
    c, s = math.cos(theta), math.sin(theta)
    # 위상 보정 diag(1, e^{-iφ}) 후 실수 회전 [[c, s], [-s, c]]
    return np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]], dtype=np.complex128)


def _canonical_phase(vectors: np.ndarray) -> np.ndarray:
    """각 고유벡터의 첫 번째 0이 아닌 성분을 양의 실수로 맞춤"""
    vectors = vectors.copy()
    for k in range(vectors.shape[1]):
        column = vectors[:, k]
        nonzero = np.flatnonzero(np.abs(column) > 1e-12)
        if nonzero.size:
            lead = column[nonzero[0]]
            vectors[:, k] = column * (abs(lead) / lead)
    return vectors


def herm_eig(matrix) -> EigenDecomposition:
    """
    에르미트 행렬 고유분해 (cyclic Jacobi)

    Args:
        matrix: 에르미트 행렬

    Returns:
        오름차순 고유값과 유니타리 고유벡터 행렬
    """
    h = _check_hermitian(matrix)
    n = h.shape[0]
    if n > Limits.MAX_MATRIX_SIZE:
        raise DimensionTooLargeError(f"{n}x{n} exceeds {Limits.MAX_MATRIX_SIZE}")
    a = 0.5 * (h + h.conj().T)
    if _is_diagonal(a):
        eigenvalues = np.real(np.diag(a)).copy()
        order = np.argsort(eigenvalues, kind="stable")
        return EigenDecomposition(eigenvalues[order], np.eye(n, dtype=np.complex128)[:, order])
    v = np.eye(n, dtype=np.complex128)

    threshold = Tolerances.JACOBI * (1.0 + frobenius_norm(h))
    sweeps = 0
    while _off_diagonal_norm(a) > threshold:
        if sweeps >= Tolerances.JACOBI_MAX_SWEEPS:
            raise NoConvergenceError(f"Jacobi did not converge in {sweeps} sweeps (n={n})")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) == 0.0:
                    continue
                g = _rotation(a[p, p].real, a[q, q].real, a[p, q])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = g.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ g

    eigenvalues = np.real(np.diag(a)).copy()
    order = np.argsort(eigenvalues, kind="stable")
    if sweeps:
        logger.debug(f"herm_eig: n={n} converged in {sweeps} sweeps")
    return EigenDecomposition(
        eigenvalues=eigenvalues[order],
        eigenvectors=_canonical_phase(v[:, order]),
        sweeps=sweeps,
    )


def min_eigenvalue(matrix) -> float:
    """
    최소 고유값

    대각 행렬은 대각 성분, 2x2 는 닫힌 형식 t − √(z² + |b|²), 그 외는 herm_eig
    """
    h = _check_hermitian(matrix)
    n = h.shape[0]
    if n == 0:
        return math.inf
    if _is_diagonal(h):
        return float(np.min(np.real(np.diag(h))))
    if n == 2:
        a, d = h[0, 0].real, h[1, 1].real
        b = 0.5 * (h[1, 0] + h[0, 1].conjugate())
        t, z = 0.5 * (a + d), 0.5 * (a - d)
        return t - math.sqrt(z * z + abs(b) ** 2)
    return float(herm_eig(h).eigenvalues[0])


def is_psd(matrix, tol: float = Tolerances.POSITIVITY) -> bool:
    """최소 고유값 ≥ −tol 이면 True"""
    return bool(min_eigenvalue(matrix) >= -tol)


def psd_sqrt(matrix, tol: float = Tolerances.POSITIVITY) -> np.ndarray:
    """
    양의 준정부호 행렬의 제곱근

    [−tol, 0) 구간의 고유값은 0으로 클램핑
    """
    decomposition = herm_eig(matrix)
    eigenvalues = decomposition.eigenvalues
    if eigenvalues.size and eigenvalues[0] < -tol:
        raise NotPSDError(f"min eigenvalue {eigenvalues[0]:.3e} below -{tol:g}")
    roots = np.sqrt(np.clip(eigenvalues, 0.0, None))
    v = decomposition.eigenvectors
    root = (v * roots) @ v.conj().T
    h = as_matrix(matrix)
    residual = frobenius_norm(root @ root - h)
    if residual > Tolerances.SQRT_RESIDUAL * (1.0 + frobenius_norm(h)):
        raise NoConvergenceError(f"square root residual {residual:.3e}")
    return root


def operator_norm(matrix) -> float:
    """스펙트럼 노름 sqrt(λ_max(M*M))"""
    m = as_matrix(matrix)
    if m.size == 0 or not np.any(m):
        return 0.0
    gram = m.conj().T @ m
    gram = 0.5 * (gram + gram.conj().T)
    largest = herm_eig(gram).eigenvalues[-1]
    return math.sqrt(max(float(largest), 0.0))
