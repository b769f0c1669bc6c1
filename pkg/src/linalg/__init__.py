"""
복소 행렬 커널
에르미트 고유분해(Jacobi), 양의 준정부호 판정, 제곱근, 연산자 노름
"""
from src.linalg.hermitian import (
    EigenDecomposition,
    as_matrix,
    frobenius_norm,
    is_hermitian,
    herm_eig,
    is_psd,
    min_eigenvalue,
    psd_sqrt,
    operator_norm,
)

__all__ = [
    "EigenDecomposition",
    "as_matrix",
    "frobenius_norm",
    "is_hermitian",
    "herm_eig",
    "is_psd",
    "min_eigenvalue",
    "psd_sqrt",
    "operator_norm",
]
