"""
유한 차원 C*-대수 모듈
시그니처, 원소 산술, 양의 원뿔과 순서, 효과
"""
from src.algebra.signature import AlgebraSignature
from src.algebra.element import (
    Element,
    element_arith,
    star,
    cstar_norm,
    is_self_adjoint,
    is_positive,
    leq,
    decompose_self_adjoint,
    real_imag_parts,
    four_positive_parts,
    is_effect,
)
from src.algebra.effect import Effect

__all__ = [
    "AlgebraSignature",
    "Element",
    "element_arith",
    "star",
    "cstar_norm",
    "is_self_adjoint",
    "is_positive",
    "leq",
    "decompose_self_adjoint",
    "real_imag_parts",
    "four_positive_parts",
    "is_effect",
    "Effect",
]
