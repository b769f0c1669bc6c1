"""
선형 사상 모듈
두 대수 사이의 선형 사상을 행렬 단위 기저 위의 계수 행렬로 저장
"""
from dataclasses import dataclass
from typing import Callable

import numpy as np

from src.algebra import AlgebraSignature, Element
from src.linalg import as_matrix
from src.utils.errors import InvalidDimensionError, InvalidMatrixError, SignatureMismatchError
from src.utils.logger import logger


@dataclass(frozen=True, eq=False)
class LinMap:
    """f : dom → cod, coeffs는 dim(cod)×dim(dom)"""
    dom: AlgebraSignature
    cod: AlgebraSignature
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = as_matrix(self.coeffs)
        expected = (self.cod.dim, self.dom.dim)
        if coeffs.shape != expected:
            raise InvalidMatrixError(f"coeffs shape {coeffs.shape}, expected {expected}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def identity(cls, signature: AlgebraSignature) -> "LinMap":
        return cls(signature, signature, np.eye(signature.dim, dtype=np.complex128))

    @classmethod
    def from_function(
        cls,
        dom: AlgebraSignature,
        cod: AlgebraSignature,
        fn: Callable[[Element], Element],
    ) -> "LinMap":
        """기저 위의 값으로 선형 사상 구성"""
        columns = []
        for unit in Element.basis(dom):
            image = fn(unit)
            if image.signature != cod:
                raise SignatureMismatchError(
                    f"image lives in {image.signature.to_list()}, expected {cod.to_list()}"
                )
            columns.append(image.to_coords())
        coeffs = np.column_stack(columns) if columns else np.zeros((cod.dim, 0))
        return cls(dom, cod, coeffs)

    def __call__(self, x: Element) -> Element:
        return apply_map(self, x)

    def distance(self, other: "LinMap") -> float:
        """계수 최대 절댓값 차이"""
        if (self.dom, self.cod) != (other.dom, other.cod):
            raise SignatureMismatchError("maps have different dom/cod")
        return float(np.max(np.abs(self.coeffs - other.coeffs))) if self.coeffs.size else 0.0


def apply_map(f: LinMap, x: Element) -> Element:
    """좌표 변환 후 cod 블록으로 재조립"""
    if x.signature != f.dom:
        raise SignatureMismatchError(
            f"element in {x.signature.to_list()}, map domain {f.dom.to_list()}"
        )
    return Element.from_coords(f.cod, f.coeffs @ x.to_coords())


def compose_maps(g: LinMap, f: LinMap) -> LinMap:
    """g ∘ f"""
    if f.cod != g.dom:
        raise SignatureMismatchError(
            f"cannot compose: f.cod={f.cod.to_list()} g.dom={g.dom.to_list()}"
        )
    return LinMap(f.dom, g.cod, g.coeffs @ f.coeffs)


def transpose_map(n: int) -> LinMap:
    """M_n → M_n 전치 사상 (양이지만 완전 양은 아님)"""
    if n < 1:
        raise InvalidDimensionError(f"transpose needs n >= 1, got {n}")
    if n == 1:
        logger.warning("transpose_map(1) is the identity on C")
    signature = AlgebraSignature.matrix(n)
    return LinMap.from_function(
        signature,
        signature,
        lambda x: Element(signature, (x.blocks[0].T,)),
    )


def kraus_map(dom: AlgebraSignature, cod: AlgebraSignature, kraus_ops: list[np.ndarray]) -> LinMap:
    """
    x ↦ Σ_k V_k* x V_k 를 cod의 블록 대각으로 압축한 사상

    V_k 는 (dom.size)×(cod.size) 행렬
    """
    ops = [as_matrix(v) for v in kraus_ops]
    for v in ops:
        if v.shape != (dom.size, cod.size):
            raise InvalidMatrixError(f"Kraus operator shape {v.shape}, expected {(dom.size, cod.size)}")

    def image(x: Element) -> Element:
        embedded = x.to_matrix()
        total = sum(v.conj().T @ embedded @ v for v in ops)
        return Element.from_matrix(cod, total)

    return LinMap.from_function(dom, cod, image)
