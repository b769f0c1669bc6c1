"""
대수 원소 모듈
블록 대각 복소 행렬 튜플과 산술, 대합(involution), 양의 원뿔, 순서, 노름, 분해
"""
from dataclasses import dataclass
from numbers import Number
from typing import Iterable, Union

import numpy as np

from src.algebra.signature import AlgebraSignature
from src.linalg import as_matrix, herm_eig, is_hermitian, is_psd, operator_norm
from src.utils.constants import Tolerances
from src.utils.errors import (
    InvalidMatrixError,
    NotSelfAdjointError,
    SignatureMismatchError,
)


@dataclass(frozen=True, eq=False)
class Element:
    """시그니처에 속한 원소 (블록마다 nᵢ×nᵢ 복소 행렬)"""
    signature: AlgebraSignature
    blocks: tuple[np.ndarray, ...]

    def __post_init__(self):
        blocks = tuple(as_matrix(b) for b in self.blocks)
        if len(blocks) != len(self.signature.blocks):
            raise InvalidMatrixError(
                f"{len(blocks)} blocks given for signature {self.signature.to_list()}"
            )
        for block, n in zip(blocks, self.signature.blocks):
            if block.shape != (n, n):
                raise InvalidMatrixError(f"block shape {block.shape} does not match dimension {n}")
        object.__setattr__(self, "blocks", blocks)

    # ------------------------------------------------------------
    # 생성자
    # ------------------------------------------------------------
    @classmethod
    def zero(cls, signature: AlgebraSignature) -> "Element":
        return cls(signature, tuple(np.zeros((n, n), dtype=np.complex128) for n in signature.blocks))

    @classmethod
    def unit(cls, signature: AlgebraSignature) -> "Element":
        return cls(signature, tuple(np.eye(n, dtype=np.complex128) for n in signature.blocks))

    @classmethod
    def from_blocks(cls, blocks: Iterable) -> "Element":
        """블록 모양에서 시그니처 추론"""
        matrices = [as_matrix(b) for b in blocks]
        return cls(AlgebraSignature(tuple(m.shape[0] for m in matrices)), tuple(matrices))

    @classmethod
    def vector(cls, values: Iterable[complex]) -> "Element":
        """ℂⁿ 원소 (좌표별 값)"""
        values = list(values)
        return cls(
            AlgebraSignature.commutative(len(values)),
            tuple(np.array([[v]], dtype=np.complex128) for v in values),
        )

    @classmethod
    def from_coords(cls, signature: AlgebraSignature, coords) -> "Element":
        """행렬 단위 기저 좌표 (블록 순서, 블록 내 행 우선)"""
        coords = np.asarray(coords, dtype=np.complex128)
        if coords.shape != (signature.dim,):
            raise InvalidMatrixError(f"expected {signature.dim} coordinates, got shape {coords.shape}")
        blocks = []
        for offset, n in zip(signature.offsets(), signature.blocks):
            blocks.append(coords[offset:offset + n * n].reshape(n, n))
        return cls(signature, tuple(blocks))

    @classmethod
    def matrix_unit(cls, signature: AlgebraSignature, index: int) -> "Element":
        coords = np.zeros(signature.dim, dtype=np.complex128)
        coords[index] = 1.0
        return cls.from_coords(signature, coords)

    @classmethod
    def basis(cls, signature: AlgebraSignature) -> list["Element"]:
        return [cls.matrix_unit(signature, k) for k in range(signature.dim)]

    # ------------------------------------------------------------
    # 좌표 / 표현
    # ------------------------------------------------------------
    def to_coords(self) -> np.ndarray:
        return np.concatenate([b.ravel() for b in self.blocks])

    def to_matrix(self) -> np.ndarray:
        """블록 대각 행렬로 임베딩"""
        size = self.signature.size
        out = np.zeros((size, size), dtype=np.complex128)
        position = 0
        for block in self.blocks:
            n = block.shape[0]
            out[position:position + n, position:position + n] = block
            position += n
        return out

    @classmethod
    def from_matrix(cls, signature: AlgebraSignature, matrix: np.ndarray) -> "Element":
        """블록 대각 부분만 취함 (pinching)"""
        blocks, position = [], 0
        for n in signature.blocks:
            blocks.append(matrix[position:position + n, position:position + n])
            position += n
        return cls(signature, tuple(blocks))

    def values(self) -> np.ndarray:
        """가환 대수의 좌표값"""
        return np.array([b[0, 0] for b in self.blocks])

    # ------------------------------------------------------------
    # 산술
    # ------------------------------------------------------------
    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.signature != self.signature:
            raise SignatureMismatchError(
                f"{self.signature.to_list()} vs {other.signature.to_list()}"
            )

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.signature, tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.signature, tuple(a - b for a, b in zip(self.blocks, other.blocks)))

    def __neg__(self) -> "Element":
        return Element(self.signature, tuple(-a for a in self.blocks))

    def __mul__(self, other: Union["Element", Number]) -> "Element":
        if isinstance(other, Number):
            return Element(self.signature, tuple(complex(other) * a for a in self.blocks))
        self._check(other)
        return Element(self.signature, tuple(a @ b for a, b in zip(self.blocks, other.blocks)))

    def __rmul__(self, scalar: Number) -> "Element":
        if not isinstance(scalar, Number):
            return NotImplemented
        return self * scalar

    def star(self) -> "Element":
        return Element(self.signature, tuple(a.conj().T for a in self.blocks))

    def norm(self) -> float:
        return cstar_norm(self)

    def distance(self, other: "Element") -> float:
        """‖self − other‖"""
        return cstar_norm(self - other)

    def __repr__(self) -> str:
        if self.signature.is_commutative:
            return f"Element({np.round(self.values(), 6).tolist()})"
        return f"Element({self.signature}, {[np.round(b, 6).tolist() for b in self.blocks]})"


ARITH_OPS = ("add", "sub", "scalar_mul", "mul")


def element_arith(op: str, x: Element, y: Union[Element, Number]) -> Element:
    """블록별 산술 (add, sub, scalar_mul, mul)"""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "scalar_mul":
        if not isinstance(y, Number):
            raise TypeError("scalar_mul needs a complex scalar")
        return x * y
    if op == "mul":
        if not isinstance(y, Element):
            raise TypeError("mul needs an Element")
        return x * y
    raise ValueError(f"unknown op {op!r}, expected one of {ARITH_OPS}")


def star(x: Element) -> Element:
    """블록별 켤레 전치"""
    return x.star()


def cstar_norm(x: Element) -> float:
    """블록별 연산자 노름의 최대값"""
    return max(operator_norm(b) for b in x.blocks)


def is_self_adjoint(x: Element, tol: float = Tolerances.HERMITIAN) -> bool:
    return all(is_hermitian(b, tol) for b in x.blocks)


def is_positive(x: Element, tol: float = Tolerances.POSITIVITY) -> bool:
    """모든 블록이 PSD (자기수반이 아니면 False)"""
    if not is_self_adjoint(x):
        return False
    return all(is_psd(b, tol) for b in x.blocks)


def leq(x: Element, y: Element, tol: float = Tolerances.POSITIVITY) -> bool:
    """x ≤ y ⟺ y − x ∈ A⁺"""
    return is_positive(y - x, tol)


def decompose_self_adjoint(x: Element) -> tuple[Element, Element]:
    """
    x = x_p − x_n (x_p, x_n ≥ 0, x_p·x_n = 0)

    블록별 스펙트럼 분해: 양의 고유값은 x_p, 음의 고유값(부호 반전)은 x_n
    """
    if not is_self_adjoint(x):
        raise NotSelfAdjointError("decomposition needs a self-adjoint element")
    positive, negative = [], []
    for block in x.blocks:
        decomposition = herm_eig(0.5 * (block + block.conj().T))
        v, lam = decomposition.eigenvectors, decomposition.eigenvalues
        positive.append((v * np.clip(lam, 0.0, None)) @ v.conj().T)
        negative.append((v * np.clip(-lam, 0.0, None)) @ v.conj().T)
    return Element(x.signature, tuple(positive)), Element(x.signature, tuple(negative))


def real_imag_parts(y: Element) -> tuple[Element, Element]:
    """y_r = ½(y + y*), y_i = (1/2i)(y − y*)"""
    y_star = y.star()
    return (y + y_star) * 0.5, (y - y_star) * (1.0 / 2j)


def four_positive_parts(y: Element) -> tuple[Element, Element, Element, Element]:
    """y = (a − b) + i(c − d), 네 원소 모두 양"""
    y_r, y_i = real_imag_parts(y)
    a, b = decompose_self_adjoint(y_r)
    c, d = decompose_self_adjoint(y_i)
    return a, b, c, d


def is_effect(x: Element, tol: float = Tolerances.POSITIVITY) -> bool:
    """0 ≤ x ≤ 1"""
    return is_positive(x, tol) and leq(x, Element.unit(x.signature), tol)
