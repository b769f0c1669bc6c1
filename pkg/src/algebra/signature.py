"""
대수 시그니처
유한 차원 C*-대수 ⊕ᵢ M_{nᵢ}(ℂ)를 블록 차원 목록으로 표현
"""
from dataclasses import dataclass
from typing import Iterable

from src.utils.errors import InvalidSignatureError


@dataclass(frozen=True)
class AlgebraSignature:
    """블록 차원 목록 (모두 1이면 가환 대수 ℂᵏ)"""
    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(self.blocks)
        if not blocks:
            raise InvalidSignatureError("signature needs at least one block")
        for n in blocks:
            if int(n) != n or n < 1:
                raise InvalidSignatureError(f"block dimension {n!r} is not a positive integer")
        object.__setattr__(self, "blocks", tuple(int(n) for n in blocks))

    @classmethod
    def of(cls, blocks: Iterable[int]) -> "AlgebraSignature":
        return cls(tuple(blocks))

    @classmethod
    def commutative(cls, n: int) -> "AlgebraSignature":
        """ℂⁿ"""
        if n < 1:
            raise InvalidSignatureError(f"C^{n} is not a valid algebra")
        return cls((1,) * n)

    @classmethod
    def matrix(cls, n: int) -> "AlgebraSignature":
        """M_n(ℂ)"""
        return cls((n,))

    @classmethod
    def parse(cls, text: str) -> "AlgebraSignature":
        """'1,2' 형식 문자열 파싱"""
        try:
            return cls(tuple(int(part) for part in text.split(",") if part.strip()))
        except ValueError as e:
            raise InvalidSignatureError(f"cannot parse block list {text!r}: {e}")

    @property
    def is_commutative(self) -> bool:
        return all(n == 1 for n in self.blocks)

    @property
    def is_single_block(self) -> bool:
        return len(self.blocks) == 1

    @property
    def dim(self) -> int:
        """복소 차원 Σ nᵢ²"""
        return sum(n * n for n in self.blocks)

    @property
    def size(self) -> int:
        """블록 대각 행렬로 임베딩했을 때의 크기 Σ nᵢ"""
        return sum(self.blocks)

    def offsets(self) -> list[int]:
        """좌표 벡터에서 각 블록의 시작 위치 (행렬 단위 기저, 행 우선)"""
        offsets, position = [], 0
        for n in self.blocks:
            offsets.append(position)
            position += n * n
        return offsets

    def to_list(self) -> list[int]:
        return list(self.blocks)

    def __str__(self) -> str:
        if self.is_commutative:
            return f"C^{len(self.blocks)}"
        return " + ".join("C" if n == 1 else f"M{n}" for n in self.blocks)
