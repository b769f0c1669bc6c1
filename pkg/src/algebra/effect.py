"""
효과(effect) 모듈
[0,1]_A = {e | 0 ≤ e ≤ 1} 와 효과 모듈 구조 (부분 합, 직교 보완, 스칼라 곱)
"""
from dataclasses import dataclass

from src.algebra.element import Element, is_effect, leq
from src.algebra.signature import AlgebraSignature
from src.utils.errors import NotEffectError


@dataclass(frozen=True, eq=False)
class Effect:
    """단위 원소 아래의 양의 원소"""
    element: Element

    def __post_init__(self):
        if not is_effect(self.element):
            raise NotEffectError(f"{self.element!r} is not in [0,1]_A")

    @classmethod
    def trusted(cls, element: Element) -> "Effect":
        """구성상 0 ≤ element ≤ 1 인 원소 (검증 생략)"""
        effect = object.__new__(cls)
        object.__setattr__(effect, "element", element)
        return effect

    @property
    def signature(self) -> AlgebraSignature:
        return self.element.signature

    @classmethod
    def truth(cls, signature: AlgebraSignature) -> "Effect":
        return cls.trusted(Element.unit(signature))

    @classmethod
    def falsity(cls, signature: AlgebraSignature) -> "Effect":
        return cls.trusted(Element.zero(signature))

    @classmethod
    def vector(cls, values) -> "Effect":
        """ℂⁿ 위의 퍼지 술어"""
        return cls(Element.vector(values))

    def complement(self) -> "Effect":
        """e⊥ = 1 − e"""
        return Effect.trusted(Element.unit(self.signature) - self.element)

    def is_orthogonal(self, other: "Effect") -> bool:
        """e ⊥ e′ ⟺ e + e′ ≤ 1"""
        return leq(self.element + other.element, Element.unit(self.signature))

    def orthosum(self, other: "Effect") -> "Effect":
        """e ⊞ e′ = e + e′ (e ⊥ e′ 일 때만 정의)"""
        if not self.is_orthogonal(other):
            raise NotEffectError("orthosum undefined: e + e' is not below the unit")
        return Effect.trusted(self.element + other.element)

    def scale(self, r: float) -> "Effect":
        """r·e (r ∈ [0,1])"""
        if not 0.0 <= r <= 1.0:
            raise NotEffectError(f"scalar {r} outside [0,1]")
        return Effect.trusted(self.element * r)

    def __repr__(self) -> str:
        return f"Effect({self.element!r})"
