"""
유한 분포 모나드 D
η(x) = 1x, μ(Φ)(x) = Σ_φ Φ(φ)·φ(x)
"""
from dataclasses import dataclass

import numpy as np

from src.utils.constants import Tolerances
from src.utils.errors import IndexOutOfRangeError, InvalidDistributionError, SizeMismatchError


@dataclass(frozen=True, eq=False)
class Dist:
    """유한 집합 n 위의 확률 분포 (밀집 실수 벡터)"""
    weights: np.ndarray

    def __post_init__(self):
        weights = np.array(self.weights, dtype=float).ravel()
        if weights.size == 0:
            raise InvalidDistributionError("distribution over the empty set")
        if not np.all(np.isfinite(weights)):
            raise InvalidDistributionError("non-finite weight")
        low, high = -Tolerances.DIST_CLAMP, 1.0 + Tolerances.DIST_CLAMP
        if np.any(weights < low) or np.any(weights > high):
            raise InvalidDistributionError(f"weight outside [0,1]: {weights.tolist()}")
        weights = np.clip(weights, 0.0, 1.0)
        total = float(weights.sum())
        if abs(total - 1.0) > Tolerances.DIST_SUM:
            raise InvalidDistributionError(f"weights sum to {total!r}")
        object.__setattr__(self, "weights", weights)

    @property
    def size(self) -> int:
        return int(self.weights.size)

    def __getitem__(self, index: int) -> float:
        return float(self.weights[index])

    def distance(self, other: "Dist") -> float:
        """∞-거리"""
        if other.size != self.size:
            raise SizeMismatchError(f"{self.size} vs {other.size}")
        return float(np.max(np.abs(self.weights - other.weights)))

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.weights > 0.0)]

    def to_dict(self) -> dict:
        return {"weights": self.weights.tolist()}

    def __repr__(self) -> str:
        return f"Dist({np.round(self.weights, 6).tolist()})"


@dataclass(frozen=True, eq=False)
class Mixture:
    """분포 위의 분포 Φ ∈ D(D(n)) - components[k] 에 가중치 weights[k]"""
    weights: Dist
    components: tuple[Dist, ...]

    def __post_init__(self):
        components = tuple(self.components)
        if len(components) != self.weights.size:
            raise SizeMismatchError(
                f"{self.weights.size} weights for {len(components)} components"
            )
        sizes = {c.size for c in components}
        if len(sizes) != 1:
            raise SizeMismatchError(f"inner distributions have sizes {sorted(sizes)}")
        object.__setattr__(self, "components", components)

    @classmethod
    def of(cls, pairs: list[tuple[float, Dist]]) -> "Mixture":
        return cls(Dist([w for w, _ in pairs]), tuple(d for _, d in pairs))

    @property
    def size(self) -> int:
        """안쪽 분포의 크기 n"""
        return self.components[0].size


def dist_unit(x: int, n: int) -> Dist:
    """η(x) = 점질량"""
    if not 0 <= x < n:
        raise IndexOutOfRangeError(f"index {x} outside 0..{n - 1}")
    weights = np.zeros(n)
    weights[x] = 1.0
    return Dist(weights)


def dist_mult(phi: Mixture) -> Dist:
    """μ(Φ)(x) = Σ_φ Φ(φ)·φ(x)"""
    stacked = np.vstack([c.weights for c in phi.components])
    return Dist(phi.weights.weights @ stacked)


def dist_map(fn, d: Dist, m: int) -> Dist:
    """D(f): 함수 f: n → m 에 의한 push-forward"""
    weights = np.zeros(m)
    for x, w in enumerate(d.weights):
        target = fn(x)
        if not 0 <= target < m:
            raise IndexOutOfRangeError(f"f({x}) = {target} outside 0..{m - 1}")
        weights[target] += w
    return Dist(weights)
