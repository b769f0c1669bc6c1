"""
Kleisli 범주 Kl_ℕ(D)
사상 n → D(m) 은 n×m 행 확률 행렬, 합성 g ⊙ f = μ ∘ D(g) ∘ f
"""
import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from src.monads.distribution import Dist
from src.utils.errors import (
    IndexOutOfRangeError,
    InvalidDistributionError,
    NotStochasticError,
    ShapeMismatchError,
    SizeMismatchError,
)


@dataclass(frozen=True, eq=False)
class KleisliMap:
    """n → D(m) 확률 전이 행렬"""
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=float)
        if matrix.ndim != 2 or 0 in matrix.shape:
            raise NotStochasticError(f"expected a non-empty 2-D matrix, got shape {matrix.shape}")
        rows = []
        for i, row in enumerate(matrix):
            try:
                rows.append(Dist(row).weights)
            except InvalidDistributionError as e:
                raise NotStochasticError(f"row {i} is not a distribution: {e}")
        object.__setattr__(self, "matrix", np.vstack(rows))

    @classmethod
    def identity(cls, n: int) -> "KleisliMap":
        """η_n"""
        return cls(np.eye(n))

    @property
    def dom_size(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def cod_size(self) -> int:
        return int(self.matrix.shape[1])

    def row(self, i: int) -> Dist:
        return Dist(self.matrix[i])

    def push(self, d: Dist) -> Dist:
        """분포 전진 d·M (μ ∘ D(f))"""
        if d.size != self.dom_size:
            raise SizeMismatchError(f"dist over {d.size}, kernel domain {self.dom_size}")
        return Dist(d.weights @ self.matrix)

    def distance(self, other: "KleisliMap") -> float:
        if other.matrix.shape != self.matrix.shape:
            raise SizeMismatchError(f"{self.matrix.shape} vs {other.matrix.shape}")
        return float(np.max(np.abs(self.matrix - other.matrix)))


@dataclass(frozen=True)
class FunctionMap:
    """함수 f: n → m"""
    dom_size: int
    cod_size: int
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(t) for t in self.table)
        if len(table) != self.dom_size:
            raise SizeMismatchError(f"table has {len(table)} entries, domain size {self.dom_size}")
        for x, y in enumerate(table):
            if not 0 <= y < self.cod_size:
                raise IndexOutOfRangeError(f"f({x}) = {y} outside 0..{self.cod_size - 1}")
        object.__setattr__(self, "table", table)

    def __call__(self, x: int) -> int:
        return self.table[x]

    @classmethod
    def identity(cls, n: int) -> "FunctionMap":
        return cls(n, n, tuple(range(n)))

    def to_kleisli(self) -> KleisliMap:
        """η ∘ f"""
        matrix = np.zeros((self.dom_size, self.cod_size))
        matrix[np.arange(self.dom_size), list(self.table)] = 1.0
        return KleisliMap(matrix)

    def to_dict(self) -> dict:
        return {"dom_size": self.dom_size, "cod_size": self.cod_size, "table": list(self.table)}


def all_functions(n: int, m: int) -> Iterator[FunctionMap]:
    """n → m 인 모든 함수 (mⁿ 개)"""
    for table in itertools.product(range(m), repeat=n):
        yield FunctionMap(n, m, table)


def kleisli_compose(g: KleisliMap, f: KleisliMap) -> KleisliMap:
    """g ⊙ f = f·g (행렬 곱)"""
    if f.cod_size != g.dom_size:
        raise SizeMismatchError(f"f: {f.dom_size}->{f.cod_size}, g: {g.dom_size}->{g.cod_size}")
    return KleisliMap(f.matrix @ g.matrix)


def kleisli_power(f: KleisliMap, steps: int) -> KleisliMap:
    """f ⊙ ... ⊙ f (steps 번, 0이면 η)"""
    if steps < 0:
        raise SizeMismatchError(f"steps must be >= 0, got {steps}")
    if f.dom_size != f.cod_size:
        raise ShapeMismatchError(f"kernel is {f.dom_size}x{f.cod_size}, not square")
    result = KleisliMap.identity(f.dom_size)
    for _ in range(steps):
        result = kleisli_compose(f, result)
    return result
