"""
순수 상태 정의 기반 검사
φ 가 순수 ⟺ 모든 양의 범함수 ψ ≤ φ 가 φ 의 스칼라 배
"""
from typing import Optional

import numpy as np

from src.linalg import psd_sqrt
from src.states.state import State
from src.utils.constants import Tolerances


def _random_projector(n: int, rng: np.random.Generator) -> np.ndarray:
    rank = int(rng.integers(0, n + 1))
    if rank == 0:
        return np.zeros((n, n), dtype=np.complex128)
    z = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    q, _ = np.linalg.qr(z)
    return q @ q.conj().T


def find_subfunctional_witness(state: State, trials: int = 100, seed: int = 0) -> Optional[tuple[np.ndarray, ...]]:
    """
    ψ = ρ^{1/2} P ρ^{1/2} (P 블록별 무작위 사영) 후보 중 φ 에 비례하지 않는 것을 탐색

    ρ − ψ = ρ^{1/2}(1 − P)ρ^{1/2} ⪰ 0 이므로 항상 ψ ≤ φ

    Returns:
        비례하지 않는 ψ 의 밀도 (없으면 None)
    """
    rng = np.random.default_rng(seed)
    roots = [psd_sqrt(0.5 * (rho + rho.conj().T)) for rho in state.densities]
    for _ in range(trials):
        candidate = tuple(
            r @ _random_projector(r.shape[0], rng) @ r for r in roots
        )
        alpha = sum(float(np.trace(c).real) for c in candidate)
        deviation = max(
            float(np.max(np.abs(c - alpha * rho))) for c, rho in zip(candidate, state.densities)
        )
        if deviation > Tolerances.EXTREME:
            return candidate
    return None


def is_pure(state: State, trials: int = 100, seed: int = 0) -> bool:
    """정의에 따른 (표본) 순수성 판정"""
    return find_subfunctional_witness(state, trials, seed) is None
