"""
무작위 생성기
모든 함수는 numpy Generator 를 인자로 받음 (전역 난수 상태 없음)
"""
from typing import Optional

import numpy as np

from src.algebra import AlgebraSignature, Effect, Element
from src.maps.linmap import LinMap, kraus_map
from src.monads.distribution import Dist
from src.monads.kleisli import KleisliMap
from src.states.state import State, vector_state


def random_matrix(n: int, rng: np.random.Generator, m: int = None) -> np.ndarray:
    """실수부/허수부가 [−1,1] 균등인 복소 행렬"""
    m = n if m is None else m
    return rng.uniform(-1.0, 1.0, (n, m)) + 1j * rng.uniform(-1.0, 1.0, (n, m))


def random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    z = random_matrix(n, rng)
    return 0.5 * (z + z.conj().T)


def random_element(signature: AlgebraSignature, rng: np.random.Generator) -> Element:
    return Element(signature, tuple(random_matrix(n, rng) for n in signature.blocks))


def random_self_adjoint(signature: AlgebraSignature, rng: np.random.Generator) -> Element:
    return Element(signature, tuple(random_hermitian(n, rng) for n in signature.blocks))


def random_positive(signature: AlgebraSignature, rng: np.random.Generator) -> Element:
    """y*y"""
    y = random_element(signature, rng)
    return y.star() * y


def random_effect(signature: AlgebraSignature, rng: np.random.Generator) -> Effect:
    """p / (‖p‖ + u), u ∈ [0,1) 이면 0 ≤ e ≤ 1"""
    p = random_positive(signature, rng)
    norm = max(float(np.linalg.norm(b, 2)) for b in p.blocks)
    return Effect.trusted(p * (1.0 / (norm + rng.uniform(0.0, 1.0) + 1e-12)))


def random_dist(n: int, rng: np.random.Generator) -> Dist:
    weights = rng.exponential(1.0, n)
    return Dist(weights / weights.sum())


def random_stochastic(n: int, m: int, rng: np.random.Generator) -> KleisliMap:
    weights = rng.exponential(1.0, (n, m))
    return KleisliMap(weights / weights.sum(axis=1, keepdims=True))


def random_state(signature: AlgebraSignature, rng: np.random.Generator) -> State:
    """블록 가중치 × 무작위 밀도 행렬 (일반적으로 full-rank)"""
    block_weights = random_dist(len(signature.blocks), rng).weights
    densities = []
    for n, w in zip(signature.blocks, block_weights):
        z = random_matrix(n, rng)
        rho = z @ z.conj().T
        densities.append(w * rho / np.trace(rho).real)
    return State(signature, tuple(densities))


def random_pure_state(
    signature: AlgebraSignature,
    rng: np.random.Generator,
    blocks: Optional[list[int]] = None,
) -> State:
    """
    무작위 단위 벡터 |v⟩⟨v|

    블록은 blocks (기본: 전체) 중 블록 크기에 비례한 확률로 선택
    """
    candidates = list(range(len(signature.blocks))) if blocks is None else list(blocks)
    sizes = np.array([signature.blocks[b] for b in candidates], dtype=float)
    block = candidates[int(rng.choice(len(candidates), p=sizes / sizes.sum()))]
    n = signature.blocks[block]
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return vector_state(signature, block, v)


def random_pu_map(
    dom: AlgebraSignature,
    cod: AlgebraSignature,
    rng: np.random.Generator,
    kraus: int = 2,
) -> LinMap:
    """
    단위 보존 완전 양 사상 x ↦ pinch_cod(Σ V_k* x V_k), Σ V_k* V_k = 1

    쌓은 Kraus 연산자를 QR 분해한 등거리(isometry)에서 얻음
    """
    # 등거리 조건을 위해 행 수 ≥ 열 수
    kraus = max(kraus, -(-cod.size // dom.size))
    rows, cols = kraus * dom.size, cod.size
    stacked = random_matrix(rows, rng, cols)
    q, _ = np.linalg.qr(stacked)
    ops = [q[k * dom.size:(k + 1) * dom.size, :] for k in range(kraus)]
    return kraus_map(dom, cod, ops)
