"""
확률적 쌍대성 모듈
⋆_D: Kl_ℕ(D) ≅ (FdCCstar_PU)^op, MIU 사상 ↔ 함수, Stat(ℂⁿ) ≅ D(n)
"""
import itertools

import numpy as np

from src.algebra import AlgebraSignature
from src.maps import LinMap, classify_map
from src.maps.classify import Positivity
from src.monads.distribution import Dist, Mixture
from src.monads.kleisli import FunctionMap, KleisliMap
from src.states import FinMeasure, State
from src.utils.constants import Tolerances
from src.utils.errors import (
    NotCommutativeError,
    NotFunctionalError,
    NotMIUError,
    NotPUError,
    NotStochasticError,
)
from src.utils.logger import logger


def _require_commutative(f: LinMap) -> tuple[int, int]:
    if not (f.dom.is_commutative and f.cod.is_commutative):
        raise NotCommutativeError(f"map {f.dom} -> {f.cod} is not between commutative algebras")
    return f.cod.dim, f.dom.dim


def to_pu(f: KleisliMap) -> LinMap:
    """
    ⋆_D(f): ℂᵐ → ℂⁿ, v ↦ (i ↦ Σⱼ f(i)(j)·vⱼ)
    """
    return LinMap(
        AlgebraSignature.commutative(f.cod_size),
        AlgebraSignature.commutative(f.dom_size),
        f.matrix.astype(np.complex128),
    )


def from_pu(h: LinMap) -> KleisliMap:
    """
    PU 사상 ℂᵐ → ℂⁿ 에서 확률 행렬 Mᵢⱼ = h(eⱼ)ᵢ 추출

    허수부 > 1e-8 또는 [0,1] 밖 1e-8 초과 항목은 NotStochastic
    """
    n, m = _require_commutative(h)
    map_class = classify_map(h)
    if not map_class.unital:
        raise NotPUError("map is not unital")
    if map_class.positive != Positivity.YES:
        raise NotPUError(f"positivity check: {map_class.positive.value}")

    coeffs = h.coeffs
    if np.max(np.abs(coeffs.imag)) > Tolerances.EXTRACTION:
        raise NotStochasticError("extracted entries have imaginary parts")
    matrix = coeffs.real
    if np.any(matrix < -Tolerances.EXTRACTION) or np.any(matrix > 1.0 + Tolerances.EXTRACTION):
        raise NotStochasticError("extracted entries outside [0,1]")
    matrix = np.clip(matrix, 0.0, 1.0)
    sums = matrix.sum(axis=1)
    if np.any(np.abs(sums - 1.0) > Tolerances.EXTRACTION):
        raise NotStochasticError(f"row sums deviate from 1: {sums.tolist()}")
    return KleisliMap(matrix / sums[:, None])


def function_to_miu(f: FunctionMap) -> LinMap:
    """ℓ∞(f) = (−) ∘ f : ℂᵐ → ℂⁿ"""
    return to_pu(f.to_kleisli())


def miu_to_function(h: LinMap) -> FunctionMap:
    """
    MIU 사상의 Boolean 행렬에서 함수 추출

    r_{ij}² = r_{ij} 이므로 각 행에 정확히 하나의 1
    """
    n, m = _require_commutative(h)
    map_class = classify_map(h)
    if not map_class.is_miu:
        failed = [
            name for name, ok in (
                ("multiplicative", map_class.multiplicative),
                ("involutive", map_class.involutive),
                ("unital", map_class.unital),
            ) if not ok
        ]
        raise NotMIUError(f"map is not {', '.join(failed)}")

    table = []
    for i, row in enumerate(h.coeffs):
        near_one = np.abs(row - 1.0) <= Tolerances.BOOLEAN
        near_zero = np.abs(row) <= Tolerances.BOOLEAN
        if not np.all(near_one | near_zero) or int(near_one.sum()) != 1:
            raise NotFunctionalError(f"row {i} is not a Boolean unit vector")
        table.append(int(np.flatnonzero(near_one)[0]))
    return FunctionMap(n, m, tuple(table))


def dist_to_state(d: Dist) -> State:
    """α⁻¹(φ)(v) = Σᵢ φ(i)·v(i)"""
    signature = AlgebraSignature.commutative(d.size)
    return State(signature, tuple(np.array([[w]], dtype=np.complex128) for w in d.weights))


def state_to_dist(state: State) -> Dist:
    """α(h) = λi. h(|i⟩)"""
    if not state.signature.is_commutative:
        raise NotCommutativeError(f"state lives on {state.signature}")
    return Dist(state.weights())


def mixture_to_measure(phi: Mixture) -> FinMeasure:
    """τ 를 안쪽 분포에 적용한 유한 측도"""
    return FinMeasure(tuple(
        (float(w), dist_to_state(component))
        for w, component in zip(phi.weights.weights, phi.components)
    ))


def boolean_functionals(n: int):
    """ℂⁿ → ℂ 인 모든 0/1 계수 범함수 (2ⁿ 개)"""
    dom, cod = AlgebraSignature.commutative(n), AlgebraSignature.commutative(1)
    for row in itertools.product((0.0, 1.0), repeat=n):
        yield LinMap(dom, cod, np.array([row], dtype=np.complex128))


def enumerate_miu_states(n: int) -> list[LinMap]:
    """후보 Boolean 범함수 중 MIU 인 것 (MStat(ℂⁿ))"""
    found = [h for h in boolean_functionals(n) if classify_map(h).is_miu]
    logger.debug(f"enumerate_miu_states({n}): {len(found)} of {2 ** n} candidates")
    return found
