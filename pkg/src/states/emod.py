"""
효과 모듈 준동형 모듈
[0,1]_A → [0,1] 사상의 공리 검사와 PU 범함수(상태)로의 유일 확장
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from src.algebra import AlgebraSignature, Effect, Element, cstar_norm, four_positive_parts
from src.states.state import State, state_eval
from src.utils.constants import Limits, Tolerances
from src.utils.errors import GelfandError, NotEModHomError
from src.utils.logger import logger

EffectFunctional = Callable[[Effect], complex]


@dataclass
class EModReport:
    """효과 모듈 준동형 공리 검사 결과"""
    trials: int
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"trials": self.trials, "pass": self.passed, "violations": self.violations}


def restriction(state: State) -> EffectFunctional:
    """상태를 효과에 제한한 사상 e ↦ σ(e)"""
    return lambda effect: state_eval(state, effect.element)


def emod_check(
    effect_map: EffectFunctional,
    signature: AlgebraSignature,
    trials: int = 100,
    seed: int = 0,
) -> EModReport:
    """
    효과 모듈 준동형 공리 검사

    - E(1) = 1
    - e ⊥ e′ 이면 E(e ⊞ e′) = E(e) + E(e′)
    - E(r·e) = r·E(e)
    - E(e) ∈ [0,1]
    """
    from src.utils.sampling import random_effect

    rng = np.random.default_rng(seed)
    report = EModReport(trials=trials)

    def evaluate(effect: Effect) -> complex:
        try:
            return complex(effect_map(effect))
        except GelfandError as e:
            report.violations.append(f"evaluation failed: {e}")
            return complex("nan")

    top = evaluate(Effect.truth(signature))
    if not abs(top - 1.0) <= Tolerances.EMOD_UNIT:
        report.violations.append(f"unit: E(1) = {top}")

    for trial in range(trials):
        # e = ½r·a, e′ = ½s·b 이면 e + e′ ≤ 1
        a, b = random_effect(signature, rng), random_effect(signature, rng)
        r, s = rng.uniform(), rng.uniform()
        e, e_prime = a.scale(0.5 * r), b.scale(0.5 * s)
        value_e, value_e_prime = evaluate(e), evaluate(e_prime)
        value_sum = evaluate(e.orthosum(e_prime))
        if not abs(value_sum - (value_e + value_e_prime)) <= Tolerances.EMOD_ADDITIVE:
            report.violations.append(f"additivity (trial {trial}): {abs(value_sum - value_e - value_e_prime):.3e}")

        t = rng.uniform()
        value_a = evaluate(a)
        value_scaled = evaluate(a.scale(t))
        if not abs(value_scaled - t * value_a) <= Tolerances.EMOD_ADDITIVE:
            report.violations.append(f"scalar (trial {trial}): {abs(value_scaled - t * value_a):.3e}")

        if not (abs(value_a.imag) <= Tolerances.EMOD_ADDITIVE
                and -Tolerances.EMOD_UNIT <= value_a.real <= 1.0 + Tolerances.EMOD_UNIT):
            report.violations.append(f"range (trial {trial}): E(e) = {value_a}")

    if report.violations:
        logger.debug(f"emod_check: {len(report.violations)} violations on {signature}")
    return report


def _positive_pieces(x: Element) -> tuple[tuple[complex, Effect], ...]:
    """
    x = Σ cₖ·eₖ (eₖ ∈ [0,1]_A)

    네 양의 부분 p 각각을 ‖p‖·(p/‖p‖) 로 정규화, 계수는 ±‖p‖, ±i‖p‖
    """
    a, b, c, d = four_positive_parts(x)
    pieces = []
    for coefficient, p in ((1.0, a), (-1.0, b), (1j, c), (-1j, d)):
        norm = cstar_norm(p)
        if norm > 0.0:
            # p ≥ 0, ‖p/‖p‖‖ = 1
            pieces.append((coefficient * norm, Effect.trusted(p * (1.0 / norm))))
    return tuple(pieces)


@lru_cache(maxsize=32)
def _basis_pieces(signature: AlgebraSignature) -> tuple[tuple[tuple[complex, Effect], ...], ...]:
    """행렬 단위 기저의 분해 (시그니처마다 한 번)"""
    return tuple(_positive_pieces(unit) for unit in Element.basis(signature))


def _extend(effect_map: EffectFunctional, pieces) -> complex:
    return sum((weight * complex(effect_map(effect)) for weight, effect in pieces), 0j)


def extend_to_functional(effect_map: EffectFunctional, x: Element) -> complex:
    """
    효과 위의 사상을 A 전체로 선형 확장

    양의 원소 p 에 대해 f(p) = ‖p‖·E(p/‖p‖), 일반 원소는 네 양의 원소로 분해
    """
    return _extend(effect_map, _positive_pieces(x))


def extension_state(effect_map: EffectFunctional, signature: AlgebraSignature) -> State:
    """
    E 의 선형 확장을 밀도 행렬로 조립 (공리 검사 없음)

    E 가 준동형임이 알려진 경우 (예: 상태의 제한) emod_to_state 대신 사용
    """
    weights = np.array(
        [_extend(effect_map, pieces) for pieces in _basis_pieces(signature)],
        dtype=np.complex128,
    )
    try:
        return State.from_functional(signature, weights)
    except GelfandError as e:
        raise NotEModHomError(f"extension is not a state: {e}")


def emod_to_state(
    effect_map: EffectFunctional,
    signature: AlgebraSignature,
    trials: int = Limits.EMOD_CHECK_TRIALS,
    seed: int = 0,
) -> State:
    """
    효과 모듈 준동형 E 를 확장한 유일한 상태

    공리 검사 후 행렬 단위 기저 위에서 확장을 평가하여 밀도 행렬을 조립
    """
    from src.utils.sampling import random_effect

    report = emod_check(effect_map, signature, trials=trials, seed=seed)
    if not report.passed:
        raise NotEModHomError("; ".join(report.violations[:3]))

    state = extension_state(effect_map, signature)

    rng = np.random.default_rng(seed + 1)
    for _ in range(trials):
        effect = random_effect(signature, rng)
        if abs(state_eval(state, effect.element) - complex(effect_map(effect))) > Tolerances.EMOD_ADDITIVE:
            raise NotEModHomError("restriction of the extension disagrees with E")
    return state
