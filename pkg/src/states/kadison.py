"""
Kadison 동형 모듈
ξ: A → Aff(Stat(A), ℂ), ξ(a)(φ) = φ(a) 와 자기수반 부분의 실수 버전 ζ
아핀 함수는 spanning_states 위의 값 목록으로 표현
"""
from dataclasses import dataclass, field

import numpy as np

from src.algebra import AlgebraSignature, Element, is_self_adjoint
from src.states.state import State, evaluation_matrix, spanning_states, state_eval
from src.utils.constants import Limits, Tolerances
from src.utils.errors import (
    InconsistentAffineDataError,
    NotSelfAdjointError,
    SignatureMismatchError,
    SingularSystemError,
)


@dataclass(frozen=True, eq=False)
class AffineObservable:
    """원소 a 를 아핀 함수 φ ↦ φ(a) 로 해석"""
    element: Element

    def __call__(self, state: State) -> complex:
        return state_eval(state, self.element)

    @property
    def signature(self) -> AlgebraSignature:
        return self.element.signature

    def sample(self, states: list[State]) -> tuple[complex, ...]:
        return tuple(self(s) for s in states)


@dataclass(frozen=True)
class AffineData:
    """
    아핀 함수의 유한 표현

    values: spanning_states(signature) 순서대로의 값
    extra_points: 추가 (상태, 값) 쌍 - 일관성 검사에 사용
    """
    signature: AlgebraSignature
    values: tuple[complex, ...]
    extra_points: tuple[tuple[State, complex], ...] = field(default_factory=tuple)


def xi(a: Element) -> AffineObservable:
    """ξ(a)"""
    return AffineObservable(a)


def xi_eval(a: Element, state: State) -> complex:
    """ξ(a)(φ) = φ(a)"""
    return xi(a)(state)


def affine_data(a: Element, extra_states: list[State] = ()) -> AffineData:
    """ξ(a) 를 spanning family (와 추가 상태) 위에서 샘플링"""
    observable = xi(a)
    values = observable.sample(spanning_states(a.signature))
    extra = tuple(zip(extra_states, observable.sample(list(extra_states))))
    return AffineData(a.signature, values, extra)


def xi_inverse(data: AffineData) -> Element:
    """
    ⟨spanning states, element⟩ = values 를 풀어 원소 복원

    추가 점이 있으면 최소제곱으로 풀고 잔차 > 1e-7 이면 InconsistentAffineData
    """
    family = spanning_states(data.signature)
    if len(data.values) != len(family):
        raise InconsistentAffineDataError(
            f"expected {len(family)} values on the spanning family, got {len(data.values)}"
        )
    rows = [evaluation_matrix(family)]
    rhs = list(data.values)
    for state, value in data.extra_points:
        if state.signature != data.signature:
            raise SignatureMismatchError("extra point lives on a different algebra")
        rows.append(state.functional()[None, :])
        rhs.append(value)
    system = np.vstack(rows)
    target = np.asarray(rhs, dtype=np.complex128)

    if np.linalg.matrix_rank(system) < data.signature.dim:
        raise SingularSystemError("evaluation functionals do not span the dual")
    coords, *_ = np.linalg.lstsq(system, target, rcond=None)
    residual = float(np.max(np.abs(system @ coords - target)))
    if residual > Tolerances.AFFINE_RESIDUAL:
        raise InconsistentAffineDataError(f"residual {residual:.3e}, data is not affine")
    return Element.from_coords(data.signature, coords)


def zeta_eval(a: Element, state: State) -> float:
    """ζ(a)(φ) = φ(a) (자기수반 a, 실수값)"""
    if not is_self_adjoint(a):
        raise NotSelfAdjointError("zeta is defined on the self-adjoint part")
    return float(state_eval(state, a).real)


def zeta_inverse(signature: AlgebraSignature, values) -> Element:
    """실수 아핀 데이터 → 자기수반 원소"""
    values = [complex(v) for v in values]
    if any(abs(v.imag) > Tolerances.AFFINE_RESIDUAL for v in values):
        raise InconsistentAffineDataError("zeta data must be real-valued")
    element = xi_inverse(AffineData(signature, tuple(v.real for v in values)))
    return (element + element.star()) * 0.5


def observable_is_positive(
    a: Element,
    random_states: int = Limits.CONE_RANDOM_STATES,
    seed: int = 0,
) -> bool:
    """ξ(a) 가 spanning family 와 행렬 블록 위 무작위 순수 상태에서 모두 ≥ 0 인지"""
    from src.utils.sampling import random_pure_state

    rng = np.random.default_rng(seed)
    observable = xi(a)
    states = spanning_states(a.signature)
    # ℂ¹ 블록은 spanning family 의 점질량이 이미 포함
    matrix_blocks = [i for i, n in enumerate(a.signature.blocks) if n > 1]
    if matrix_blocks:
        states += [random_pure_state(a.signature, rng, matrix_blocks) for _ in range(random_states)]
    for value in observable.sample(states):
        if value.real < -Tolerances.CONE or abs(value.imag) > Tolerances.CONE:
            return False
    return True
