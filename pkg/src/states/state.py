"""
상태 모듈
상태를 블록 밀도 행렬 ρᵢ ⪰ 0, Σ tr ρᵢ = 1 로 표현 (φ(a) = Σᵢ tr(ρᵢ aᵢ))
"""
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from src.algebra import AlgebraSignature, Element
from src.linalg import as_matrix, herm_eig, is_hermitian, is_psd
from src.utils.constants import Tolerances
from src.utils.errors import (
    IndexOutOfRangeError,
    InvalidStateError,
    SignatureMismatchError,
)


@dataclass(frozen=True, eq=False)
class State:
    """PU 범함수 A → ℂ"""
    signature: AlgebraSignature
    densities: tuple[np.ndarray, ...]

    def __post_init__(self):
        densities = tuple(as_matrix(d) for d in self.densities)
        if len(densities) != len(self.signature.blocks):
            raise InvalidStateError(
                f"{len(densities)} densities for signature {self.signature.to_list()}"
            )
        total = 0.0
        for rho, n in zip(densities, self.signature.blocks):
            if rho.shape != (n, n):
                raise InvalidStateError(f"density shape {rho.shape} does not match block {n}")
            if not is_hermitian(rho):
                raise InvalidStateError("density is not Hermitian")
            if not is_psd(rho, Tolerances.POSITIVITY):
                raise InvalidStateError("density is not positive semidefinite")
            total += float(np.trace(rho).real)
        if abs(total - 1.0) > Tolerances.STATE_TRACE:
            raise InvalidStateError(f"total trace {total!r} differs from 1")
        object.__setattr__(self, "densities", densities)

    @classmethod
    def from_functional(cls, signature: AlgebraSignature, weights) -> "State":
        """
        φ(x) = w · coords(x) 인 범함수 벡터 w 에서 밀도 복원

        w 블록을 행 우선으로 펼친 뒤 전치 (tr(ρ x) = Σ ρ_ji x_ij)
        """
        weights = np.asarray(weights, dtype=np.complex128)
        densities = []
        for offset, n in zip(signature.offsets(), signature.blocks):
            block = weights[offset:offset + n * n].reshape(n, n).T
            densities.append(0.5 * (block + block.conj().T))
        return cls(signature, tuple(densities))

    def functional(self) -> np.ndarray:
        """범함수 벡터 w (φ(x) = w · coords(x))"""
        return np.concatenate([rho.T.ravel() for rho in self.densities])

    def __call__(self, x: Element) -> complex:
        return state_eval(self, x)

    def mix(self, other: "State", alpha: float) -> "State":
        """α·self + (1−α)·other"""
        if other.signature != self.signature:
            raise SignatureMismatchError("cannot mix states on different algebras")
        return State(
            self.signature,
            tuple(alpha * a + (1.0 - alpha) * b for a, b in zip(self.densities, other.densities)),
        )

    def distance(self, other: "State") -> float:
        """밀도 행렬 최대 절댓값 차이"""
        if other.signature != self.signature:
            raise SignatureMismatchError("states live on different algebras")
        return max(float(np.max(np.abs(a - b))) for a, b in zip(self.densities, other.densities))

    def weights(self) -> np.ndarray:
        """가환 대수에서의 좌표 확률"""
        return np.array([rho[0, 0].real for rho in self.densities])

    def __repr__(self) -> str:
        if self.signature.is_commutative:
            return f"State({np.round(self.weights(), 6).tolist()})"
        return f"State({self.signature}, {[np.round(d, 6).tolist() for d in self.densities]})"


def state_eval(state: State, x: Element) -> complex:
    """Σᵢ tr(ρᵢ xᵢ)"""
    if x.signature != state.signature:
        raise SignatureMismatchError(
            f"state on {state.signature.to_list()}, element in {x.signature.to_list()}"
        )
    return complex(sum(np.trace(rho @ block) for rho, block in zip(state.densities, x.blocks)))


def dirac_state(i: int, n: int) -> State:
    """ℂⁿ 의 좌표 i 평가 상태 v ↦ vᵢ"""
    if not 0 <= i < n:
        raise IndexOutOfRangeError(f"index {i} outside 0..{n - 1}")
    signature = AlgebraSignature.commutative(n)
    return State(
        signature,
        tuple(np.array([[1.0 if k == i else 0.0]], dtype=np.complex128) for k in range(n)),
    )


def vector_state(signature: AlgebraSignature, block: int, vector: Iterable[complex]) -> State:
    """블록 하나에 집중된 순수 상태 |v⟩⟨v| (v 정규화)"""
    v = np.asarray(list(vector), dtype=np.complex128)
    v = v / np.linalg.norm(v)
    densities = [np.zeros((n, n), dtype=np.complex128) for n in signature.blocks]
    densities[block] = np.outer(v, v.conj())
    return State(signature, tuple(densities))


def is_extreme(state: State) -> bool:
    """
    극점(순수 상태) 판정

    가환: 점질량 여부. 행렬 블록: 하나의 블록만 trace ≠ 0 이고 그 밀도가 rank-one
    """
    if state.signature.is_commutative:
        return bool(np.max(state.weights()) > 1.0 - Tolerances.EXTREME)

    supported = [rho for rho in state.densities if float(np.trace(rho).real) > Tolerances.EXTREME]
    if len(supported) != 1:
        return False
    rho = supported[0]
    eigenvalues = herm_eig(0.5 * (rho + rho.conj().T)).eigenvalues
    return eigenvalues.size < 2 or bool(eigenvalues[-2] <= Tolerances.EXTREME)


def spanning_states(signature: AlgebraSignature) -> list[State]:
    """
    평가 범함수가 선형 독립인 dim(A)개의 상태

    블록별: 대각 |i⟩⟨i|, 그리고 i<j 마다 ½(|i⟩+|j⟩)(⟨i|+⟨j|), ½(|i⟩+i|j⟩)(⟨i|−i⟨j|)
    """
    states = []
    for block, n in enumerate(signature.blocks):
        for i in range(n):
            v = np.zeros(n, dtype=np.complex128)
            v[i] = 1.0
            states.append(vector_state(signature, block, v))
        for i in range(n):
            for j in range(i + 1, n):
                real = np.zeros(n, dtype=np.complex128)
                real[i], real[j] = 1.0, 1.0
                imag = np.zeros(n, dtype=np.complex128)
                imag[i], imag[j] = 1.0, 1j
                states.append(vector_state(signature, block, real))
                states.append(vector_state(signature, block, imag))
    return states


def evaluation_matrix(states: list[State]) -> np.ndarray:
    """행 k = k번째 상태의 범함수 벡터"""
    return np.vstack([s.functional() for s in states])
