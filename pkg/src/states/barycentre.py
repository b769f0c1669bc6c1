"""
유한 측도와 무게중심
유한 지지 측도 Σ wₖ δ_{σₖ} 의 무게중심 = Σ wₖ ρ⁽ᵏ⁾
"""
from dataclasses import dataclass

from src.states.state import State
from src.utils.constants import Tolerances
from src.utils.errors import InvalidDistributionError, SignatureMismatchError


@dataclass(frozen=True, eq=False)
class FinMeasure:
    """상태 공간 위의 유한 지지 확률 측도"""
    atoms: tuple[tuple[float, State], ...]

    def __post_init__(self):
        atoms = tuple((float(w), s) for w, s in self.atoms)
        if not atoms:
            raise InvalidDistributionError("measure needs at least one atom")
        signature = atoms[0][1].signature
        for weight, state in atoms:
            if state.signature != signature:
                raise SignatureMismatchError("atoms live on different algebras")
            if not -Tolerances.DIST_CLAMP <= weight <= 1.0 + Tolerances.DIST_CLAMP:
                raise InvalidDistributionError(f"atom weight {weight} outside [0,1]")
        total = sum(w for w, _ in atoms)
        if abs(total - 1.0) > Tolerances.DIST_SUM:
            raise InvalidDistributionError(f"atom weights sum to {total!r}")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def dirac(cls, state: State) -> "FinMeasure":
        """η(σ) = δ_σ"""
        return cls(((1.0, state),))

    @property
    def signature(self):
        return self.atoms[0][1].signature

    def mix(self, other: "FinMeasure", alpha: float) -> "FinMeasure":
        """α·self ⊕ (1−α)·other"""
        return FinMeasure(
            tuple((alpha * w, s) for w, s in self.atoms)
            + tuple(((1.0 - alpha) * w, s) for w, s in other.atoms)
        )

    def integrate(self, fn) -> complex:
        """∫ fn dμ = Σ wₖ fn(σₖ)"""
        return sum(w * fn(s) for w, s in self.atoms)


def barycentre(measure: FinMeasure) -> State:
    """모든 아핀 관측량 a 에 대해 φ(a) = Σ wₖ σₖ(a) 인 상태"""
    signature = measure.signature
    densities = []
    for block in range(len(signature.blocks)):
        densities.append(sum(w * s.densities[block] for w, s in measure.atoms))
    return State(signature, tuple(densities))
