"""
술어 함자와 상태 함자
Pred: Cstar_PU → EMod (효과로의 제한), Stat: (Cstar_PU)^op → 볼록 상태 공간 ((−) ∘ f)
"""
from dataclasses import dataclass

import numpy as np

from src.algebra import AlgebraSignature, Effect, Element
from src.maps import LinMap, apply_map, classify_map
from src.states import AffineData, State, spanning_states, xi_eval, xi_inverse
from src.utils.errors import NotEffectError, NotPUError, SignatureMismatchError


def _require_pu(f: LinMap, seed: int = 0) -> None:
    map_class = classify_map(f, seed=seed)
    if not map_class.is_pu:
        raise NotPUError(f"unital={map_class.unital}, positive={map_class.positive.value}")


@dataclass(frozen=True, eq=False)
class PredicateTransformer:
    """[0,1]_A → [0,1]_B, e ↦ f(e) (Heisenberg 방향)"""
    f: LinMap

    def __call__(self, effect) -> Effect:
        if isinstance(effect, Element):
            effect = Effect(effect)
        if not isinstance(effect, Effect):
            raise NotEffectError(f"expected an effect, got {type(effect).__name__}")
        if effect.signature != self.f.dom:
            raise SignatureMismatchError(
                f"effect on {effect.signature.to_list()}, map domain {self.f.dom.to_list()}"
            )
        return Effect(apply_map(self.f, effect.element))


@dataclass(frozen=True, eq=False)
class StateTransformer:
    """Stat(B) → Stat(A), σ ↦ σ ∘ f (Schrödinger 방향)"""
    f: LinMap

    def __call__(self, state: State) -> State:
        if state.signature != self.f.cod:
            raise SignatureMismatchError(
                f"state on {state.signature.to_list()}, map codomain {self.f.cod.to_list()}"
            )
        # (σ ∘ f)(a) = w_B · (C a) = (Cᵀ w_B) · a
        return State.from_functional(self.f.dom, self.f.coeffs.T @ state.functional())


def pred_of_map(f: LinMap, seed: int = 0) -> PredicateTransformer:
    _require_pu(f, seed)
    return PredicateTransformer(f)


def stat_of_map(f: LinMap, seed: int = 0) -> StateTransformer:
    _require_pu(f, seed)
    return StateTransformer(f)


def reconstruct_map(g: StateTransformer, dom: AlgebraSignature, cod: AlgebraSignature) -> LinMap:
    """
    상태 사상 g 에서 PU 사상 복원: f = ξ_B⁻¹ ∘ A(g, ℂ) ∘ ξ_A

    dom 의 각 기저 원소 a 에 대해 σ ↦ ξ_A(a)(g(σ)) 를 B 의 spanning family 위에서 샘플링
    """
    pulled = [g(s) for s in spanning_states(cod)]
    columns = []
    for unit in Element.basis(dom):
        values = tuple(xi_eval(unit, state) for state in pulled)
        columns.append(xi_inverse(AffineData(cod, values)).to_coords())
    return LinMap(dom, cod, np.column_stack(columns))
