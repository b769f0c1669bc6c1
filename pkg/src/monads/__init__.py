"""
확률 모나드 모듈
분포 모나드 D, Kleisli 범주, ⋆_D 동치, MIU ↔ 함수
"""
from src.monads.distribution import Dist, Mixture, dist_unit, dist_mult, dist_map
from src.monads.kleisli import (
    KleisliMap,
    FunctionMap,
    all_functions,
    kleisli_compose,
    kleisli_power,
)
from src.monads.duality import (
    to_pu,
    from_pu,
    function_to_miu,
    miu_to_function,
    dist_to_state,
    state_to_dist,
    mixture_to_measure,
    boolean_functionals,
    enumerate_miu_states,
)

__all__ = [
    "Dist",
    "Mixture",
    "dist_unit",
    "dist_mult",
    "dist_map",
    "KleisliMap",
    "FunctionMap",
    "all_functions",
    "kleisli_compose",
    "kleisli_power",
    "to_pu",
    "from_pu",
    "function_to_miu",
    "miu_to_function",
    "dist_to_state",
    "state_to_dist",
    "mixture_to_measure",
    "boolean_functionals",
    "enumerate_miu_states",
]
