"""
상태와 효과 모듈
상태, 극점, 무게중심, 효과 모듈 준동형, Kadison 동형
"""
from src.states.state import (
    State,
    state_eval,
    dirac_state,
    vector_state,
    is_extreme,
    spanning_states,
    evaluation_matrix,
)
from src.states.barycentre import FinMeasure, barycentre
from src.states.emod import (
    EModReport,
    restriction,
    emod_check,
    extend_to_functional,
    extension_state,
    emod_to_state,
)
from src.states.kadison import (
    AffineObservable,
    AffineData,
    xi,
    xi_eval,
    affine_data,
    xi_inverse,
    zeta_eval,
    zeta_inverse,
    observable_is_positive,
)
from src.states.purity import find_subfunctional_witness, is_pure

__all__ = [
    "State",
    "state_eval",
    "dirac_state",
    "vector_state",
    "is_extreme",
    "spanning_states",
    "evaluation_matrix",
    "FinMeasure",
    "barycentre",
    "EModReport",
    "restriction",
    "emod_check",
    "extend_to_functional",
    "extension_state",
    "emod_to_state",
    "AffineObservable",
    "AffineData",
    "xi",
    "xi_eval",
    "affine_data",
    "xi_inverse",
    "zeta_eval",
    "zeta_inverse",
    "observable_is_positive",
    "find_subfunctional_witness",
    "is_pure",
]
