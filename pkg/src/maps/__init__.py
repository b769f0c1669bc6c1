"""
C*-대수 사이의 선형 사상
"""
from src.maps.linmap import LinMap, apply_map, compose_maps, transpose_map, kraus_map
from src.maps.classify import (
    Positivity,
    CompletePositivity,
    MapClass,
    classify_map,
    sample_positivity,
    choi_matrix,
    is_completely_positive,
    NormBoundReport,
    pu_norm_bound_check,
)

__all__ = [
    "LinMap",
    "apply_map",
    "compose_maps",
    "transpose_map",
    "kraus_map",
    "Positivity",
    "CompletePositivity",
    "MapClass",
    "classify_map",
    "sample_positivity",
    "choi_matrix",
    "is_completely_positive",
    "NormBoundReport",
    "pu_norm_bound_check",
]
