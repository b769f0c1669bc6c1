"""
state-and-effect 삼각형 검증 모듈
"""
from src.triangle.report import CheckResult, TriangleReport, SuiteReport
from src.triangle.functors import (
    PredicateTransformer,
    StateTransformer,
    pred_of_map,
    stat_of_map,
    reconstruct_map,
)
from src.triangle.verify import verify_triangle, verify_stat_full_faithful, triangle_tolerance
from src.triangle.suites import (
    verify_equivalence,
    verify_monad_laws,
    verify_transpose_witness,
    verify_extremes,
    flatten_mixture,
)

__all__ = [
    "CheckResult",
    "TriangleReport",
    "SuiteReport",
    "PredicateTransformer",
    "StateTransformer",
    "pred_of_map",
    "stat_of_map",
    "reconstruct_map",
    "verify_triangle",
    "verify_stat_full_faithful",
    "triangle_tolerance",
    "verify_equivalence",
    "verify_monad_laws",
    "verify_transpose_witness",
    "verify_extremes",
    "flatten_mixture",
]
