"""
state-and-effect 삼각형 검증
EMod([0,1]_A, [0,1]) ≅ Stat(A), A(Stat(A), [0,1]) ≅ [0,1]_A, Stat 의 full & faithful
"""
import numpy as np

from config.settings import settings
from src.algebra import AlgebraSignature
from src.monads import dist_to_state, state_to_dist
from src.states import (
    affine_data,
    emod_check,
    extension_state,
    restriction,
    spanning_states,
    state_eval,
    xi_inverse,
)
from src.triangle.functors import StateTransformer, reconstruct_map
from src.triangle.report import SuiteReport, TriangleReport
from src.utils.constants import Limits, Tolerances
from src.utils.errors import DimensionTooLargeError
from src.utils.logger import log_execution_time, logger
from src.utils.sampling import random_dist, random_effect, random_pu_map, random_state


def triangle_tolerance(signature: AlgebraSignature) -> float:
    """가환 대수는 REPORT_TOL, 행렬 블록이 있으면 10배"""
    if signature.is_commutative:
        return settings.REPORT_TOL
    return 10.0 * settings.REPORT_TOL


@log_execution_time
def verify_triangle(
    signature: AlgebraSignature,
    trials: int = settings.DEFAULT_TRIALS,
    seed: int = settings.DEFAULT_SEED,
) -> TriangleReport:
    """
    삼각형 두 방향의 왕복 잔차 검증

    0. 무작위 상태의 제한이 효과 모듈 준동형 (공리 위반 수)
    1. emod_to_state ∘ restriction = id (무작위 상태)
    2. restriction ∘ emod_to_state = id (무작위 상태에서 만든 EMod 준동형)
    3. ξ 왕복 (무작위 효과, spanning family 위 아핀 데이터)
    4. ℂⁿ 이면 EMod([0,1]ⁿ, [0,1]) ≅ D(n)

    1, 2, 4 의 입력은 0 에서 검사한 제한이므로 확장만 조립
    """
    if signature.dim > settings.MAX_TRIANGLE_DIM:
        raise DimensionTooLargeError(
            f"dim {signature.dim} exceeds {settings.MAX_TRIANGLE_DIM}"
        )
    rng = np.random.default_rng(seed)
    tol = triangle_tolerance(signature)
    report = TriangleReport(algebra=signature)

    violations = 0
    for t in range(min(trials, Limits.TRIANGLE_EMOD_TRIALS)):
        effect_map = restriction(random_state(signature, rng))
        violations += len(emod_check(effect_map, signature, trials=Limits.EMOD_CHECK_TRIALS, seed=seed + t).violations)
    report.add("restriction_is_emod_hom", float(violations), 0.0)

    residual = 0.0
    for _ in range(trials):
        sigma = random_state(signature, rng)
        recovered = extension_state(restriction(sigma), signature)
        residual = max(residual, sigma.distance(recovered))
    report.add("emod_to_state_after_restriction", residual, tol)

    residual = 0.0
    for _ in range(trials):
        effect_map = restriction(random_state(signature, rng))
        extended = extension_state(effect_map, signature)
        effect = random_effect(signature, rng)
        residual = max(residual, abs(state_eval(extended, effect.element) - effect_map(effect)))
    report.add("restriction_after_emod_to_state", residual, tol)

    residual = 0.0
    for _ in range(trials):
        a = random_effect(signature, rng).element
        residual = max(residual, xi_inverse(affine_data(a)).distance(a))
    report.add("xi_round_trip", residual, tol)

    if signature.is_commutative:
        residual = 0.0
        for _ in range(trials):
            d = random_dist(signature.size, rng)
            recovered = state_to_dist(extension_state(restriction(dist_to_state(d)), signature))
            residual = max(residual, recovered.distance(d))
        report.add("emod_to_dist_round_trip", residual, tol)

    logger.info(
        f"verify_triangle {signature}: {'PASS' if report.passed else 'FAIL'} "
        f"(max residual {report.max_residual:.2e})"
    )
    return report


@log_execution_time
def verify_stat_full_faithful(
    dom: AlgebraSignature,
    cod: AlgebraSignature,
    trials: int = settings.DEFAULT_TRIALS,
    seed: int = settings.DEFAULT_SEED,
) -> SuiteReport:
    """
    Stat: (Cstar_PU)^op → 볼록 상태 공간 이 full & faithful 인지 검사

    faithful: 서로 다른 PU 사상 쌍이 어떤 spanning state 에서 다른 상태 사상을 유도
    full: g = stat_of_map(f) 에서 ξ_B⁻¹ ∘ A(g, ℂ) ∘ ξ_A 로 f 복원
    """
    for signature in (dom, cod):
        if signature.dim > settings.MAX_FULL_FAITHFUL_DIM:
            raise DimensionTooLargeError(
                f"dim {signature.dim} exceeds {settings.MAX_FULL_FAITHFUL_DIM}"
            )
    rng = np.random.default_rng(seed)
    family = spanning_states(cod)
    report = SuiteReport(
        target="stat-full-faithful",
        params={"dom": dom.to_list(), "cod": cod.to_list(), "trials": trials, "seed": seed},
    )

    unseparated, compared, residual = 0, 0, 0.0
    for _ in range(trials):
        f1, f2 = random_pu_map(dom, cod, rng), random_pu_map(dom, cod, rng)
        # random_pu_map 은 구성상 완전 양 + 단위 보존
        g1 = StateTransformer(f1)
        if f1.distance(f2) > Tolerances.DISTINCT_MAPS:
            compared += 1
            g2 = StateTransformer(f2)
            separation = max(g1(s).distance(g2(s)) for s in family)
            if separation <= Tolerances.SEPARATION:
                unseparated += 1
        residual = max(residual, reconstruct_map(g1, dom, cod).distance(f1))

    # ℂ¹ 정의역이면 PU 사상이 하나뿐이라 비교 쌍이 없음
    logger.debug(f"verify_stat_full_faithful {dom} -> {cod}: {compared} distinct pairs")
    report.add("faithfulness_unseparated_pairs", unseparated, 0.0)
    report.add("fullness_reconstruction", residual, 10.0 * settings.REPORT_TOL)
    return report
