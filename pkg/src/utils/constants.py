"""
공통 상수
허용 오차와 크기 제한을 한 곳에서 관리
"""


# ============================================================
# 수치 허용 오차
# ============================================================
class Tolerances:
    """내부 허용 오차 (GELFAND_TOL로 변경되지 않음)"""
    # 양의 준정부호 판정 (고유값 절대 기준)
    POSITIVITY = 1e-9
    # 에르미트 판정 (‖H − H*‖_F ≤ tol·(1+‖H‖_F))
    HERMITIAN = 1e-9
    # Jacobi 수렴 (비대각 Frobenius 노름 상대 기준)
    JACOBI = 1e-12
    JACOBI_MAX_SWEEPS = 100
    # psd_sqrt 잔차
    SQRT_RESIDUAL = 1e-8

    # 사상 분류 (노름 기준)
    CLASSIFY = 1e-8

    # 분포 생성 시 클램핑 창 / 추출 시 검증 창
    DIST_CLAMP = 1e-12
    DIST_SUM = 1e-9
    EXTRACTION = 1e-8
    # MIU 행렬의 {0,1} 판정
    BOOLEAN = 1e-6

    # 상태 밀도 행렬 trace 합
    STATE_TRACE = 1e-9
    # 극점 판정 (점질량 / 두 번째 고유값)
    EXTREME = 1e-8

    # EMod 준동형 공리
    EMOD_ADDITIVE = 1e-8
    EMOD_UNIT = 1e-9

    # Kadison 역변환 잔차
    AFFINE_RESIDUAL = 1e-7
    # ξ 쪽 양수 판정
    CONE = 1e-8

    # 모나드 법칙 (분포 연산은 정확해야 함)
    MONAD_LAW = 1e-12
    # 서로 다른 사상 판정 / 상태 사상 분리 기준
    DISTINCT_MAPS = 1e-6
    SEPARATION = 1e-8
    # Stat(ℂⁿ) → D(n) 단사성 (기저 벡터 위 분리)
    TAU_SEPARATION = 1e-7


# ============================================================
# 기본 크기 / 샘플 수
# ============================================================
class Limits:
    """크기 제한"""
    # core_linalg 대상 크기
    MAX_MATRIX_SIZE = 64
    # emod_to_state 내부 공리 검사 횟수
    EMOD_CHECK_TRIALS = 20
    # ξ 쪽 양수 판정 시 무작위 순수 상태 수
    CONE_RANDOM_STATES = 200
    # 삼각형 검증에서 공리를 검사할 무작위 제한 수
    TRIANGLE_EMOD_TRIALS = 5
