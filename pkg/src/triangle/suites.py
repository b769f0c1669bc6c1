"""
검증 스위트
⋆_D 동치, 분포 모나드 법칙, 전치 사상 (양이지만 완전 양이 아님), 극점
"""
import numpy as np

from config.settings import settings
from src.algebra import AlgebraSignature, Element
from src.maps import (
    CompletePositivity,
    LinMap,
    Positivity,
    choi_matrix,
    classify_map,
    compose_maps,
    sample_positivity,
    transpose_map,
)
from src.linalg import herm_eig
from src.monads import (
    Dist,
    KleisliMap,
    Mixture,
    all_functions,
    dist_map,
    dist_mult,
    dist_to_state,
    dist_unit,
    enumerate_miu_states,
    from_pu,
    function_to_miu,
    kleisli_compose,
    miu_to_function,
    mixture_to_measure,
    state_to_dist,
    to_pu,
)
from src.states import FinMeasure, State, barycentre, dirac_state, is_extreme
from src.triangle.functors import StateTransformer
from src.triangle.report import SuiteReport
from src.utils.constants import Tolerances
from src.utils.errors import DimensionTooLargeError, InvalidDimensionError, NotMIUError
from src.utils.logger import log_execution_time, logger
from src.utils.sampling import random_dist, random_state, random_stochastic

# MIU ↔ 함수 전수 검사 최대 크기
EXHAUSTIVE_FUNCTION_SIZE = 4


def _size(rng: np.random.Generator, upper: int) -> int:
    return int(rng.integers(1, upper + 1))


def _random_mixture(n: int, k: int, rng: np.random.Generator) -> Mixture:
    return Mixture(random_dist(k, rng), tuple(random_dist(n, rng) for _ in range(k)))


@log_execution_time
def verify_equivalence(
    n: int,
    m: int,
    trials: int = settings.DEFAULT_TRIALS,
    seed: int = settings.DEFAULT_SEED,
) -> SuiteReport:
    """
    Kl_ℕ(D) ≅ (FdCCstar_PU)^op 검증

    - from_pu ∘ to_pu = id, to_pu ∘ from_pu = id (≤ 1e-12 잡음 포함)
    - 함자 법칙 to_pu(g ⊙ f) = to_pu(f) ∘ to_pu(g)
    - MIU ↔ 함수 전수 왕복, MStat(ℂᵏ) 개수 = k
    - Stat(ℂᵏ) ≅ D(k) 왕복과 분리성
    """
    if n < 1 or m < 1:
        raise InvalidDimensionError(f"sizes must be >= 1, got n={n}, m={m}")
    rng = np.random.default_rng(seed)
    tol = settings.REPORT_TOL
    report = SuiteReport(target="equivalence", params={"n": n, "m": m, "trials": trials, "seed": seed})

    residual = 0.0
    for _ in range(trials):
        f = random_stochastic(_size(rng, n), _size(rng, m), rng)
        residual = max(residual, from_pu(to_pu(f)).distance(f))
    report.add("from_pu_after_to_pu", residual, tol)

    residual = 0.0
    for _ in range(trials):
        h = to_pu(random_stochastic(_size(rng, n), _size(rng, m), rng))
        noise = rng.uniform(-1e-12, 1e-12, h.coeffs.shape)
        h = LinMap(h.dom, h.cod, h.coeffs + noise)
        residual = max(residual, to_pu(from_pu(h)).distance(h))
    report.add("to_pu_after_from_pu", residual, tol)

    residual = 0.0
    for _ in range(trials):
        sizes = _size(rng, n), _size(rng, m), _size(rng, max(n, m))
        f = random_stochastic(sizes[0], sizes[1], rng)
        g = random_stochastic(sizes[1], sizes[2], rng)
        lhs = to_pu(kleisli_compose(g, f))
        rhs = compose_maps(to_pu(f), to_pu(g))
        residual = max(residual, lhs.distance(rhs))
    report.add("functor_law", residual, tol)

    failures = 0
    for dom_size in range(1, min(n, EXHAUSTIVE_FUNCTION_SIZE) + 1):
        for cod_size in range(1, min(m, EXHAUSTIVE_FUNCTION_SIZE) + 1):
            for fn in all_functions(dom_size, cod_size):
                if miu_to_function(function_to_miu(fn)).table != fn.table:
                    failures += 1
    report.add("miu_function_round_trip", failures, 0.0)

    accepted = 0
    if m >= 2:
        for _ in range(trials):
            try:
                miu_to_function(to_pu(random_stochastic(_size(rng, n), m, rng)))
                accepted += 1
            except NotMIUError:
                pass
    report.add("non_deterministic_rejected", accepted, 0.0)

    largest = min(max(n, m), settings.MAX_MIU_ENUMERATION)
    mismatch = max(abs(len(enumerate_miu_states(k)) - k) for k in range(1, largest + 1))
    report.add("miu_state_count", mismatch, 0.0)

    residual, unseparated = 0.0, 0
    for _ in range(trials):
        k = _size(rng, max(n, m))
        d, e = random_dist(k, rng), random_dist(k, rng)
        residual = max(residual, state_to_dist(dist_to_state(d)).distance(d))
        if d.distance(e) > Tolerances.TAU_SEPARATION:
            sigma, tau = dist_to_state(d), dist_to_state(e)
            signature = sigma.signature
            separation = max(
                abs(sigma(Element.matrix_unit(signature, i)) - tau(Element.matrix_unit(signature, i)))
                for i in range(k)
            )
            if separation <= Tolerances.TAU_SEPARATION:
                unseparated += 1
    report.add("dist_state_round_trip", residual, tol)
    report.add("dist_state_separation", unseparated, 0.0)

    logger.info(f"verify_equivalence n={n} m={m}: {'PASS' if report.passed else 'FAIL'}")
    return report


def flatten_mixture(weights: Dist, mixtures: list[Mixture]) -> Mixture:
    """μ_D: D(D(D(n))) → D(D(n)), 바깥 두 층을 합침"""
    outer, components = [], []
    for w, mixture in zip(weights.weights, mixtures):
        for v, component in zip(mixture.weights.weights, mixture.components):
            outer.append(w * v)
            components.append(component)
    return Mixture(Dist(outer), tuple(components))


@log_execution_time
def verify_monad_laws(
    n: int,
    trials: int = settings.DEFAULT_TRIALS,
    seed: int = settings.DEFAULT_SEED,
) -> SuiteReport:
    """
    분포 모나드와 무게중심 법칙

    μ∘η = id, μ∘D(η) = id, μ∘μ = μ∘D(μ), Kleisli 단위/결합,
    ε∘η = id (무게중심), μ(Φ) = 무게중심(τ(Φ))
    """
    if n < 1:
        raise InvalidDimensionError(f"n must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    law_tol = Tolerances.MONAD_LAW
    report = SuiteReport(target="monad-laws", params={"n": n, "trials": trials, "seed": seed})

    left, right, assoc = 0.0, 0.0, 0.0
    for _ in range(trials):
        d = random_dist(n, rng)
        left = max(left, dist_mult(Mixture.of([(1.0, d)])).distance(d))
        units = tuple(dist_unit(x, n) for x in range(n))
        right = max(right, dist_mult(Mixture(d, units)).distance(d))

        k = _size(rng, 3)
        weights = random_dist(k, rng)
        mixtures = [_random_mixture(n, _size(rng, 3), rng) for _ in range(k)]
        via_outer = dist_mult(flatten_mixture(weights, mixtures))
        via_inner = dist_mult(Mixture(weights, tuple(dist_mult(mx) for mx in mixtures)))
        assoc = max(assoc, via_outer.distance(via_inner))
    report.add("unit_left", left, law_tol)
    report.add("unit_right", right, law_tol)
    report.add("associativity", assoc, law_tol)

    functor = 0.0
    for _ in range(trials):
        m = _size(rng, n)
        f_table = rng.integers(0, m, n)
        g_table = rng.integers(0, n, m)
        d = random_dist(n, rng)
        composed = dist_map(lambda x: int(g_table[f_table[x]]), d, n)
        stepwise = dist_map(lambda y: int(g_table[y]), dist_map(lambda x: int(f_table[x]), d, m), n)
        functor = max(functor, composed.distance(stepwise))
    report.add("dist_map_functor", functor, law_tol)

    kl_left, kl_right, kl_assoc = 0.0, 0.0, 0.0
    for _ in range(trials):
        a, b, c = _size(rng, n), _size(rng, n), _size(rng, n)
        f = random_stochastic(n, a, rng)
        g = random_stochastic(a, b, rng)
        h = random_stochastic(b, c, rng)
        kl_left = max(kl_left, kleisli_compose(KleisliMap.identity(a), f).distance(f))
        kl_right = max(kl_right, kleisli_compose(f, KleisliMap.identity(n)).distance(f))
        lhs = kleisli_compose(h, kleisli_compose(g, f))
        rhs = kleisli_compose(kleisli_compose(h, g), f)
        kl_assoc = max(kl_assoc, lhs.distance(rhs))
    report.add("kleisli_unit_left", kl_left, law_tol)
    report.add("kleisli_unit_right", kl_right, law_tol)
    report.add("kleisli_associativity", kl_assoc, law_tol)

    bary_tol = 1e-2 * settings.REPORT_TOL
    unit_law, mult_law = 0.0, 0.0
    signatures = (AlgebraSignature.commutative(n), AlgebraSignature.matrix(2))
    for t in range(trials):
        sigma = random_state(signatures[t % 2], rng)
        unit_law = max(unit_law, barycentre(FinMeasure.dirac(sigma)).distance(sigma))
        phi = _random_mixture(n, _size(rng, 4), rng)
        expected = dist_to_state(dist_mult(phi))
        mult_law = max(mult_law, barycentre(mixture_to_measure(phi)).distance(expected))
    report.add("barycentre_unit", unit_law, bary_tol)
    report.add("multiplication_is_barycentre", mult_law, bary_tol)

    logger.info(f"verify_monad_laws n={n}: {'PASS' if report.passed else 'FAIL'}")
    return report


@log_execution_time
def verify_transpose_witness(
    n: int = 2,
    samples: int = None,
    seed: int = settings.DEFAULT_SEED,
    trials: int = settings.DEFAULT_TRIALS,
) -> SuiteReport:
    """
    전치 사상 Mₙ → Mₙ: 양이고 단위 보존이지만 완전 양이 아님

    Choi 행렬의 최소 고유값 −1, 표본 양성 위반 없음, Stat(전치)² = id
    """
    samples = samples or settings.POSITIVITY_SAMPLES
    t = transpose_map(n)
    report = SuiteReport(
        target="transpose-witness",
        params={"n": n, "samples": samples, "seed": seed, "trials": trials},
    )

    choi = choi_matrix(t)
    min_choi = float(herm_eig(0.5 * (choi + choi.conj().T)).eigenvalues[0])
    report.add("choi_min_eigenvalue", abs(min_choi + 1.0), 1e-9)

    verdict, min_eigenvalue = sample_positivity(t, samples, seed)
    violation = max(0.0, -min_eigenvalue) if verdict != Positivity.NO else abs(min_eigenvalue)
    report.add("positivity_sampling", violation, settings.REPORT_TOL)

    map_class = classify_map(t, samples=samples, seed=seed)
    report.add(
        "not_completely_positive",
        0.0 if map_class.completely_positive == CompletePositivity.NO else 1.0,
        0.0,
    )
    report.add("self_inverse", compose_maps(t, t).distance(LinMap.identity(t.dom)), Tolerances.MONAD_LAW)

    rng = np.random.default_rng(seed)
    involution = 0.0
    if map_class.is_pu:
        g = StateTransformer(t)
        for _ in range(trials):
            sigma = random_state(t.dom, rng)
            involution = max(involution, g(g(sigma)).distance(sigma))
    else:
        involution = float("inf")
    report.add("stat_squared_identity", involution, 1e-2 * settings.REPORT_TOL)

    report.params["choi_min_eigenvalue"] = min_choi
    logger.info(f"verify_transpose_witness n={n}: min Choi eigenvalue {min_choi:.6f}")
    return report


def verify_extremes(n: int, enumerate_miu: bool = True) -> tuple[list[State], SuiteReport]:
    """
    ℂⁿ 의 점질량 상태와 극점 판정, MIU 상태 개수 = n
    """
    if n < 1:
        raise InvalidDimensionError(f"n must be >= 1, got {n}")
    if enumerate_miu and n > settings.MAX_MIU_ENUMERATION:
        raise DimensionTooLargeError(
            f"MIU enumeration limited to n <= {settings.MAX_MIU_ENUMERATION}, got {n}"
        )
    report = SuiteReport(target="extremes", params={"n": n, "enumerate_miu": enumerate_miu})
    states = [dirac_state(i, n) for i in range(n)]
    report.add("dirac_states_extreme", sum(not is_extreme(s) for s in states), 0.0)

    if enumerate_miu:
        found = enumerate_miu_states(n)
        report.add("miu_state_count", abs(len(found) - n), 0.0)
        functionals = {tuple(np.round(h.coeffs.real.ravel()).astype(int)) for h in found}
        expected = {tuple(int(i == k) for i in range(n)) for k in range(n)}
        report.add("miu_states_are_dirac", len(functionals ^ expected), 0.0)
    return states, report
