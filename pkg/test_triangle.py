"""
술어/상태 함자와 state-and-effect 삼각형 검증 테스트
"""
import json
import sys
import time
from pathlib import Path

# 프로젝트 루트 설정
ROOT_DIR = Path(__file__).parent
sys.path.insert(0, str(ROOT_DIR))

import numpy as np
import pytest

from src.algebra import AlgebraSignature, Effect, Element
from src.maps import LinMap, apply_map, compose_maps, transpose_map
from src.monads import Dist, KleisliMap, dist_to_state, state_to_dist, to_pu
from src.states import State, state_eval
from src.triangle import (
    StateTransformer,
    SuiteReport,
    TriangleReport,
    pred_of_map,
    reconstruct_map,
    stat_of_map,
    triangle_tolerance,
    verify_equivalence,
    verify_extremes,
    verify_monad_laws,
    verify_stat_full_faithful,
    verify_transpose_witness,
    verify_triangle,
)
from src.utils.codec import dumps
from src.utils.errors import (
    DimensionTooLargeError,
    InvalidDimensionError,
    NotPUError,
    SignatureMismatchError,
)
from src.utils.sampling import random_dist, random_effect, random_element, random_pu_map, random_state, random_stochastic

C2 = AlgebraSignature.commutative(2)
M2 = AlgebraSignature.matrix(2)
MARKOV = KleisliMap(np.array([[0.5, 0.5], [0.0, 1.0]]))


def diagonal_measurement() -> LinMap:
    """M₂ → ℂ², x ↦ (x₀₀, x₁₁)"""
    return LinMap.from_function(M2, C2, lambda x: Element.vector(np.diag(x.blocks[0])))


# ============================================================
# 술어 함자
# ============================================================
def test_pred_of_identity():
    pred = pred_of_map(LinMap.identity(M2))
    effect = random_effect(M2, np.random.default_rng(0))
    assert pred(effect).element.distance(effect.element) == 0.0


def test_pred_of_markov_kernel():
    pred = pred_of_map(to_pu(MARKOV))
    assert np.allclose(pred(Effect.vector([1, 0])).element.values(), [0.5, 0.0])


def test_pred_preserves_complement():
    pred = pred_of_map(to_pu(MARKOV))
    e = Effect.vector([0.3, 0.9])
    assert pred(e.complement()).element.distance(pred(e).complement().element) <= 1e-12


def test_pred_rejects_non_pu():
    with pytest.raises(NotPUError):
        pred_of_map(LinMap(C2, C2, 2 * np.eye(2)))


def test_pred_rejects_wrong_signature():
    pred = pred_of_map(to_pu(MARKOV))
    with pytest.raises(SignatureMismatchError):
        pred(Effect.vector([1, 0, 0]))


# ============================================================
# 상태 함자
# ============================================================
def test_stat_of_identity():
    state = random_state(AlgebraSignature.of([1, 2]), np.random.default_rng(1))
    g = stat_of_map(LinMap.identity(state.signature))
    assert g(state).distance(state) <= 1e-12


def test_stat_is_forward_markov_evolution():
    rng = np.random.default_rng(2)
    for _ in range(10):
        kernel = random_stochastic(3, 4, rng)
        d = random_dist(3, rng)
        evolved = state_to_dist(stat_of_map(to_pu(kernel))(dist_to_state(d)))
        assert evolved.distance(kernel.push(d)) <= 1e-10


def test_stat_matches_precomposition():
    rng = np.random.default_rng(3)
    f = random_pu_map(M2, AlgebraSignature.of([1, 2]), rng)
    g = stat_of_map(f, seed=1)
    for _ in range(10):
        sigma = random_state(f.cod, rng)
        a = random_element(f.dom, rng)
        assert abs(state_eval(g(sigma), a) - state_eval(sigma, apply_map(f, a))) <= 1e-9


def test_stat_is_affine():
    rng = np.random.default_rng(4)
    g = StateTransformer(random_pu_map(M2, M2, rng))
    s, t = random_state(M2, rng), random_state(M2, rng)
    assert g(s.mix(t, 0.3)).distance(g(s).mix(g(t), 0.3)) <= 1e-10


def test_stat_rejects_wrong_state():
    g = stat_of_map(to_pu(MARKOV))
    with pytest.raises(SignatureMismatchError):
        g(dist_to_state(Dist([1, 0, 0])))


def test_functoriality():
    rng = np.random.default_rng(5)
    a, b, c = AlgebraSignature.of([1, 2]), M2, AlgebraSignature.commutative(3)
    f, g = random_pu_map(a, b, rng), random_pu_map(b, c, rng)
    composite = compose_maps(g, f)
    sigma = random_state(c, rng)
    lhs = StateTransformer(composite)(sigma)
    rhs = StateTransformer(f)(StateTransformer(g)(sigma))
    assert lhs.distance(rhs) <= 1e-9

    effect = random_effect(a, rng)
    pred_lhs = pred_of_map(composite)(effect)
    pred_rhs = pred_of_map(g)(pred_of_map(f)(effect))
    assert pred_lhs.element.distance(pred_rhs.element) <= 1e-9


def test_schrodinger_heisenberg_duality():
    rng = np.random.default_rng(6)
    for _ in range(20):
        kernel = random_stochastic(4, 3, rng)
        d = random_dist(4, rng)
        e = random_effect(AlgebraSignature.commutative(3), rng)
        forward = np.dot(kernel.push(d).weights, e.element.values())
        backward = np.dot(d.weights, apply_map(to_pu(kernel), e.element).values())
        assert abs(forward - backward) <= 1e-10


# ============================================================
# 복원 (fullness)
# ============================================================
def test_reconstruct_markov_map():
    f = to_pu(KleisliMap(np.array([[0.9, 0.1], [0.4, 0.6]])))
    assert reconstruct_map(StateTransformer(f), C2, C2).distance(f) <= 1e-9


def test_reconstruct_identity():
    f = LinMap.identity(AlgebraSignature.of([1, 2]))
    assert reconstruct_map(StateTransformer(f), f.dom, f.cod).distance(f) <= 1e-12


def test_reconstruct_measurement():
    f = diagonal_measurement()
    assert reconstruct_map(stat_of_map(f), M2, C2).distance(f) <= 1e-7


# ============================================================
# 삼각형 검증
# ============================================================
def test_triangle_on_scalars():
    report = verify_triangle(AlgebraSignature.commutative(1), trials=10, seed=0)
    assert report.passed
    assert report.max_residual <= 1e-14


def test_triangle_commutative():
    report = verify_triangle(AlgebraSignature.commutative(3), trials=50, seed=7)
    assert report.passed
    assert report.max_residual <= 1e-8
    assert "emod_to_dist_round_trip" in [c.name for c in report.checks]


def test_triangle_matrix_block():
    report = verify_triangle(M2, trials=50, seed=0)
    assert report.passed
    assert report.max_residual <= 1e-7
    assert "emod_to_dist_round_trip" not in [c.name for c in report.checks]


def test_triangle_mixed_signature():
    assert verify_triangle(AlgebraSignature.of([1, 2]), trials=20, seed=3).passed


def test_triangle_dimension_limit():
    with pytest.raises(DimensionTooLargeError):
        verify_triangle(AlgebraSignature.of([5, 5, 5]), trials=1)


def test_triangle_required_signatures_within_ten_seconds():
    started = time.perf_counter()
    for blocks in ([1], [1, 1], [1, 1, 1], [2], [1, 2], [2, 2]):
        report = verify_triangle(AlgebraSignature.of(blocks), trials=100, seed=0)
        assert report.passed, blocks
    assert time.perf_counter() - started < 10.0


def test_triangle_reports_emod_axioms_of_restrictions():
    report = verify_triangle(AlgebraSignature.of([1, 2]), trials=3, seed=0)
    names = [c.name for c in report.checks]
    assert names[0] == "restriction_is_emod_hom"
    assert report.checks[0].residual == 0.0


def test_triangle_tolerance():
    assert triangle_tolerance(M2) == pytest.approx(10 * triangle_tolerance(C2))


def test_triangle_report_json_shape():
    report = verify_triangle(C2, trials=5, seed=0)
    data = json.loads(dumps(report.to_dict()))
    assert data["algebra"] == [1, 1]
    assert data["pass"] is True
    assert set(data["checks"][0]) == {"name", "residual", "tolerance", "pass"}


def test_failed_check_fails_report():
    report = TriangleReport(algebra=C2)
    report.add("ok", 0.0, 1e-8)
    report.add("bad", 1.0, 1e-8)
    assert not report.passed
    assert [c.name for c in report.failed()] == ["bad"]


# ============================================================
# Stat full & faithful
# ============================================================
@pytest.mark.parametrize("dom,cod", [([1, 1], [1, 1]), ([2], [1, 1]), ([1, 2], [2])])
def test_stat_full_faithful(dom, cod):
    report = verify_stat_full_faithful(AlgebraSignature.of(dom), AlgebraSignature.of(cod), trials=10, seed=0)
    assert isinstance(report, SuiteReport)
    assert report.passed


def test_stat_full_faithful_dimension_limit():
    with pytest.raises(DimensionTooLargeError):
        verify_stat_full_faithful(AlgebraSignature.matrix(5), C2, trials=1)


# ============================================================
# 기타 스위트
# ============================================================
def test_transpose_witness():
    report = verify_transpose_witness(2, samples=200, seed=0, trials=20)
    assert report.passed
    assert report.params["choi_min_eigenvalue"] == pytest.approx(-1.0, abs=1e-9)


def test_transpose_witness_three():
    assert verify_transpose_witness(3, samples=100, seed=1, trials=10).passed


def test_transpose_stat_is_involution():
    t = transpose_map(2)
    g = StateTransformer(t)
    sigma = random_state(M2, np.random.default_rng(8))
    assert g(g(sigma)).distance(sigma) <= 1e-10


def test_equivalence_suite():
    report = verify_equivalence(4, 4, trials=50, seed=1)
    assert report.passed
    assert report.target == "equivalence"


def test_monad_laws_suite():
    report = verify_monad_laws(4, trials=30, seed=0)
    assert report.passed
    for check in report.checks:
        if check.name.startswith(("unit", "kleisli", "associativity")):
            assert check.residual <= 1e-12


@pytest.mark.parametrize("n", range(1, 9))
def test_extremes_suite(n):
    states, report = verify_extremes(n)
    assert len(states) == n
    assert report.passed
    counts = {c.name: c.residual for c in report.checks}
    assert counts["miu_state_count"] == 0
    assert counts["miu_states_are_dirac"] == 0


def test_extremes_without_enumeration():
    states, report = verify_extremes(20, enumerate_miu=False)
    assert len(states) == 20 and report.passed


def test_extremes_limits():
    with pytest.raises(DimensionTooLargeError):
        verify_extremes(9, enumerate_miu=True)
    with pytest.raises(InvalidDimensionError):
        verify_extremes(0)
