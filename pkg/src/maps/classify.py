"""
사상 분류 모듈
단위 보존, 대합 보존, 곱 보존(MIU), 양(PU), 완전 양(Choi 행렬) 판정
"""
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from config.settings import settings
from src.algebra import Element, cstar_norm, is_positive
from src.linalg import herm_eig, is_psd
from src.maps.linmap import LinMap, apply_map
from src.utils.constants import Tolerances
from src.utils.errors import DomainNotSingleBlockError, NotPUError
from src.utils.logger import logger


class Positivity(Enum):
    """양성 판정 결과"""
    YES = "yes"
    NO = "no"
    SAMPLED_YES = "sampled_yes"


class CompletePositivity(Enum):
    """완전 양성 판정 결과"""
    YES = "yes"
    NO = "no"
    NOT_COMPUTED = "not_computed"


@dataclass
class MapClass:
    """사상 분류 플래그"""
    unital: bool
    involutive: bool
    multiplicative: bool
    positive: Positivity
    completely_positive: CompletePositivity

    @property
    def is_miu(self) -> bool:
        return self.multiplicative and self.involutive and self.unital

    @property
    def is_pu(self) -> bool:
        return self.unital and self.positive != Positivity.NO

    @property
    def is_exact_pu(self) -> bool:
        return self.unital and self.positive == Positivity.YES

    def to_dict(self) -> dict:
        return {
            "unital": self.unital,
            "involutive": self.involutive,
            "multiplicative": self.multiplicative,
            "positive": self.positive.value,
            "completely_positive": self.completely_positive.value,
            "miu": self.is_miu,
            "pu": self.is_pu,
            "exact_pu": self.is_exact_pu,
        }


def _exceeds(x: Element, tol: float) -> bool:
    """‖x‖ > tol (Frobenius 노름이 상한이므로 먼저 확인)"""
    if max(float(np.linalg.norm(b)) for b in x.blocks) <= tol:
        return False
    return cstar_norm(x) > tol


def _is_unital(f: LinMap) -> bool:
    image = apply_map(f, Element.unit(f.dom))
    return not _exceeds(image - Element.unit(f.cod), Tolerances.CLASSIFY)


def _is_involutive(f: LinMap, basis: list[Element], images: list[Element]) -> bool:
    for unit, image in zip(basis, images):
        if _exceeds(apply_map(f, unit.star()) - image.star(), Tolerances.CLASSIFY):
            return False
    return True


def _is_multiplicative(f: LinMap, basis: list[Element], images: list[Element]) -> bool:
    for unit, image in zip(basis, images):
        for other, other_image in zip(basis, images):
            product = unit * other
            if _exceeds(apply_map(f, product) - image * other_image, Tolerances.CLASSIFY):
                return False
    return True


def _random_projection(n: int, rng: np.random.Generator) -> np.ndarray:
    u = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    u /= np.linalg.norm(u)
    return np.outer(u, u.conj())


def sample_positivity(f: LinMap, samples: int, seed: int) -> tuple[Positivity, float]:
    """
    블록별 무작위 rank-one 사영 uu* 의 상을 검사

    Returns:
        (판정, 관측된 최소 고유값)
    """
    rng = np.random.default_rng(seed)
    min_eigenvalue = np.inf
    for block_index, n in enumerate(f.dom.blocks):
        for _ in range(samples):
            blocks = [np.zeros((m, m), dtype=np.complex128) for m in f.dom.blocks]
            blocks[block_index] = _random_projection(n, rng)
            image = apply_map(f, Element(f.dom, tuple(blocks)))
            if not is_positive(image, Tolerances.CLASSIFY):
                logger.debug(f"positivity counterexample in block {block_index}")
                return Positivity.NO, _min_eigenvalue(image)
            min_eigenvalue = min(min_eigenvalue, _min_eigenvalue(image))
    return Positivity.SAMPLED_YES, float(min_eigenvalue)


def _min_eigenvalue(x: Element) -> float:
    smallest = np.inf
    for block in x.blocks:
        hermitian = 0.5 * (block + block.conj().T)
        smallest = min(smallest, float(herm_eig(hermitian).eigenvalues[0]))
    return smallest


def choi_matrix(f: LinMap) -> np.ndarray:
    """
    Σᵢⱼ Eᵢⱼ ⊗ f(Eᵢⱼ)

    cod가 여러 블록이면 f(Eᵢⱼ)를 블록 대각 행렬로 임베딩 (블록별 Choi 행렬의 직합과 동치)
    """
    if not f.dom.is_single_block:
        raise DomainNotSingleBlockError(f"domain {f.dom.to_list()} has several blocks")
    n = f.dom.blocks[0]
    size = f.cod.size
    choi = np.zeros((n * size, n * size), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            unit = np.zeros((n, n), dtype=np.complex128)
            unit[i, j] = 1.0
            image = apply_map(f, Element(f.dom, (unit,))).to_matrix()
            choi += np.kron(unit, image)
    return choi


def is_completely_positive(f: LinMap) -> bool:
    choi = choi_matrix(f)
    choi = 0.5 * (choi + choi.conj().T)
    return is_psd(choi, Tolerances.POSITIVITY)


def classify_map(f: LinMap, samples: int = None, seed: int = 0) -> MapClass:
    """
    사상 분류

    Args:
        f: 분류할 선형 사상
        samples: 비가환 정의역에서 블록당 무작위 사영 수
        seed: 난수 시드

    Returns:
        MapClass
    """
    samples = settings.POSITIVITY_SAMPLES if samples is None else samples
    basis = Element.basis(f.dom)
    images = [apply_map(f, unit) for unit in basis]

    unital = _is_unital(f)
    involutive = _is_involutive(f, basis, images)
    multiplicative = _is_multiplicative(f, basis, images)

    if multiplicative and involutive and unital:
        # f(y*y) = f(y)*f(y)
        positive = Positivity.YES
    elif f.dom.is_commutative:
        # ℂⁿ 의 원뿔은 좌표 사영 eⱼ 들로 생성
        positive = Positivity.YES if all(is_positive(image, Tolerances.CLASSIFY) for image in images) else Positivity.NO
    else:
        positive, _ = sample_positivity(f, samples, seed)

    if f.dom.is_single_block:
        completely_positive = CompletePositivity.YES if is_completely_positive(f) else CompletePositivity.NO
    else:
        completely_positive = CompletePositivity.NOT_COMPUTED

    result = MapClass(unital, involutive, multiplicative, positive, completely_positive)
    logger.debug(f"classify_map {f.dom} -> {f.cod}: {result.to_dict()}")
    return result


@dataclass
class NormBoundReport:
    """‖f(x)‖ ≤ 4‖x‖ 검사 결과"""
    trials: int
    max_ratio: float
    bound: float = 4.0
    violations: list[float] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def russo_dye_holds(self) -> bool:
        """더 날카로운 ‖f(x)‖ ≤ ‖x‖ (참고용, 판정에 사용하지 않음)"""
        return self.max_ratio <= 1.0 + Tolerances.CLASSIFY

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "bound": self.bound,
            "max_ratio": self.max_ratio,
            "violations": len(self.violations),
            "pass": self.passed,
            "russo_dye_holds": self.russo_dye_holds,
        }


def pu_norm_bound_check(f: LinMap, trials: int = 100, seed: int = 0) -> NormBoundReport:
    """PU 사상에 대해 무작위 원소 x로 ‖f(x)‖ ≤ 4‖x‖ + 1e-8 확인"""
    from src.utils.sampling import random_element

    map_class = classify_map(f, seed=seed)
    if not map_class.is_pu:
        raise NotPUError(
            f"unital={map_class.unital}, positive={map_class.positive.value}"
        )

    rng = np.random.default_rng(seed)
    report = NormBoundReport(trials=trials, max_ratio=0.0)
    for _ in range(trials):
        x = random_element(f.dom, rng)
        norm_x = cstar_norm(x)
        norm_fx = cstar_norm(apply_map(f, x))
        if norm_x > 0:
            report.max_ratio = max(report.max_ratio, norm_fx / norm_x)
        if norm_fx > report.bound * norm_x + Tolerances.CLASSIFY:
            report.violations.append(norm_fx / norm_x)
    if report.violations:
        logger.warning(f"PU norm bound violated {len(report.violations)} times")
    return report
