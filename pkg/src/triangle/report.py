"""
검증 리포트 데이터 모델
"""
from dataclasses import dataclass, field
from typing import Optional

from src.algebra import AlgebraSignature


@dataclass
class CheckResult:
    """개별 검사 결과 (pass ⟺ residual ≤ tolerance)"""
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "residual": float(self.residual),
            "tolerance": float(self.tolerance),
            "pass": self.passed,
        }


@dataclass
class _CheckList:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, residual: float, tolerance: float) -> CheckResult:
        result = CheckResult(name, float(residual), float(tolerance))
        self.checks.append(result)
        return result

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)

    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


@dataclass
class TriangleReport(_CheckList):
    """state-and-effect 삼각형 검증 결과"""
    algebra: Optional[AlgebraSignature] = None

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra.to_list() if self.algebra else [],
            "checks": [c.to_dict() for c in self.checks],
            "pass": self.passed,
        }


@dataclass
class SuiteReport(_CheckList):
    """기타 검증 스위트 결과"""
    target: str = ""
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "params": self.params,
            "checks": [c.to_dict() for c in self.checks],
            "pass": self.passed,
        }
