"""
설정 관리 모듈
환경 변수 및 YAML 설정 파일 로드
"""
import os
from pathlib import Path
from dotenv import load_dotenv
import yaml

# 프로젝트 루트 경로
ROOT_DIR = Path(__file__).parent.parent
CONFIG_DIR = Path(__file__).parent

# .env 파일 로드
load_dotenv(ROOT_DIR / ".env")


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name, "")
    if not raw:
        return default
    try:
        return float(raw)
    except ValueError:
        return float("nan")


class Settings:
    """애플리케이션 설정"""

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # 검증 리포트 허용 오차 (내부 생성 허용 오차 1e-9는 변경하지 않음)
    REPORT_TOL: float = _env_float("GELFAND_TOL", 1e-8)

    # Verification defaults
    DEFAULT_TRIALS: int = 100
    DEFAULT_SEED: int = 0
    POSITIVITY_SAMPLES: int = 1000

    # Size limits
    MAX_TRIANGLE_DIM: int = 64
    MAX_FULL_FAITHFUL_DIM: int = 16
    MAX_MIU_ENUMERATION: int = 8

    @classmethod
    def validate(cls) -> list[str]:
        """설정 검증"""
        errors = []
        if not (cls.REPORT_TOL > 0):
            errors.append("GELFAND_TOL must be a positive number")
        elif cls.REPORT_TOL >= 1e-2:
            errors.append("GELFAND_TOL is too loose (must be < 1e-2)")
        if cls.DEFAULT_TRIALS <= 0:
            errors.append("DEFAULT_TRIALS must be positive")
        if cls.POSITIVITY_SAMPLES <= 0:
            errors.append("POSITIVITY_SAMPLES must be positive")
        return errors


def load_yaml_config(filename: str) -> dict:
    """YAML 설정 파일 로드"""
    filepath = CONFIG_DIR / filename
    if not filepath.exists():
        return {}
    with open(filepath, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def get_verify_presets() -> dict:
    """검증 스위트 기본값 로드"""
    return load_yaml_config("verify_presets.yaml")


# 설정 인스턴스
settings = Settings()
