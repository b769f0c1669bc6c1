"""
워크스페이스 모듈
CLI 가 읽어 들인 아티팩트를 이름으로 관리 (로드 시 불변식 검증)
"""
from pathlib import Path
from typing import Any, Callable, Optional

from src.algebra import AlgebraSignature
from src.utils import codec
from src.utils.errors import (
    GelfandError,
    InvalidMatrixError,
    InvalidSignatureError,
    ParseError,
)
from src.utils.logger import logger

# 모양이 잘못된 입력은 파싱 오류로 취급 (나머지 불변식 위반은 도메인 오류 그대로)
STRUCTURAL_ERRORS = (InvalidMatrixError, InvalidSignatureError)

_DECODERS: dict[str, Callable[[Any], Any]] = {
    "element": codec.element_from_json,
    "map": codec.map_from_json,
    "dist": codec.dist_from_json,
    "state": codec.state_from_json,
    "measure": codec.measure_from_json,
    "function": codec.function_from_json,
}

_ENCODERS: dict[str, Callable[[Any], Any]] = {
    "element": codec.element_to_json,
    "map": codec.map_to_json,
    "dist": codec.dist_to_json,
    "state": codec.state_to_json,
    "measure": codec.measure_to_json,
    "function": codec.function_to_json,
}

CATEGORIES = ("algebra", "kernel", *_DECODERS)


class Workspace:
    """카테고리별 아티팩트 레지스트리 (dict 기반 O(1) 검색)"""

    def __init__(self):
        self.artifacts: dict[str, dict[str, Any]] = {category: {} for category in CATEGORIES}

    def _bucket(self, category: str) -> dict[str, Any]:
        if category not in self.artifacts:
            raise ParseError(f"unknown artifact category {category!r}, expected one of {CATEGORIES}")
        return self.artifacts[category]

    def put(self, category: str, key: str, artifact: Any) -> Any:
        self._bucket(category)[key] = artifact
        return artifact

    def get(self, category: str, key: str) -> Any:
        bucket = self._bucket(category)
        if key not in bucket:
            raise ParseError(f"no {category} named {key!r}")
        return bucket[key]

    def has(self, category: str, key: str) -> bool:
        return key in self._bucket(category)

    def count(self, category: str) -> int:
        return len(self._bucket(category))

    def add_algebra(self, key: str, text: str) -> AlgebraSignature:
        """쉼표 구분 블록 차원 (예: "1,2")"""
        try:
            signature = AlgebraSignature.parse(text)
        except (InvalidSignatureError, ValueError) as e:
            raise ParseError(f"--blocks {text!r}: {e}")
        return self.put("algebra", key, signature)

    def load(self, category: str, path, key: Optional[str] = None) -> Any:
        """
        파일을 읽어 검증 후 등록

        Args:
            category: kernel (CSV) 또는 JSON 카테고리
            path: 입력 파일
            key: 등록 이름 (기본값: 파일 이름)

        Returns:
            검증된 아티팩트
        """
        self._bucket(category)
        key = key or Path(path).stem
        try:
            if category == "kernel":
                artifact = codec.read_stochastic_csv(path)
            elif category == "algebra":
                artifact = AlgebraSignature.parse(Path(path).read_text(encoding="utf-8").strip())
            else:
                artifact = _DECODERS[category](codec.read_json(path))
        except ParseError:
            raise
        except STRUCTURAL_ERRORS as e:
            raise ParseError(f"{path}: {e}")
        except GelfandError as e:
            logger.debug(f"{path}: rejected as {category} ({e.code})")
            raise
        except (TypeError, ValueError, KeyError, OSError) as e:
            raise ParseError(f"{path}: malformed {category} ({e})")
        logger.debug(f"Loaded {category} {key!r} from {path}")
        return self.put(category, key, artifact)

    def dump(self, category: str, key: str, path=None) -> str:
        """등록된 아티팩트를 파일 형식 문자열로 (path 가 있으면 저장)"""
        artifact = self.get(category, key)
        if category == "kernel":
            if path is None:
                return codec.stochastic_to_csv_text(artifact)
            return codec.write_stochastic_csv(artifact, path)
        if category == "algebra":
            return codec.write_json(artifact.to_list(), path)
        return codec.write_json(_ENCODERS[category](artifact), path)


def encode(category: str, artifact: Any) -> Any:
    """JSON 호환 구조로 변환"""
    if category not in _ENCODERS:
        raise ParseError(f"category {category!r} has no JSON encoding")
    return _ENCODERS[category](artifact)
