"""
입출력 코덱
JSON (원소, 사상, 분포, 상태, 측도, 함수, 리포트) 와 CSV (확률 행렬)
복소수는 [re, im] 쌍, 행렬은 행 우선으로 펼친 목록
"""
import io
import json
import math
import re
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np

from src.algebra import AlgebraSignature, Element
from src.maps import LinMap
from src.monads import Dist, FunctionMap, KleisliMap
from src.states import FinMeasure, State
from src.utils.errors import ParseError

PathLike = Union[str, Path]


# ============================================================
# 기본 값
# ============================================================
def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    return [z.real + 0.0, z.imag + 0.0]


def complex_from_json(value: Any) -> complex:
    """[re, im] 또는 실수"""
    if isinstance(value, bool):
        raise ParseError(f"expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
    ):
        return complex(value[0], value[1])
    raise ParseError(f"expected [re, im], got {value!r}")


def matrix_to_json(matrix: np.ndarray) -> list[list[float]]:
    return [complex_to_json(z) for z in np.asarray(matrix).ravel()]


def matrix_from_json(value: Any) -> np.ndarray:
    """
    정사각 행렬 읽기

    n² 개의 [re, im] 평면 목록 또는 행 목록 모두 허용
    """
    if not isinstance(value, list):
        raise ParseError(f"expected a list of entries, got {type(value).__name__}")
    if value and isinstance(value[0], list) and value[0] and isinstance(value[0][0], list):
        rows = [[complex_from_json(v) for v in row] for row in value]
        if any(len(row) != len(rows) for row in rows):
            raise ParseError("matrix rows have inconsistent lengths")
        return np.array(rows, dtype=np.complex128).reshape(len(rows), len(rows))
    entries = [complex_from_json(v) for v in value]
    n = math.isqrt(len(entries))
    if n * n != len(entries) or n == 0:
        raise ParseError(f"{len(entries)} entries do not form a square block")
    return np.array(entries, dtype=np.complex128).reshape(n, n)


def _require(data: Any, key: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise ParseError(f"missing field {key!r}")
    return data[key]


def _signature(value: Any) -> AlgebraSignature:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise ParseError(f"signature must be a list of integers, got {value!r}")
    return AlgebraSignature(tuple(value))


# ============================================================
# 도메인 객체
# ============================================================
def element_to_json(x: Element) -> dict:
    return {"blocks": [matrix_to_json(b) for b in x.blocks]}


def element_from_json(data: Any) -> Element:
    """시그니처는 블록 모양에서 추론"""
    blocks = _require(data, "blocks")
    if not isinstance(blocks, list) or not blocks:
        raise ParseError("'blocks' must be a non-empty list")
    return Element.from_blocks([matrix_from_json(b) for b in blocks])


def map_to_json(f: LinMap) -> dict:
    return {"dom": f.dom.to_list(), "cod": f.cod.to_list(), "coeffs": matrix_to_json(f.coeffs)}


def map_from_json(data: Any) -> LinMap:
    dom, cod = _signature(_require(data, "dom")), _signature(_require(data, "cod"))
    coeffs = _require(data, "coeffs")
    if not isinstance(coeffs, list):
        raise ParseError("'coeffs' must be a list")
    entries = [complex_from_json(v) for v in coeffs]
    if len(entries) != cod.dim * dom.dim:
        raise ParseError(f"expected {cod.dim * dom.dim} coefficients, got {len(entries)}")
    return LinMap(dom, cod, np.array(entries, dtype=np.complex128).reshape(cod.dim, dom.dim))


def dist_to_json(d: Dist) -> dict:
    return d.to_dict()


def dist_from_json(data: Any) -> Dist:
    weights = _require(data, "weights")
    if not isinstance(weights, list) or not all(
        isinstance(w, (int, float)) and not isinstance(w, bool) for w in weights
    ):
        raise ParseError("'weights' must be a list of numbers")
    return Dist(np.array(weights, dtype=float))


def state_to_json(state: State) -> dict:
    return {"densities": [matrix_to_json(rho) for rho in state.densities]}


def state_from_json(data: Any) -> State:
    densities = _require(data, "densities")
    if not isinstance(densities, list) or not densities:
        raise ParseError("'densities' must be a non-empty list")
    matrices = [matrix_from_json(rho) for rho in densities]
    return State(AlgebraSignature(tuple(m.shape[0] for m in matrices)), tuple(matrices))


def measure_to_json(measure: FinMeasure) -> dict:
    return {"atoms": [{"weight": w, "state": state_to_json(s)} for w, s in measure.atoms]}


def measure_from_json(data: Any) -> FinMeasure:
    atoms = _require(data, "atoms")
    if not isinstance(atoms, list):
        raise ParseError("'atoms' must be a list")
    return FinMeasure(tuple(
        (float(_require(atom, "weight")), state_from_json(_require(atom, "state")))
        for atom in atoms
    ))


def function_to_json(f: FunctionMap) -> dict:
    return f.to_dict()


def function_from_json(data: Any) -> FunctionMap:
    table = _require(data, "table")
    if not isinstance(table, list) or not all(isinstance(t, int) and not isinstance(t, bool) for t in table):
        raise ParseError("'table' must be a list of integers")
    dom_size = data.get("dom_size", len(table))
    cod_size = _require(data, "cod_size")
    return FunctionMap(int(dom_size), int(cod_size), tuple(table))


# ============================================================
# 파일
# ============================================================
_FLOAT_TAG = "\x00float:"
_TAGGED_FLOAT = re.compile(r'"\\u0000float:([^"]+)"')


def format_float(x: float) -> str:
    """17 유효 숫자 십진 표현 (double 왕복 정확)"""
    if not math.isfinite(x):
        raise ValueError(f"Out of range float values are not JSON compliant: {x!r}")
    text = format(x, ".17g")
    if "." not in text and "e" not in text:
        text += ".0"
    return text


def _tag_floats(data: Any) -> Any:
    if isinstance(data, bool):
        return data
    if isinstance(data, float):
        return _FLOAT_TAG + format_float(data)
    if isinstance(data, dict):
        return {key: _tag_floats(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [_tag_floats(value) for value in data]
    return data


def dumps(data: Any) -> str:
    """키 순서 고정, float 은 17 유효 숫자"""
    text = json.dumps(_tag_floats(data), ensure_ascii=False, indent=2, allow_nan=False)
    return _TAGGED_FLOAT.sub(r"\1", text) + "\n"


def read_json(path: PathLike) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})")
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror or e}")


def write_json(data: Any, path: Optional[PathLike] = None) -> str:
    """path 가 없으면 문자열만 반환"""
    text = dumps(data)
    if path is not None:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    return text


def stochastic_from_csv_text(text: str) -> KleisliMap:
    """한 줄에 한 행, 쉼표 구분"""
    try:
        matrix = np.loadtxt(io.StringIO(text), delimiter=",", ndmin=2, dtype=float)
    except ValueError as e:
        raise ParseError(f"invalid CSV: {e}")
    if matrix.size == 0:
        raise ParseError("empty CSV")
    return KleisliMap(matrix)


def read_stochastic_csv(path: PathLike) -> KleisliMap:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror or e}")
    return stochastic_from_csv_text(text)


def stochastic_to_csv_text(f: KleisliMap) -> str:
    buffer = io.StringIO()
    for row in f.matrix:
        buffer.write(",".join(repr(float(v)) for v in row) + "\n")
    return buffer.getvalue()


def write_stochastic_csv(f: KleisliMap, path: PathLike) -> str:
    text = stochastic_to_csv_text(f)
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(text, encoding="utf-8")
    return text
