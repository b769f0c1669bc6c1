"""
Gelfand Kit - 유한 차원 C*-대수 의미론 도구
메인 실행 파일 (명령행 인터페이스)

종료 코드: 0 성공, 1 검증 실패, 2 파싱 오류, 3 전제 조건/도메인 오류
"""
import argparse
import sys
from pathlib import Path
from typing import Optional

# 프로젝트 루트를 Python 경로에 추가
ROOT_DIR = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT_DIR))

from config.settings import settings, get_verify_presets
from src.utils.logger import logger
from src.utils.errors import GelfandError, ParseError
from src.utils import codec
from src.utils.workspace import Workspace, encode

from src.algebra import AlgebraSignature, Effect
from src.maps import apply_map, classify_map, pu_norm_bound_check
from src.monads import from_pu, function_to_miu, kleisli_power, miu_to_function, to_pu
from src.triangle import (
    verify_equivalence,
    verify_extremes,
    verify_monad_laws,
    verify_stat_full_faithful,
    verify_transpose_witness,
    verify_triangle,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_DOMAIN_ERROR = 3

DIRECTIONS = ("kleisli-to-pu", "pu-to-kleisli", "fn-to-miu", "miu-to-fn")
VERIFY_TARGETS = ("triangle", "full-faithful", "equivalence", "monad-laws", "transpose-witness")


def validate_settings() -> bool:
    """설정 검증"""
    errors = settings.validate()
    if errors:
        for error in errors:
            logger.error(f"Configuration error: {error}")
        return False
    return True


def emit(text: str, out: Optional[str] = None) -> None:
    """--out 이 있으면 파일로, 없으면 stdout"""
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text)


# ============================================================
# convert
# ============================================================
def cmd_convert(args) -> int:
    """⋆_D 및 MIU ↔ 함수 변환 (왕복 잔차는 <out>.report.json)"""
    workspace = Workspace()
    direction = args.direction

    if direction == "kleisli-to-pu":
        kernel = workspace.load("kernel", args.input)
        result = to_pu(kernel)
        text = codec.write_json(encode("map", result))
        residual = from_pu(result).distance(kernel)
    elif direction == "pu-to-kleisli":
        h = workspace.load("map", args.input)
        result = from_pu(h)
        text = codec.stochastic_to_csv_text(result)
        residual = to_pu(result).distance(h)
    elif direction == "fn-to-miu":
        fn = workspace.load("function", args.input)
        result = function_to_miu(fn)
        text = codec.write_json(encode("map", result))
        residual = 0.0 if miu_to_function(result).table == fn.table else 1.0
    else:
        h = workspace.load("map", args.input)
        result = miu_to_function(h)
        text = codec.write_json(encode("function", result))
        residual = function_to_miu(result).distance(h)

    emit(text, args.out)
    sidecar = {
        "direction": direction,
        "input": str(args.input),
        "residual": residual,
        "tolerance": settings.REPORT_TOL,
        "pass": bool(residual <= settings.REPORT_TOL),
    }
    if args.out:
        codec.write_json(sidecar, f"{args.out}.report.json")
    logger.info(f"convert {direction}: round-trip residual {residual:.2e}")
    return EXIT_OK


# ============================================================
# wp / evolve
# ============================================================
def cmd_wp(args) -> int:
    """최약 전조건: to_pu(kernel)(predicate)"""
    workspace = Workspace()
    kernel = workspace.load("kernel", args.kernel)
    predicate = Effect(workspace.load("element", args.predicate))
    result = Effect(apply_map(to_pu(kernel), predicate.element))
    emit(codec.write_json(encode("element", result.element)), args.out)
    return EXIT_OK


def cmd_evolve(args) -> int:
    """d·Mᵏ"""
    workspace = Workspace()
    kernel = workspace.load("kernel", args.kernel)
    d = workspace.load("dist", args.dist)
    result = kleisli_power(kernel, args.steps).push(d)
    emit(codec.write_json(encode("dist", result)), args.out)
    return EXIT_OK


# ============================================================
# verify
# ============================================================
def _signatures(args, presets: dict) -> list[AlgebraSignature]:
    if args.blocks:
        return [Workspace().add_algebra("blocks", args.blocks)]
    return [AlgebraSignature.of(blocks) for blocks in presets.get("triangle", {}).get("signatures", [[1]])]


def _pairs(args, presets: dict) -> list[tuple[AlgebraSignature, AlgebraSignature]]:
    if args.blocks:
        workspace = Workspace()
        dom = workspace.add_algebra("dom", args.blocks)
        cod = workspace.add_algebra("cod", args.cod_blocks) if args.cod_blocks else dom
        return [(dom, cod)]
    return [
        (AlgebraSignature.of(a), AlgebraSignature.of(b))
        for a, b in presets.get("full_faithful", {}).get("pairs", [])
    ]


def _combine(target: str, reports: list) -> dict:
    if len(reports) == 1:
        return reports[0].to_dict()
    return {
        "target": target,
        "reports": [r.to_dict() for r in reports],
        "pass": all(r.passed for r in reports),
    }


def cmd_verify(args) -> int:
    """검증 스위트 실행 (실패해도 리포트는 출력)"""
    presets = get_verify_presets()
    target = args.target
    trials = args.trials

    if target == "triangle":
        reports = [verify_triangle(s, trials, args.seed) for s in _signatures(args, presets)]
    elif target == "full-faithful":
        reports = [verify_stat_full_faithful(a, b, trials, args.seed) for a, b in _pairs(args, presets)]
    elif target == "equivalence":
        defaults = presets.get("equivalence", {})
        n, m = args.n or defaults.get("n", 4), args.m or defaults.get("m", 4)
        reports = [verify_equivalence(n, m, trials, args.seed)]
    elif target == "monad-laws":
        n = args.n or presets.get("monad_laws", {}).get("n", 4)
        reports = [verify_monad_laws(n, trials, args.seed)]
    else:
        n = args.n or presets.get("transpose_witness", {}).get("n", 2)
        reports = [verify_transpose_witness(n, args.samples, args.seed, trials)]

    emit(codec.write_json(_combine(target, reports)), args.out)
    failed = [c.name for r in reports for c in r.failed()]
    if failed:
        logger.warning(f"verify {target}: failed checks {failed}")
        return EXIT_VERIFY_FAILED
    logger.info(f"verify {target}: all checks passed")
    return EXIT_OK


# ============================================================
# extremes / classify
# ============================================================
def cmd_extremes(args) -> int:
    """ℂⁿ 의 점질량 상태와 MIU 상태 개수"""
    enumerate_miu = args.enumerate_miu or args.n <= settings.MAX_MIU_ENUMERATION
    states, report = verify_extremes(args.n, enumerate_miu)
    data = {"states": [encode("state", s) for s in states], "report": report.to_dict()}
    emit(codec.write_json(data), args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_classify(args) -> int:
    """classify_map 결과 (PU 이면 노름 상한 검사 포함)"""
    workspace = Workspace()
    f = workspace.load("map", args.input)
    map_class = classify_map(f, samples=args.samples, seed=args.seed)
    data = {"dom": f.dom.to_list(), "cod": f.cod.to_list(), "class": map_class.to_dict()}
    if map_class.is_pu:
        data["norm_bound"] = pu_norm_bound_check(f, trials=args.trials, seed=args.seed).to_dict()
    emit(codec.write_json(data), args.out)
    return EXIT_OK


# ============================================================
# 진입점
# ============================================================
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gelfand",
        description="Finite-dimensional C*-algebra semantics toolkit",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=str, default=None, help="출력 파일 (기본: stdout)")
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="난수 시드")
    common.add_argument("--trials", type=int, default=settings.DEFAULT_TRIALS, help="무작위 시행 횟수")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common], help="Kleisli ↔ PU, 함수 ↔ MIU 변환")
    p.add_argument("--in", dest="input", required=True, help="입력 파일 (CSV 또는 JSON)")
    p.add_argument("--direction", required=True, choices=DIRECTIONS)
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("wp", parents=[common], help="최약 전조건 (Heisenberg 방향)")
    p.add_argument("--kernel", required=True, help="n×m 확률 행렬 CSV")
    p.add_argument("--predicate", required=True, help="ℂᵐ 위의 효과 JSON")
    p.set_defaults(handler=cmd_wp)

    p = sub.add_parser("evolve", parents=[common], help="분포 전진 d·Mᵏ")
    p.add_argument("--kernel", required=True, help="정사각 확률 행렬 CSV")
    p.add_argument("--dist", required=True, help="분포 JSON")
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(handler=cmd_evolve)

    p = sub.add_parser("verify", parents=[common], help="검증 스위트")
    p.add_argument("target", choices=VERIFY_TARGETS)
    p.add_argument("--blocks", type=str, default=None, help="블록 차원 (예: 1,2)")
    p.add_argument("--cod-blocks", type=str, default=None, help="full-faithful 의 공역 블록 차원")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--samples", type=int, default=None, help="양성 표본 수")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("extremes", parents=[common], help="ℂⁿ 의 극점 상태")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--enumerate-miu", action="store_true", help="MIU 상태 전수 열거 (n ≤ 8)")
    p.set_defaults(handler=cmd_extremes)

    p = sub.add_parser("classify", parents=[common], help="사상 분류 (MIU / PU / CP)")
    p.add_argument("--in", dest="input", required=True, help="사상 JSON")
    p.add_argument("--samples", type=int, default=None, help="비가환 정의역 양성 표본 수")
    p.set_defaults(handler=cmd_classify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """메인 실행 함수"""
    if not validate_settings():
        logger.error("Configuration validation failed. Exiting.")
        return EXIT_PARSE_ERROR

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 사용법 오류는 파싱 오류로 처리
        return EXIT_OK if e.code == 0 else EXIT_PARSE_ERROR

    logger.debug(f"command={args.command} seed={args.seed} trials={args.trials}")
    try:
        return args.handler(args)
    except ParseError as e:
        print(str(e), file=sys.stderr)
        return EXIT_PARSE_ERROR
    except GelfandError as e:
        print(str(e), file=sys.stderr)
        return EXIT_DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
