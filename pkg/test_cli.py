"""
명령행 인터페이스 테스트
main(argv) 를 직접 호출하여 종료 코드와 출력 확인
"""
import json
import os
import subprocess
import sys
from pathlib import Path

# 프로젝트 루트 설정
ROOT_DIR = Path(__file__).parent
sys.path.insert(0, str(ROOT_DIR))

import numpy as np
import pytest

from config.settings import Settings, _env_float
from src.algebra import AlgebraSignature
from src.main import main
from src.maps import LinMap, transpose_map
from src.monads import KleisliMap, to_pu
from src.utils import codec

MARKOV_CSV = "0.5,0.5\n0,1\n"


@pytest.fixture
def write(tmp_path):
    """tmp_path 아래에 파일을 쓰고 경로 문자열 반환"""
    def _write(name: str, content) -> str:
        path = tmp_path / name
        if isinstance(content, str):
            path.write_text(content, encoding="utf-8")
        else:
            path.write_text(json.dumps(content), encoding="utf-8")
        return str(path)
    return _write


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def effect_json(values) -> dict:
    return {"blocks": [[[v, 0]] for v in values]}


# ============================================================
# convert
# ============================================================
def test_convert_kleisli_to_pu(write, tmp_path, capsys):
    kernel = write("kernel.csv", MARKOV_CSV)
    out = tmp_path / "map.json"
    code, _, _ = run(capsys, "convert", "--in", kernel, "--direction", "kleisli-to-pu", "--out", str(out))
    assert code == 0

    f = codec.map_from_json(json.loads(out.read_text(encoding="utf-8")))
    assert f.dom == AlgebraSignature.commutative(2)
    assert np.allclose(f.coeffs, [[0.5, 0.5], [0.0, 1.0]])

    sidecar = json.loads((tmp_path / "map.json.report.json").read_text(encoding="utf-8"))
    assert sidecar["direction"] == "kleisli-to-pu"
    assert sidecar["residual"] == 0.0
    assert sidecar["pass"] is True


def test_convert_pu_to_kleisli_identity(write, capsys):
    identity = write("id.json", codec.map_to_json(LinMap.identity(AlgebraSignature.commutative(2))))
    code, out, _ = run(capsys, "convert", "--in", identity, "--direction", "pu-to-kleisli")
    assert code == 0
    assert out == "1.0,0.0\n0.0,1.0\n"


def test_convert_function_to_miu(write, capsys):
    fn = write("fn.json", {"dom_size": 2, "cod_size": 3, "table": [2, 0]})
    code, out, _ = run(capsys, "convert", "--in", fn, "--direction", "fn-to-miu")
    assert code == 0
    h = codec.map_from_json(json.loads(out))
    assert np.allclose(h.coeffs, [[0, 0, 1], [1, 0, 0]])


def test_convert_miu_to_function_rejects_stochastic(write, capsys):
    stochastic = write("h.json", codec.map_to_json(to_pu(KleisliMap(np.array([[0.5, 0.5], [0.0, 1.0]])))))
    code, out, err = run(capsys, "convert", "--in", stochastic, "--direction", "miu-to-fn")
    assert code == 3
    assert out == ""
    assert "NotMIU" in err


def test_convert_malformed_csv(write, capsys):
    kernel = write("bad.csv", "0.5,abc\n")
    code, _, _ = run(capsys, "convert", "--in", kernel, "--direction", "kleisli-to-pu")
    assert code == 2


def test_convert_non_stochastic_csv(write, capsys):
    kernel = write("rows.csv", "0.5,0.6\n")
    code, _, err = run(capsys, "convert", "--in", kernel, "--direction", "kleisli-to-pu")
    assert code == 3
    assert "NotStochastic" in err


def test_convert_missing_file(tmp_path, capsys):
    code, _, _ = run(capsys, "convert", "--in", str(tmp_path / "none.csv"), "--direction", "kleisli-to-pu")
    assert code == 2


# ============================================================
# wp / evolve
# ============================================================
@pytest.mark.parametrize("predicate,expected", [
    ([1, 0], [0.5, 0.0]),
    ([1, 1], [1.0, 1.0]),
    ([0, 0], [0.0, 0.0]),
])
def test_weakest_precondition(write, capsys, predicate, expected):
    kernel = write("kernel.csv", MARKOV_CSV)
    pred = write("pred.json", effect_json(predicate))
    code, out, _ = run(capsys, "wp", "--kernel", kernel, "--predicate", pred)
    assert code == 0
    result = codec.element_from_json(json.loads(out))
    assert np.allclose(result.values(), expected)


def test_weakest_precondition_rejects_non_effect(write, capsys):
    kernel = write("kernel.csv", MARKOV_CSV)
    pred = write("pred.json", effect_json([2, 0]))
    code, _, err = run(capsys, "wp", "--kernel", kernel, "--predicate", pred)
    assert code == 3
    assert "NotEffect" in err


def test_evolve_steps(write, capsys):
    kernel = write("swap.csv", "0,1\n1,0\n")
    dist = write("d.json", {"weights": [1, 0]})
    code, out, _ = run(capsys, "evolve", "--kernel", kernel, "--dist", dist, "--steps", "3")
    assert code == 0
    assert json.loads(out)["weights"] == [0.0, 1.0]


def test_evolve_markov(write, capsys):
    kernel = write("kernel.csv", MARKOV_CSV)
    dist = write("d.json", {"weights": [0.5, 0.5]})
    code, out, _ = run(capsys, "evolve", "--kernel", kernel, "--dist", dist)
    assert code == 0
    assert json.loads(out)["weights"] == pytest.approx([0.25, 0.75])


@pytest.mark.parametrize("steps", ["0", "1"])
def test_evolve_non_square_kernel(write, capsys, steps):
    kernel = write("wide.csv", "0.5,0.5,0\n0,0.5,0.5\n")
    dist = write("d.json", {"weights": [0.3, 0.7]})
    code, out, err = run(capsys, "evolve", "--kernel", kernel, "--dist", dist, "--steps", steps)
    assert code == 3
    assert out == ""
    assert "ShapeMismatch" in err


# ============================================================
# verify
# ============================================================
def test_verify_transpose_witness(capsys):
    code, out, _ = run(capsys, "verify", "transpose-witness", "--samples", "100", "--trials", "10")
    assert code == 0
    report = json.loads(out)
    assert report["target"] == "transpose-witness"
    assert report["pass"] is True
    assert report["params"]["choi_min_eigenvalue"] == pytest.approx(-1.0, abs=1e-9)


def test_verify_triangle_blocks(capsys):
    code, out, _ = run(capsys, "verify", "triangle", "--blocks", "1,1", "--trials", "10")
    assert code == 0
    report = json.loads(out)
    assert report["algebra"] == [1, 1]
    assert all(check["pass"] for check in report["checks"])


def test_verify_full_faithful_blocks(capsys):
    code, out, _ = run(capsys, "verify", "full-faithful", "--blocks", "2", "--cod-blocks", "1,1", "--trials", "5")
    assert code == 0
    assert json.loads(out)["target"] == "stat-full-faithful"


def test_verify_equivalence(capsys):
    code, out, _ = run(capsys, "verify", "equivalence", "--n", "3", "--m", "3", "--trials", "20", "--seed", "1")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_monad_laws(capsys):
    code, _, _ = run(capsys, "verify", "monad-laws", "--n", "3", "--trials", "10")
    assert code == 0


def test_verify_is_deterministic(capsys):
    argv = ("verify", "triangle", "--blocks", "2", "--trials", "5", "--seed", "3")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == second[0] == 0
    assert first[1] == second[1]


def test_verify_writes_out_file(tmp_path, capsys):
    out = tmp_path / "reports" / "triangle.json"
    code, stdout, _ = run(capsys, "verify", "triangle", "--blocks", "1", "--trials", "3", "--out", str(out))
    assert code == 0
    assert stdout == ""
    assert json.loads(out.read_text(encoding="utf-8"))["pass"] is True


def test_verify_bad_blocks(capsys):
    assert run(capsys, "verify", "triangle", "--blocks", "1,x")[0] == 2
    assert run(capsys, "verify", "triangle", "--blocks", "0")[0] == 2


def test_verify_dimension_too_large(capsys):
    code, _, err = run(capsys, "verify", "triangle", "--blocks", "5,5,5", "--trials", "1")
    assert code == 3
    assert "DimensionTooLarge" in err


# ============================================================
# extremes / classify
# ============================================================
def test_extremes(capsys):
    code, out, _ = run(capsys, "extremes", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert len(data["states"]) == 3
    assert data["report"]["pass"] is True


def test_extremes_enumeration_limit(capsys):
    code, _, _ = run(capsys, "extremes", "--n", "9", "--enumerate-miu")
    assert code == 3


def test_classify_transpose(write, capsys):
    path = write("t.json", codec.map_to_json(transpose_map(2)))
    code, out, _ = run(capsys, "classify", "--in", path, "--samples", "200", "--trials", "20")
    assert code == 0
    data = json.loads(out)
    assert data["class"]["positive"] == "sampled_yes"
    assert data["class"]["completely_positive"] == "no"
    assert data["class"]["exact_pu"] is False
    assert data["norm_bound"]["pass"] is True


def test_classify_non_pu_has_no_norm_bound(write, capsys):
    f = LinMap(AlgebraSignature.commutative(2), AlgebraSignature.commutative(2), 2 * np.eye(2))
    path = write("f.json", codec.map_to_json(f))
    code, out, _ = run(capsys, "classify", "--in", path)
    assert code == 0
    data = json.loads(out)
    assert data["class"]["pu"] is False
    assert "norm_bound" not in data


# ============================================================
# 설정 / 인자 오류
# ============================================================
def test_invalid_tolerance(monkeypatch, capsys):
    monkeypatch.setattr(Settings, "REPORT_TOL", float("nan"))
    assert run(capsys, "extremes", "--n", "2")[0] == 2


@pytest.mark.parametrize("raw, expected", [("1e-6", 1e-6), ("", 1e-8)])
def test_env_float_reads_tolerance(monkeypatch, raw, expected):
    monkeypatch.setenv("GELFAND_TOL", raw)
    assert _env_float("GELFAND_TOL", 1e-8) == expected


def test_env_float_unparsable_is_nan(monkeypatch):
    monkeypatch.setenv("GELFAND_TOL", "tight")
    value = _env_float("GELFAND_TOL", 1e-8)
    assert value != value


def run_with_env(tol: str, *argv) -> subprocess.CompletedProcess:
    """GELFAND_TOL 을 설정한 새 프로세스에서 CLI 실행"""
    env = {**os.environ, "GELFAND_TOL": tol}
    return subprocess.run(
        [sys.executable, str(ROOT_DIR / "src" / "main.py"), *argv],
        cwd=ROOT_DIR,
        env=env,
        capture_output=True,
        text=True,
    )


def test_gelfand_tol_sets_report_tolerance(write, tmp_path):
    kernel = write("kernel.csv", MARKOV_CSV)
    out = tmp_path / "map.json"
    result = run_with_env("1e-12", "convert", "--in", kernel, "--direction", "kleisli-to-pu", "--out", str(out))
    assert result.returncode == 0
    sidecar = json.loads(Path(f"{out}.report.json").read_text(encoding="utf-8"))
    assert sidecar["tolerance"] == 1e-12


def test_gelfand_tol_tightens_verification():
    result = run_with_env("1e-300", "verify", "triangle", "--blocks", "2", "--trials", "3")
    report = json.loads(result.stdout)
    residual_checks = [c for c in report["checks"] if c["name"] != "restriction_is_emod_hom"]
    assert all(c["tolerance"] == pytest.approx(1e-299, rel=1e-9, abs=0.0) for c in residual_checks)
    # 반올림 잔차 (~1e-16) 가 허용 오차를 넘음
    assert result.returncode == 1
    assert report["pass"] is False


@pytest.mark.parametrize("tol", ["0", "-1e-8", "0.5", "tight"])
def test_gelfand_tol_invalid_exits_2(tol):
    result = run_with_env(tol, "extremes", "--n", "2")
    assert result.returncode == 2
    assert result.stdout == ""
    assert "GELFAND_TOL" in result.stderr


def test_unknown_target(capsys):
    assert run(capsys, "verify", "bogus")[0] == 2


def test_missing_command(capsys):
    assert run(capsys)[0] == 2


def test_help(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "convert" in out


def test_evolve_zero_steps_returns_input(write, capsys):
    kernel = write("kernel.csv", "0.5,0.5\n0.5,0.5\n")
    dist = write("d.json", {"weights": [0.2, 0.8]})
    code, out, _ = run(capsys, "evolve", "--kernel", kernel, "--dist", dist, "--steps", "0")
    assert code == 0
    assert json.loads(out)["weights"] == [0.2, 0.8]


def test_evolve_uniform_kernel(write, capsys):
    kernel = write("kernel.csv", "0.5,0.5\n0.5,0.5\n")
    dist = write("d.json", {"weights": [1, 0]})
    code, out, _ = run(capsys, "evolve", "--kernel", kernel, "--dist", dist, "--steps", "1")
    assert code == 0
    assert json.loads(out)["weights"] == [0.5, 0.5]


def test_verify_triangle_three_points(capsys):
    code, _, _ = run(capsys, "verify", "triangle", "--blocks", "1,1,1", "--trials", "10")
    assert code == 0
