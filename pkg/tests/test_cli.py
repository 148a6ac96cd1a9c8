import json

import pytest

from gaugecalc.cli import main
from gaugecalc.geometry import box, set_to_json

UNIT_BOX_2D = json.dumps(set_to_json(box(2)))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_gauge_command(capsys):
    code, doc = run(capsys, "gauge", "--set", UNIT_BOX_2D, "--point", "[0.5, 0.25]")
    assert code == 0
    assert doc["value"] == pytest.approx(0.5, abs=1e-9)
    assert doc["span_dim"] == 2 and doc["kernel_dim"] == 0


def test_gauge_set_from_file(tmp_path, capsys):
    path = tmp_path / "set.json"
    path.write_text(UNIT_BOX_2D)
    code, doc = run(capsys, "gauge", "--set", str(path), "--point", "[1.0, 0.0]")
    assert code == 0
    assert doc["value"] == pytest.approx(1.0, abs=1e-9)


def test_core_command(capsys):
    dom = json.dumps(set_to_json(box(1, -1, 2, center=[0.5])))
    code, doc = run(capsys, "core", "--set", dom, "--fn", "x1^2",
                    "--point", "[0.0]", "--level", "1.0", "--convex")
    assert code == 0
    assert doc["symmetric"] and doc["span_equal"] and doc["base_in_relative_interior"]


def test_lipschitz_command(capsys):
    code, doc = run(capsys, "lipschitz", "--set", UNIT_BOX_2D,
                    "--fn", "x1^2 + x2^2", "--point", "[0, 0]",
                    "--eps", "0.5", "--pairs", "50", "--convex")
    assert code == 0
    assert doc["epsilon"] == 0.5
    assert doc["empirical_L"] <= doc["theoretical_L"] * (1 + 1e-6)


def test_subdiff_and_fermat_commands(capsys):
    code, doc = run(capsys, "subdiff", "--set", UNIT_BOX_2D,
                    "--fn", "x1^2 + x2^2", "--point", "[0.25, 0.0]", "--convex")
    assert code == 0
    assert doc["subgradients"]
    code, doc = run(capsys, "fermat", "--set", UNIT_BOX_2D,
                    "--fn", "x1^2 + x2^2", "--point", "[0, 0]", "--convex")
    assert code == 0
    assert doc["is_critical"]


def test_lebourg_command(capsys):
    code, doc = run(capsys, "lebourg", "--set", UNIT_BOX_2D,
                    "--fn", "x1^2 + x2^2", "--point", "[-0.5, 0.0]",
                    "--point2", "[0.7, 0.4]", "--convex")
    assert code == 0
    assert doc["alpha"] == pytest.approx(0.5, abs=1e-5)


def test_verify_sum_command(capsys):
    code, doc = run(capsys, "verify", "sum", "--set", UNIT_BOX_2D,
                    "--fn", "abs(x1) + x2^2", "--fn2", "x1^2 + abs(x2)",
                    "--point", "[0.3, 0.5]", "--convex")
    assert code == 0
    assert doc["verdict"] == "equality_holds"


def test_verify_requires_second_function(capsys):
    code = main(["verify", "sum", "--set", UNIT_BOX_2D,
                 "--fn", "x1^2", "--point", "[0, 0]", "--convex"])
    assert code == 2
    assert "fn2" in capsys.readouterr().err


def test_l2demo_command(capsys):
    code, doc = run(capsys, "l2demo", "exp_chain", "--grid-n", "100")
    assert code == 0
    assert doc["passed"]


def test_counterexamples_command(capsys):
    code, doc = run(capsys, "counterexamples")
    assert code == 0
    assert set(doc) == {"sqrt_boundary", "floor_quasiconvex", "asymmetric_set",
                        "kernel_blind_stationarity"}
    assert all(sec["reproduced"] for sec in doc.values())


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["gauge", "--set", UNIT_BOX_2D, "--point", "[0.5, 0.0]",
                 "--out", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    doc = json.loads(target.read_text())
    assert doc["value"] == pytest.approx(0.5, abs=1e-9)


def test_bad_json_exits_2(capsys):
    assert main(["gauge", "--set", "{not json", "--point", "[0]"]) == 2
    assert main(["gauge", "--set", UNIT_BOX_2D, "--point", "[0.1,"]) == 2
    assert main(["gauge", "--set", "/nonexistent/set.json", "--point", "[0]"]) == 2


def test_bad_expression_exits_2(capsys):
    code = main(["fermat", "--set", UNIT_BOX_2D, "--fn", "x1 +", "--point", "[0, 0]"])
    assert code == 2
