import pytest

from cli.dispatch import EXIT_CHECK_FAILED, EXIT_OK, EXIT_UNDEFINED, EXIT_USAGE, dispatch
from main import main

SCENE = """dim 2
# golden scene
point O 0 0
point G 2 0
point P 1 3
point A 1 0
point B 2 1
point C 0 1
point D 3 3
"""


@pytest.fixture
def scene(write_scene):
    return write_scene(SCENE)


# === Golden transcripts ===

def test_project_golden(scene):
    assert dispatch(["project", "--scene", scene, "--line", "O", "G", "--point", "P"]) == (
        EXIT_OK,
        "t = 1/2\nW = (1, 0)\nresidual_sq = 9\n",
    )


def test_add_golden_undefined(scene, capsys):
    code, out = dispatch(["add", "--scene", scene, "--arrow", "A", "B", "--arrow", "C", "D"])
    assert (code, out) == (EXIT_UNDEFINED, "")
    assert capsys.readouterr().err == "error: undefined addition: head B != tail C\n"


def test_check_golden():
    code, out = dispatch(["check", "--trials", "100", "--dim", "2", "--seed", "1"])
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines and all(line.startswith("CHECK ") for line in lines)
    assert all(line.endswith(" trials=100 failures=0") for line in lines)
    assert dispatch(["check", "--trials", "100", "--dim", "2", "--seed", "1"]) == (code, out)


# === Arrow subcommands ===

def test_add(scene):
    assert dispatch(["add", "--scene", scene, "--arrow", "A", "B", "--arrow", "B", "D"]) == (
        EXIT_OK,
        "arrow = (1, 0) -> (3, 3)\nmeasure_sq = 13\n",
    )


def test_scale_accepts_negative_fractions(scene):
    assert dispatch(["scale", "--scene", scene, "--arrow", "A", "B", "--by", "-1/2"]) == (
        EXIT_OK,
        "arrow = (1, 0) -> (1/2, -1/2)\nmeasure_sq = 1/2\n",
    )


def test_classify(scene):
    assert dispatch(["classify", "--scene", scene, "--arrow", "A", "B", "--arrow", "O", "G"]) == (
        EXIT_OK,
        "pre_inner = 2\ndirection = oblique\ncs_lhs = 4\ncs_rhs = 8\ncs_tight = false\n",
    )


# === Geometry subcommands ===

def test_distance(scene):
    argv = ["distance", "--scene", scene, "--line", "O", "G", "--point", "P"]
    assert dispatch(argv) == (EXIT_OK, "distance_sq = 9\n")
    assert dispatch(argv + ["--approx", "2"]) == (EXIT_OK, "distance_sq = 9 ~ 9.00\nmeasure ~ 3.00\n")


def test_between(scene):
    assert dispatch(["between", "--scene", scene, "--points", "O", "A", "G"]) == (EXIT_OK, "between = true\n")
    assert dispatch(["between", "--scene", scene, "--points", "O", "G", "A"]) == (EXIT_OK, "between = false\n")


def test_between_not_collinear(scene):
    code, _ = dispatch(["between", "--scene", scene, "--points", "O", "P", "G"])
    assert code == EXIT_UNDEFINED


def test_barycenter(scene):
    argv = ["barycenter", "--scene", scene, "--point", "O", "1/2", "--point", "G", "1/2"]
    assert dispatch(argv) == (EXIT_OK, "M = (1, 0)\n")
    assert dispatch(argv + ["--origin", "D"]) == (EXIT_OK, "M = (1, 0)\n")


def test_barycenter_affine_note(scene):
    assert dispatch(["barycenter", "--scene", scene, "--point", "O", "2", "--point", "G", "-1"]) == (
        EXIT_OK,
        "M = (-2, 0)\nnote = affine (not convex) combination\n",
    )


def test_barycenter_weights_must_sum_to_one(scene, capsys):
    code, _ = dispatch(["barycenter", "--scene", scene, "--point", "O", "1/2", "--point", "G", "1/4"])
    assert code == EXIT_UNDEFINED
    assert capsys.readouterr().err == "error: weights sum to 3/4, not 1\n"


def test_project_degenerate_line(scene):
    code, _ = dispatch(["project", "--scene", scene, "--line", "O", "O", "--point", "P"])
    assert code == EXIT_UNDEFINED


def test_approx(scene):
    code, out = dispatch(["project", "--scene", scene, "--line", "O", "G", "--point", "P", "--approx", "3"])
    assert code == EXIT_OK
    assert out == "t = 1/2 ~ 0.500\nW = (1, 0)\nresidual_sq = 9 ~ 9.000\nmeasure ~ 3.000\n"


# === Vectors ===

def test_vadd(scene):
    argv = ["vadd", "--scene", scene, "--arrow", "A", "B", "--arrow", "O", "G"]
    assert dispatch(argv) == (EXIT_OK, "vector = (3, 1)\n")
    assert dispatch(argv + ["--at", "P"]) == (EXIT_OK, "vector = (3, 1)\n")


# === Check subcommand ===

def test_check_sign_flipped_reports_failures():
    code, out = dispatch(["check", "--suite", "axiom", "--model", "sign-flipped", "--trials", "20"])
    assert code == EXIT_CHECK_FAILED
    assert "CHECK axiom1.positive_definite trials=20 failures=0" not in out
    assert "counterexample trial=" in out


def test_check_weighted():
    code, out = dispatch([
        "check", "--suite", "axiom", "--model", "weighted", "--weights", "1", "3/2",
        "--trials", "10", "--dim", "2",
    ])
    assert code == EXIT_OK
    assert "failures=0" in out


def test_check_zero_trials():
    assert dispatch(["check", "--trials", "0"]) == (EXIT_OK, "")


# === Usage and scene errors ===

@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["project", "--line", "O", "G", "--point", "P"],
    ["check", "--dim", "0"],
    ["check", "--model", "weighted", "--dim", "2"],
    ["check", "--model", "weighted", "--weights", "1", "--dim", "2"],
    ["scale", "--scene", "x", "--arrow", "A", "B", "--by", "1/0"],
])
def test_usage_errors(argv, capsys):
    code, out = dispatch(argv)
    assert (code, out) == (EXIT_USAGE, "")
    assert capsys.readouterr().err.startswith("error: ")


def test_scene_errors_exit_one(scene, write_scene, tmp_path):
    assert dispatch(["between", "--scene", scene, "--points", "O", "A", "Z"])[0] == EXIT_USAGE
    bad = write_scene("dim 2\npoint A 1\n", name="bad.txt")
    assert dispatch(["between", "--scene", bad, "--points", "A", "A", "A"])[0] == EXIT_USAGE
    missing = str(tmp_path / "missing.txt")
    assert dispatch(["between", "--scene", missing, "--points", "A", "B", "C"])[0] == EXIT_USAGE


def test_add_needs_two_arrows(scene):
    assert dispatch(["add", "--scene", scene, "--arrow", "A", "B"])[0] == EXIT_USAGE


def test_help_goes_to_stdout(capsys):
    code, out = dispatch(["--help"])
    assert code == EXIT_OK
    assert out.startswith("usage: arrows")
    assert "distance" in out
    assert capsys.readouterr().out == ""

    code, out = dispatch(["project", "--help"])
    assert code == EXIT_OK
    assert "--line" in out


def test_main_writes_stdout(scene, capsys):
    assert main(["between", "--scene", scene, "--points", "O", "A", "G"]) == EXIT_OK
    assert capsys.readouterr().out == "between = true\n"
