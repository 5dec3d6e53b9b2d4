import json
import subprocess
import sys
from importlib.resources import files

import jsonschema
import pytest

from homex.cli import run

SCHEMA = json.loads(files("homex").joinpath("schemas/report.schema.json").read_text())


def invoke(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def invoke_json(capsys, *argv):
    code, out, _ = invoke(capsys, *argv, "--json")
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return code, payload


@pytest.fixture
def mh(tmp_path, capsys):
    path = tmp_path / "mh.sc"
    assert invoke(capsys, "gen", "mh", "--d", 2, "--k", 1, "-o", path)[0] == 0
    return path


def test_schema_is_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_gen_then_homology(mh, capsys):
    assert "z" in mh.read_text()
    code, out, _ = invoke(capsys, "homology", mh, "--reduced")
    assert code == 0
    assert out.splitlines() == ["H_0: 0", "H_1: Z", "H_2: 0"]


def test_gen_to_stdout(capsys):
    code, out, _ = invoke(capsys, "gen", "ms", "--d", 2, "--k", 1)
    assert code == 0 and out.startswith("# ms d=2 k=1") and "w1" in out
    code, out, _ = invoke(capsys, "gen", "random", "--n", 5, "--d", 2, "--seed", 3, "--json")
    assert code == 0 and len(json.loads(out)["facets"]) == 6


def test_gen_random_is_seeded(capsys):
    a = invoke(capsys, "gen", "random", "--n", 6, "--d", 2, "--seed", 7)[1]
    b = invoke(capsys, "gen", "random", "--n", 6, "--d", 2, "--seed", 7)[1]
    assert a == b


def test_homology_json(mh, capsys):
    code, payload = invoke_json(capsys, "homology", mh)
    assert payload["betti"] == [1, 1, 0] and payload["groups"][1] == "Z"


def test_bounds(capsys):
    code, out, _ = invoke(capsys, "bounds", "--d", 3, "--k", 2, "--m", 3)
    assert code == 0
    assert out.splitlines() == ["pure: 6", "strong: 6", "rel(m=3): 6", "threshold: 2"]
    code, payload = invoke_json(capsys, "bounds", "--d", 3, "--k", 2, "--m", 3)
    assert (payload["pure"], payload["strong"], payload["rel"], payload["threshold"]) == (6, 6, 6, 2)


def test_bounds_below_threshold(capsys):
    code, out, _ = invoke(capsys, "bounds", "--d", 3, "--k", 2, "--m", 2)
    assert code == 0 and "n/a (m=2 must exceed the connectivity threshold 2" in out
    code, payload = invoke_json(capsys, "bounds", "--d", 3, "--k", 0)
    assert payload["strong"] is None and payload["pure"] == 8


def test_check(mh, capsys):
    code, payload = invoke_json(capsys, "check", mh, "--d", 2, "--k", 1)
    assert code == 0 and payload["meets_bound"] and payload["bound"] == 5
    code, payload = invoke_json(capsys, "check", mh, "--d", 2, "--k", 1, "--m", 2)
    assert payload["strongly_connected"] is False and payload["meets_bound"] is None


def test_components_and_growth(mh, capsys):
    code, payload = invoke_json(capsys, "components", mh, "--dim", 2)
    assert code == 0 and len(payload["components"]) == 2
    code, payload = invoke_json(capsys, "growth", mh, "--dim", 1)
    assert code == 0 and len(payload["facets"]) == 3
    code, out, err = invoke(capsys, "growth", mh, "--dim", 2)
    assert code == 1 and "2 strong components" in err


def test_collapse(tmp_path, capsys):
    path = tmp_path / "tri.sc"
    path.write_text("a b c\n")
    code, payload = invoke_json(capsys, "collapse", path, "--to", 0)
    assert payload["status"] == "collapsed" and len(payload["remaining"]) == 1
    path.write_text("a b\nb c\na c\n")
    code, payload = invoke_json(capsys, "collapse", path, "--to", 0, "--exhaustive")
    assert code == 0 and payload["status"] == "not_collapsible"


def test_nerve(mh, capsys):
    code, payload = invoke_json(capsys, "nerve", mh)
    assert payload["facets"] == [[0, 1], [0, 2], [1, 2]]
    assert payload["homology"]["betti"] == [0, 1]
    code, out, _ = invoke(capsys, "nerve", mh)
    assert "H_1: Z" in out


def test_verify(capsys):
    code, out, _ = invoke(capsys, "verify", "pure-bound", "--d", 2, "--k", 1)
    assert code == 0 and "n_min = 5 (bound 5): OK" in out
    code, payload = invoke_json(capsys, "verify", "strong-bound", "--d", 2, "--k", 1, "--jobs", 2)
    assert code == 0 and payload["n_min"] == 5 and payload["m"] == 2


def test_verify_capacity(capsys):
    code, _, err = invoke(capsys, "verify", "pure-bound", "--d", 2, "--k", 1, "--max-n", 4)
    assert code == 1 and "no witness" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "mh", "--d", "2"],
        ["gen", "random", "--d", "2"],
        ["gen", "ms", "--d", "2", "--k", "0"],
        ["bounds", "--d", "1", "--k", "2"],
        ["verify", "pure-bound", "--d", "1", "--k", "3"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(argv) == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        run(["frobnicate"])
    assert info.value.code == 2


def test_parse_error_cites_line(tmp_path, capsys):
    path = tmp_path / "bad.sc"
    path.write_text("0 1 2\n\n3 3\n")
    code, _, err = invoke(capsys, "homology", path)
    assert code == 2 and f"{path}:3" in err


def test_missing_input(tmp_path, capsys):
    assert invoke(capsys, "homology", tmp_path / "none.sc")[0] == 2


def test_precondition_exit_1(tmp_path, capsys):
    path = tmp_path / "mixed.sc"
    path.write_text("0 1 2\n2 3\n")
    code, _, err = invoke(capsys, "components", path, "--dim", 2)
    assert code == 1 and "dimension" in err


def test_module_entry_point(mh):
    proc = subprocess.run([sys.executable, "-m", "homex", "homology", str(mh), "--json"],
                          capture_output=True, text=True, check=True)
    jsonschema.validate(json.loads(proc.stdout), SCHEMA)
