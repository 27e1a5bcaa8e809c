import io
import json
import shutil
from pathlib import Path

import pytest

from splitmat.cli import main

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def workdir(tmp_path, data_dir, monkeypatch):
    shutil.copy(data_dir / "r8.gfp", tmp_path / "R8.gfp")
    shutil.copy(data_dir / "split_disconnects.gfp", tmp_path / "SD.gfp")
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(*argv):
    out, err = io.BytesIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue().decode(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    assert code == 0, err
    return json.loads(out)["result"]


def test_circuits_golden(workdir):
    code, out, _ = run("circuits", "R8.gfp")
    assert code == 0
    assert out == (GOLDEN / "r8_circuits.txt").read_text()
    assert run("circuits", "R8.gfp") == (code, out, "")


def test_info(workdir):
    res = run_json("info", "R8.gfp")
    assert res == {"p": 3, "rows": 4, "cols": 8, "rank": 4, "loops": [], "coloops": [], "connected": True}


def test_rank_and_bases(workdir):
    assert run_json("rank", "R8.gfp", "--set", "1,3,5,7")["rank"] == 3
    assert len(run_json("bases", "R8.gfp")["bases"]) == 58


def test_split_then_circuits(workdir):
    code, _, err = run("split", "R8.gfp", "--a", "3", "--b", "5", "--alpha", "1", "--element", "--out", "A35.gfp")
    assert code == 0, err
    assert (workdir / "A35.gfp").read_text().splitlines()[-1] == "0 0 1 0 1 0 0 0 1"
    res = run_json("circuits", "A35.gfp")
    assert len(res["circuits"]) == 26
    assert ["1", "3", "5", "7", "9"] in res["circuits"]


def test_split_disconnects(workdir):
    run("split", "SD.gfp", "--a", "1", "--b", "4", "--out", "SD14.gfp")
    res = run_json("connectivity", "SD14.gfp", "--n", "2")
    assert res["n-connected"] is False
    assert res["separation"] == {"S": ["1", "4", "5", "8"], "T": ["2", "3", "6", "7"], "k": 1, "defect": 0}
    assert run_json("connectivity", "SD.gfp")["n-connected"] is True


def test_classify(workdir):
    res = run_json("classify", "R8.gfp", "--a", "3", "--b", "5")
    assert len(res["np-circuits"]) == 15
    assert len(res["p-circuits"]) == 2
    assert len(res["untouched"]) == 3
    assert res["trivial splitting"] is False


def test_eulerian_hamiltonian(workdir):
    res = run_json("eulerian", "R8.gfp", "--all")
    assert res["eulerian"] is True
    assert {"parts": [["1", "3", "5", "7"], ["2", "4", "6", "8"]]} in res["decompositions"]
    assert run_json("hamiltonian", "R8.gfp")["circuit"] == ["1", "2", "3", "4", "5"]


def test_verify_all(workdir):
    code, out, err = run("verify", "R8.gfp", "--a", "3", "--b", "5", "--alpha", "1", "--theorem", "all")
    assert code == 0, err
    res = run_json("verify", "R8.gfp", "--a", "3", "--b", "5", "--theorem", "all")
    assert set(res) == {"3.1", "3.2", "4.1", "4.2", "4.3"}
    assert all(r["holds"] for r in (res["3.1"], res["3.2"], res["4.1"], res["4.3"]))
    assert all(r["holds"] for r in res["4.2"]["reports"])
    assert res["4.3"]["witness"] == [["1", "2", "3", "4", "6"], ["1", "2", "3", "4", "6", "9"]]


def test_verify_precondition(workdir):
    res = run_json("verify", "SD.gfp", "--a", "1", "--b", "4")
    assert res["3.2"] == {"skipped": "precondition: matroid is not 3-connected"}
    code, _, err = run("verify", "SD.gfp", "--a", "1", "--b", "4", "--theorem", "3.2")
    assert code == 1 and err.startswith("ERROR PreconditionFailed:")


def test_sweep(workdir):
    res = run_json("sweep", "--seed", "3", "--count", "10")
    assert res["instances"] == 10 and res["falsified"] is False
    assert run("sweep", "--seed", "3", "--count", "10") == run("sweep", "--seed", "3", "--count", "10")


def test_exit_codes(workdir):
    (workdir / "bad.gfp").write_text("p 4\nrows 1\ncols 1\n1\n")
    code, out, err = run("info", "bad.gfp")
    assert code == 1 and out == ""
    assert err.startswith("ERROR NotPrime:") and err.count("\n") == 1
    assert run("info", "missing.gfp")[0] == 1
    assert run("split", "R8.gfp", "--a", "3", "--b", "3")[0] == 1
    assert run("frobnicate")[0] == 2
    assert run("split", "R8.gfp")[0] == 2


def test_falsified_exit_code(workdir, monkeypatch):
    from splitmat import cli
    from splitmat.errors import FalsifiedTheorem
    from splitmat.structure import TheoremReport

    def boom(M, s):
        raise FalsifiedTheorem("P4_1: forced", TheoremReport("P4_1", True, False))

    monkeypatch.setattr(cli, "verify_prop_4_1", boom)
    code, out, _ = run("verify", "R8.gfp", "--a", "3", "--b", "5", "--theorem", "4.1")
    assert code == 3
    assert "falsified" in out


def test_size_limit_env(workdir, monkeypatch):
    monkeypatch.setenv("SPLITMAT_MAX_GROUND_SET", "5")
    code, _, err = run("circuits", "R8.gfp")
    assert code == 1 and err.startswith("ERROR SizeLimitExceeded:")
