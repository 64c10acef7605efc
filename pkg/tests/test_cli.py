import io as stdio
import json
import subprocess
import sys

import pytest

from gwa import io
from gwa.cli import main
from gwa.core import StructureError, validate_gwa

P = io.fixture_path


def run(*argv):
    out = stdio.StringIO()
    code = main([str(a) for a in argv], out)
    return code, out.getvalue()


@pytest.fixture
def bad_action(tmp_path):
    # Z2 with 1^1 = 0: 1^(1+1) = 1 but (1^1)^1 = 0
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"name": "bad", "order": 2, "add": [[0, 1], [1, 0]],
                                "neg": [0, 1], "act": [[0, 0], [1, 0]]}))
    return path


def test_validate_ok():
    code, out = run("validate", P("s3_conj"))
    assert code == 0 and out.strip() == "ok"


def test_validate_failure_names_law_and_witness(bad_action):
    code, out = run("validate", bad_action)
    assert code == 1
    assert "eps-1 (1,1,1)" in out.splitlines()


def test_validate_json(bad_action):
    code, out = run("validate", bad_action, "--json")
    data = json.loads(out)
    assert code == 1 and data["ok"] is False
    assert {"law": "eps-1", "witness": [1, 1, 1]} in data["violations"]


def test_validate_reduced():
    assert run("validate", P("z2"), "--reduced")[0] == 0
    assert run("validate", P("s3_conj"), "--reduced")[0] == 1


@pytest.mark.parametrize("content", ["{not json", "[1, 2]", '{"name": "x", "order": 2}',
                                     '{"name": "x", "order": 3, "add": [[0, 1], [1, 0]], '
                                     '"neg": [0, 1], "act": [[0, 0], [1, 1]]}',
                                     '{"name": "x", "order": 2, "add": [[0, 5], [1, 0]], '
                                     '"neg": [0, 1], "act": [[0, 0], [1, 1]]}'])
def test_validate_malformed(tmp_path, content, capsys):
    path = tmp_path / "m.json"
    path.write_text(content)
    assert run("validate", path)[0] == 2
    assert capsys.readouterr().err.startswith("error:")


def test_validate_missing_file(tmp_path):
    assert run("validate", tmp_path / "absent.json")[0] == 2


def test_check_action():
    assert run("check-action", P("z2"), P("z2"), P("z2_self_action")) == (0, "ok\n")
    code, out = run("check-action", P("z2"), P("z2"), P("z2_naive"))
    assert code == 1
    assert any(line.startswith("(1_B) ") for line in out.splitlines())


def test_check_action_reduced():
    assert run("check-action", P("z2"), P("z2"), P("z2_self_action"), "--reduced")[0] == 0
    assert run("check-action", P("s3_conj"), P("s3_conj"), P("s3_conj_self_action"),
               "--reduced")[0] == 2


def test_check_action_name_mismatch():
    assert run("check-action", P("z3"), P("z2"), P("z2_self_action"))[0] == 2


def test_semidirect_writes_product(tmp_path):
    out = tmp_path / "e.json"
    code, text = run("semidirect", P("z2"), P("z2"), P("z2_self_action"), "--out", out)
    assert code == 0 and "order 4" in text
    e = io.load_algebra(out)
    assert e.order == 4 and validate_gwa(e).ok


def test_semidirect_json(tmp_path):
    out = tmp_path / "e.json"
    code, text = run("semidirect", P("s3_conj"), P("s3_conj"), P("s3_conj_self_action"),
                     "--out", out, "--json")
    assert code == 0 and json.loads(text)["order"] == 36


def test_semidirect_invalid_writes_nothing(tmp_path):
    out = tmp_path / "e.json"
    code, text = run("semidirect", P("z2"), P("z2"), P("z2_naive"), "--out", out)
    assert code == 1 and text.strip() != "ok"
    assert not out.exists()


def test_semidirect_unwritable_output(tmp_path):
    out = tmp_path / "missing-dir" / "e.json"
    assert run("semidirect", P("z2"), P("z2"), P("z2_self_action"), "--out", out)[0] == 2


def test_audit_literal_z2():
    code, out = run("audit", P("z2"), P("z2"), "--theorem", "3.3")
    lines = out.splitlines()
    assert code == 1
    assert lines[0] == "theorem 3.3: agree 4090/4096"
    assert len(lines) == 7


def test_audit_filtered_z2():
    code, out = run("audit", P("z2"), P("z2"), "--filter", "0_A^b=0_A")
    assert code == 0 and out.strip() == "theorem 3.3: agree 1024/1024"


def test_audit_sampled_z3_json():
    code, out = run("audit", P("z3"), P("z3"), "--theorem", "4.3", "--seed", "1",
                    "--samples", "20000", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["total"] == 20000 and data["seed"] == 1 and data["disagreements"] == []


def test_audit_errors():
    assert run("audit", P("s3_conj"), P("z2"), "--theorem", "4.3")[0] == 2
    assert run("audit", P("z3"), P("z3"))[0] == 2  # too big without a seed


def test_enumerate_self_actions():
    code, out = run("enumerate", P("z2"), "--what", "self-actions")
    assert code == 0
    (line,) = out.splitlines()
    assert json.loads(line)["act"] == [[0, 0], [1, 1]]
    code, out = run("enumerate", P("trivial"), "--what", "self-actions")
    assert len(out.splitlines()) == 1


def test_enumerate_ideals():
    code, out = run("enumerate", P("s3_conj"), "--what", "ideals")
    members = [json.loads(line)["members"] for line in out.splitlines()]
    assert code == 0 and [0, 3, 4] in members and len(members) == 3
    assert run("enumerate", P("trivial"), "--what", "ideals")[1].count("\n") == 1


def test_bad_usage_exits_2():
    with pytest.raises(SystemExit) as e:
        main(["audit", str(P("z2")), str(P("z2")), "--theorem", "9.9"])
    assert e.value.code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "gwa", "validate", str(P("z3"))],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "ok"


@pytest.mark.parametrize("name", io.FIXTURES)
def test_algebra_json_roundtrip_is_byte_identical(name, tmp_path):
    text = P(name).read_text(encoding="utf-8")
    g = io.load_algebra(P(name))
    out = tmp_path / "g.json"
    io.save_algebra(g, out)
    assert out.read_text(encoding="utf-8") == text
    assert io.dumps(json.loads(text)) + "\n" == text


def test_triple_and_subset_roundtrip(tmp_path, s3c):
    t = io.load_triple(P("s3_conj_self_action"), s3c, s3c)
    io.save_triple(t, tmp_path / "t.json")
    assert (tmp_path / "t.json").read_text() == P("s3_conj_self_action").read_text()
    s = io.subset_from_dict({"algebra": "S3-conj", "members": [0, 3, 4]}, s3c)
    assert io.subset_from_dict(io.subset_to_dict(s), s3c) == s


def test_subset_errors(s3c):
    with pytest.raises(StructureError):
        io.subset_from_dict({"algebra": "Z2", "members": [0]}, s3c)
    with pytest.raises(StructureError):
        io.subset_from_dict({"algebra": "S3-conj", "members": "0,3"}, s3c)
