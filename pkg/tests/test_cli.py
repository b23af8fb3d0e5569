import json

import pytest

from hyperasym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify(capsys):
    code, out = run(capsys, "classify", "--a", "1/3", "--b", "5/7")
    assert code == 0
    d = json.loads(out)
    assert d["is_E_function"] is True


def test_eval_stable_under_extra_precision(capsys):
    code, out1 = run(capsys, "eval", "Gamma(1/3)", "--prec", "30")
    assert code == 0
    v30 = json.loads(out1)["value"]
    code, out2 = run(capsys, "eval", "Gamma(1/3)", "--prec", "40")
    v40 = json.loads(out2)["value"]
    assert v40.startswith(v30[:28])


def test_eval_unit(capsys):
    code, out = run(capsys, "eval", "Pi*InvPi")
    assert code == 0
    assert json.loads(out)["value"] == "1.0"


def test_expand_trivial(capsys):
    code, out = run(capsys, "expand", "--a", "1", "--b", "1", "--terms", "6")
    assert code == 0
    d = json.loads(out)
    assert len(d["expansion"]["terms"]) == 1
    for chk in d["checks"]:
        assert float(chk["rel_err"]) < 1e-40


def test_json_byte_stable(capsys):
    _, out1 = run(capsys, "classify", "--a", "1/3,1/2", "--b", "5/7,3/4")
    _, out2 = run(capsys, "classify", "--a", "1/3,1/2", "--b", "5/7,3/4")
    assert out1 == out2


def test_malformed_rational_exits_2(capsys):
    code = main(["continue", "--a", "1,,bogus", "--b", "2"])
    assert code == 2


def test_wrong_shape_exits_2(capsys):
    code = main(["expand", "--a", "1/2,1/3", "--b", "5/7"])
    assert code == 2


def test_unknown_suite_exits_2():
    with pytest.raises(SystemExit) as ei:
        main(["verify", "nonsense"])
    assert ei.value.code == 2


def test_verify_identities(capsys):
    code, out = run(capsys, "verify", "identities", "--terms", "30")
    assert code == 0
    assert json.loads(out)["status"] == "ok"


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code = main(["classify", "--a", "1/3", "--b", "5/7", "--out", str(path)])
    assert code == 0
    assert json.loads(path.read_text())["is_E_function"] is True
