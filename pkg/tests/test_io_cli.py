import json
import subprocess
import sys

import pytest

from fimhom import cli, suites
from fimhom import linalg as la
from fimhom.errors import FormatError, InvariantError, UsageError
from fimhom.io import dumps_module, load_module, loads_module, module_to_dict, save_module
from fimhom.modules import concentrated_module, coregular_module, external_tensor, free_module
from fimhom.report import Report
from fimhom.suites import SuiteConfig, parse_t, parse_t_range, run_suite


def sample_modules():
    yield free_module((1,), (3,))
    yield concentrated_module((2,), (3,), "sign")
    yield coregular_module((1, 1))
    yield external_tensor(free_module((1,), (2,)), concentrated_module((1,), (1,), "regular"))


def test_round_trip_byte_exact(tmp_path):
    for k, V in enumerate(sample_modules()):
        text = dumps_module(V)
        W = loads_module(text)
        assert W.dims == V.dims
        assert all(W.gen(g) == V.gen(g) for g in V.cat.generators())
        assert dumps_module(W) == text
        path = tmp_path / f"v{k}.json"
        save_module(V, path)
        assert path.read_bytes() == text.encode("utf-8")
        assert dumps_module(load_module(path)) == text


def test_rationals_in_files():
    V = free_module((0,), (1,))
    data = module_to_dict(V)
    data["actions"][0]["matrix"] = [["1/2"]]
    W = loads_module(json.dumps(data), check=False)
    assert W.gen(W.cat.generators()[0])[0, 0] == la.rat(1) / 2
    data["actions"][0]["matrix"] = [["2/4"]]
    with pytest.raises(FormatError, match="1/2"):
        loads_module(json.dumps(data))
    data["actions"][0]["matrix"] = [[1]]
    with pytest.raises(FormatError, match="strings"):
        loads_module(json.dumps(data))


def test_shape_diagnostic():
    data = module_to_dict(free_module((1,), (2,)))
    data["actions"][-1]["matrix"] = [["1"]]
    with pytest.raises(FormatError, match="shape"):
        loads_module(json.dumps(data))


def test_order_and_syntax_diagnostics():
    data = module_to_dict(free_module((1,), (2,)))
    data["dims"].reverse()
    with pytest.raises(FormatError, match="canonical order"):
        loads_module(json.dumps(data))
    with pytest.raises(FormatError, match="line 1 column"):
        loads_module("{")
    with pytest.raises(FormatError, match="missing field"):
        loads_module("{}")


def test_non_functor_file_is_invariant_error():
    data = module_to_dict(concentrated_module((2,), (2,), "regular"))
    for rec in data["actions"]:
        if rec["gen"]["kind"] == "transposition":
            rec["matrix"] = [["1", "1"], ["0", "1"]]
    with pytest.raises(InvariantError):
        loads_module(json.dumps(data))
    loads_module(json.dumps(data), check=False)


def test_parse_truncations():
    assert parse_t("3") == (3,)
    assert parse_t("2,3") == (2, 3)
    assert parse_t_range("2..4", None) == [(2,), (3,), (4,)]
    assert parse_t_range("2,2..3,3", None) == [(2, 2), (3, 3)]
    with pytest.raises(UsageError):
        parse_t("a")


def test_report_is_sorted_and_stable():
    r = Report("x", {"seed": 1})
    r.check("b", True, table={(1,): 2})
    r.add("a", "RECORDED", n=3)
    text = r.to_json()
    assert [c["name"] for c in json.loads(text)["cases"]] == ["a", "b"]
    assert json.loads(text)["summary"]["PASS"] == 1
    with pytest.raises(ValueError):
        r.add("c", "MAYBE")


def test_reports_deterministic():
    cfg = SuiteConfig("adjunction", None, None, None, None, 7, None)
    assert run_suite(cfg).to_json() == run_suite(cfg).to_json()


def test_cli_verify_ok(tmp_path, capsys):
    out = tmp_path / "rep.json"
    assert cli.main(["verify", "bar-formula", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["summary"]["FAIL"] == 0 and data["suite"] == "bar-formula"
    assert "PASS" in capsys.readouterr().out


def test_cli_usage_errors(capsys):
    assert cli.main(["verify", "no-such-suite"]) == 2
    assert cli.main(["verify", "theta", "--t", "x"]) == 2
    assert cli.main(["frobnicate"]) == 2
    assert cli.main(["compute", "shift"]) == 2
    assert cli.main(["compute", "shift", "--in", "/nonexistent/file.json"]) == 2


def test_cli_seed_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("FIMHOM_SEED", "11")
    out = tmp_path / "rep.json"
    assert cli.main(["verify", "kron-algebra", "--seed", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["config"]["seed"] == 11
    monkeypatch.setenv("FIMHOM_SEED", "eleven")
    assert cli.main(["verify", "kron-algebra"]) == 2


def test_cli_fail_exit_code(monkeypatch):
    def failing(cfg):
        rep = Report(cfg.suite, cfg.echo())
        rep.check("always", False)
        return rep

    monkeypatch.setitem(suites.SUITES, "kron-algebra", failing)
    assert cli.main(["verify", "kron-algebra"]) == 1


def test_cli_invariant_exit_code(tmp_path):
    data = module_to_dict(concentrated_module((2,), (2,), "regular"))
    for rec in data["actions"]:
        if rec["gen"]["kind"] == "transposition":
            rec["matrix"] = [["2", "0"], ["0", "1"]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    assert cli.main(["compute", "shift", "--in", str(path)]) == 3


def test_cli_compute_ops(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    save_module(free_module((1,), (2,)), a)
    save_module(concentrated_module((1,), (2,)), b)
    for op in ["coind", "shift", "nakayama", "torsion"]:
        out = tmp_path / f"{op}.json"
        assert cli.main(["compute", op, "--in", str(a), "--i", "1", "--out", str(out)]) == 0
        load_module(out)
    out = tmp_path / "coind.json"
    # coind M([1]) ≅ M([1]) ⊕ M([2])
    assert load_module(out).dim_vector() == [0, 1, 4]
    out = tmp_path / "tensor.json"
    assert cli.main(["compute", "tensor", "--in", str(a), "--in", str(b), "--out", str(out)]) == 0
    assert load_module(out).m == 2
    out = tmp_path / "ext.json"
    assert cli.main(["compute", "ext1", "--v", str(b), "--w", str(a), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["cases"][0]["details"]["dim"] == 1
    assert cli.main(["compute", "coind", "--in", str(a), "--i", "2"]) == 2


def test_console_script_runs():
    r = subprocess.run([sys.executable, "-m", "fimhom", "verify", "kron-algebra", "--t", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert "PASS" in r.stdout
