import json

import pytest

from abideal import cli
from abideal.checks import CheckResult, TypeReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_info_text(capsys):
    code, out = run(capsys, "info", "G2")
    assert code == 0
    assert "dual coxeter number" in out
    assert "abelian ideals" in out and " 4" in out


def test_info_deterministic(capsys):
    _, first = run(capsys, "info", "E6")
    _, second = run(capsys, "info", "E6")
    assert first == second


def test_ideals_text(capsys):
    code, out = run(capsys, "ideals", "B2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# 4 abelian ideals of type B2"
    assert lines[1] == "0 dim=0 phi=- coset=- roots=-"
    assert len(lines) == 5


def test_ideals_json_schema(capsys):
    code, out = run(capsys, "ideals", "C3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["type"] == "C3" and doc["count"] == 8
    assert len(doc["ideals"]) == 8
    zero = doc["ideals"][0]
    assert zero["dim"] == 0 and zero["param"] is None and zero["assoc_long_root"] is None
    for item in doc["ideals"][1:]:
        assert item["roots"] == sorted(item["roots"])
        assert item["param"]["phi"] == item["assoc_long_root"]
        assert isinstance(item["param"]["coset_word"], list)


def test_ideals_json_deterministic(capsys):
    _, first = run(capsys, "ideals", "D4", "--json")
    _, second = run(capsys, "ideals", "D4", "--json")
    assert first == second


def test_verify_single_pass(capsys):
    code, out = run(capsys, "verify", "A2")
    assert code == 0
    assert out.startswith("== A2 ==")
    assert "normalization        PASS" in out
    assert out.rstrip().endswith("(17 checks over 1 type)")


def test_verify_json(capsys):
    code, out = run(capsys, "verify", "G2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["passed"] is True
    names = [c["name"] for c in doc["checks"]]
    assert names[0] == "normalization"
    assert "kostant" in names and "facet_ratios" in names
    assert all(c["passed"] for c in doc["checks"])


def test_verify_reports_failure_exit_code(capsys, monkeypatch):
    broken = TypeReport("G2", (CheckResult("normalization", False, "forced"),))
    monkeypatch.setattr(cli, "verify_type", lambda label: broken)
    code, out = run(capsys, "verify", "G2")
    assert code == 1
    assert "FAIL" in out


def test_verify_requires_exactly_one_target(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "A2", "--all"])
    assert exc.value.code == 2


def test_invalid_type_is_usage_error(capsys):
    for bad in ("Z9", "A12", "B1", "e6", "D3"):
        with pytest.raises(SystemExit) as exc:
            cli.main(["info", bad])
        assert exc.value.code == 2
    err = capsys.readouterr().err
    assert "valid families" in err


def test_hasse_writes_dot(tmp_path, capsys):
    target = tmp_path / "out.dot"
    code, out = run(capsys, "hasse", "A2", "--dot", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.startswith("graph hasse_A2 {")
    assert 'rim="11"' in text

    code, out = run(capsys, "hasse", "G2", "--dot", "-")
    assert code == 0
    assert out.startswith("graph hasse_G2 {") and "rim" not in out


def test_hasse_dot_deterministic(tmp_path):
    a = tmp_path / "a.dot"
    b = tmp_path / "b.dot"
    cli.main(["hasse", "B3", "--dot", str(a)])
    cli.main(["hasse", "B3", "--dot", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_tables_text(capsys):
    code, out = run(capsys, "tables", "--max-rank", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["type", "g-1", "roots", "long", "max", "mult",
                                "decomposition", "witness", "sum1", "sum2"]
    assert any(line.startswith("F4 ") for line in lines)
    assert not any(line.startswith("B5") for line in lines)


def test_tables_json(capsys):
    code, out = run(capsys, "tables", "--json", "--max-rank", "3")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    by_type = {r["type"]: r for r in doc["rows"]}
    assert by_type["G2"]["max_dim"] == 3
    assert by_type["B3"]["max_dim"] == 5
    assert by_type["C3"]["first_sum"]["total"] == 7


def test_young_summary(capsys):
    code, out = run(capsys, "young", "3")
    assert code == 0
    assert "8 = 2^3" in out


def test_young_list(capsys):
    code, out = run(capsys, "young", "2", "--list")
    assert code == 0
    assert out.splitlines() == ["0 00 -", "1 01 1", "2 10 1,1", "3 11 2"]


def test_young_encode_golden(capsys):
    code, out = run(capsys, "young", "11", "--encode", "5,4,4,4,4,3,2")
    assert code == 0
    assert out == "11010100001 = 1697\n"


def test_young_encode_hook_too_big(capsys):
    code, out = run(capsys, "young", "3", "--encode", "4,1")
    assert code == 1
    assert "hook" in out


def test_young_rank_bounds(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["young", "12"])
    assert exc.value.code == 2
