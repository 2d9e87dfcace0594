"""End-to-end command-line interface tests (in-process)."""

import json

import pytest

from symchar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


class TestDecompose:
    def test_newell_littlewood_golden(self, capsys):
        code, out, _ = run(capsys, "decompose", "--product", "newell-littlewood-o", "1", "1")
        assert code == 0
        assert out == "[0] + [2] + [1,1]"

    def test_outer(self, capsys):
        code, out, _ = run(capsys, "decompose", "--product", "outer", "1", "1")
        assert code == 0
        assert out == "{2} + {1,1}"

    def test_kronecker(self, capsys):
        code, out, _ = run(capsys, "decompose", "--product", "kronecker", "2,1", "2,1")
        assert code == 0
        assert out == "{3} + {2,1} + {1,1,1}"

    def test_reduced(self, capsys):
        code, out, _ = run(capsys, "decompose", "--product", "reduced", "1", "1")
        assert code == 0
        assert out == "<0> + <1> + <2> + <1,1>"

    def test_rational(self, capsys):
        code, out, _ = run(capsys, "decompose", "--product", "rational", "1;1", "1;0")
        assert code == 0
        assert out == "{1;0~} + {2;1~} + {1,1;1~}"

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--product", "outer", "1", "1", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["terms"][0]["label"]["kind"] == "gl"
        assert {tuple(t["label"]["partition"]) for t in payload["terms"]} == {(2,), (1, 1)}

    def test_symfunc_expression_input(self, capsys):
        code, out, _ = run(capsys, "decompose", "--product", "outer", "s[1]+s[2]", "0")
        assert code == 0
        assert out == "{1} + {2}"


class TestBranchAndSeries:
    def test_branch(self, capsys):
        code, out, _ = run(capsys, "branch", "gl_to_o", "2")
        assert code == 0
        assert out == "[0] + [2]"

    def test_series(self, capsys):
        code, out, _ = run(capsys, "series", "C", "--cap", "2")
        assert code == 0
        assert out.splitlines() == ["degree 0: {0}", "degree 1: 0", "degree 2: -{2}"]


class TestCheck:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "check", "laplace", "inner", "--max-degree", "4")
        assert code == 0
        assert out.startswith("PASS")

    def test_fail_prints_witness(self, capsys):
        code, out, _ = run(capsys, "check", "laplace", "outer", "--max-degree", "3")
        assert code == 1
        assert "witness" in out

    def test_derived_pairing_name(self, capsys):
        code, out, _ = run(
            capsys, "check", "laplace", "derived:m:inner", "--max-degree", "3"
        )
        assert code == 0

    def test_alghom(self, capsys):
        code, out, _ = run(capsys, "check", "alghom", "antipode", "--max-degree", "3")
        assert code == 0


class TestHash:
    def test_named(self, capsys):
        code, out, _ = run(capsys, "hash", "--spec", "thibon", "1", "1")
        assert code == 0
        assert out == "{1} + {2} + {1,1}"

    def test_inline_json_spec(self, capsys):
        spec = json.dumps({"stages": [{"pairing": "inner", "cocycle": "m"}], "final": "id"})
        code, out, _ = run(capsys, "hash", "--spec", spec, "1", "1")
        assert code == 0
        assert out == "{0} + {2} + {1,1}"


class TestVertexAndFgl:
    def test_vertex_schur(self, capsys):
        code, out, _ = run(capsys, "vertex", "schur", "2,1")
        assert code == 0
        assert out.startswith("OK")

    def test_vertex_commutation(self, capsys):
        code, out, _ = run(capsys, "vertex", "check-commutation", "--cap", "3")
        assert code == 0
        assert out == "PASS"

    def test_fgl_loop(self, capsys):
        code, out, _ = run(capsys, "fgl", "loop", "gm", "3")
        assert code == 0
        assert out == "3*X + 3*X^2 + X^3"

    def test_fgl_loop_additive(self, capsys):
        code, out, _ = run(capsys, "fgl", "loop", "ga", "5")
        assert code == 0
        assert out == "5*X"

    def test_fgl_log(self, capsys):
        code, out, _ = run(capsys, "fgl", "log", "gm", "--cap", "3")
        assert code == 0
        assert out == "X - 1/2*X^2 + 1/3*X^3"

    def test_fgl_coproduct(self, capsys):
        code, out, _ = run(capsys, "fgl", "coproduct", "multiplicative", "1")
        assert code == 0
        assert out == "s[0](x)s[1] + s[1](x)s[0] + s[1](x)s[1]"


class TestTable:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "table", "3")
        assert code == 0
        assert "2,1" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "table", "3", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 3
        assert [3] in payload["classes"]
        row = {tuple(r["lam"]): r["values"] for r in payload["rows"]}
        assert row[(1, 1, 1)] == [1, -1, 1]

    def test_cache_round_trip(self, capsys, tmp_path):
        code1, out1, _ = run(capsys, "table", "4", "--cache-dir", str(tmp_path), "--json")
        assert code1 == 0
        cache_file = tmp_path / "sn-character-table-4.json"
        assert cache_file.exists()
        data = json.loads(cache_file.read_text())
        assert data["version"] == 1 and data["n"] == 4
        code2, out2, _ = run(capsys, "table", "4", "--cache-dir", str(tmp_path), "--json")
        assert code2 == 0
        assert out1 == out2


class TestExitCodes:
    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "decompose", "--product", "outer", "1,x", "1")
        assert code == 2

    def test_unknown_flag(self, capsys):
        code, _, _ = run(capsys, "decompose", "--banana", "1", "1")
        assert code == 2

    def test_resource_bound_flag(self, capsys):
        code, _, err = run(
            capsys, "--max-weight", "2", "decompose", "--product", "outer", "3", "1"
        )
        assert code == 3
        assert "resource" in err

    def test_resource_bound_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SYMCHAR_MAX_WEIGHT", "2")
        code, _, _ = run(capsys, "decompose", "--product", "outer", "3", "1")
        assert code == 3

    def test_table_resource_bound(self, capsys):
        code, _, _ = run(capsys, "table", "40")
        assert code == 3
