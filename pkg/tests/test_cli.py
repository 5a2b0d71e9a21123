import io
import json
import subprocess
import sys
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from actshell.cli import main
from actshell.reference import FACET_TABLE

DATA = Path(__file__).parent / "data"
M0 = DATA / "m0.json"

GOLDEN = {
    "m0_validate.json": ["validate"],
    "m0_activity.json": ["activity"],
    "m0_tutte.json": ["tutte"],
    "m0_orders.json": ["orders"],
    "m0_orders_int.json": ["orders", "--kind", "int"],
    "m0_orders_ext5.json": ["orders", "--kind", "extint", "--extensions", "5", "--seed", "0"],
    "m0_complex.json": ["complex"],
    "m0_complex_reduced.json": ["complex", "--reduced"],
    "m0_shell-check.json": ["shell-check"],
    "m0_shell_sample_int.json": ["shell-check", "--order", "sample-int:50"],
    "m0_hvector.json": ["hvector"],
    "m0_hvector_in.json": ["hvector", "--which", "in"],
    "m0_topology.json": ["topology"],
}


def run(argv, stdin=None):
    buf = io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        with redirect_stdout(buf):
            code = main(argv)
    finally:
        sys.stdin = old
    return code, buf.getvalue()


@pytest.mark.parametrize("golden,argv", sorted(GOLDEN.items()))
def test_golden(golden, argv):
    code, out = run(argv + ["-i", str(M0)])
    assert code == 0
    assert out == (DATA / "golden" / golden).read_text()


def test_documented_examples():
    _, out = run(["tutte", "-i", str(M0)])
    assert out.strip() == '[{"i":3,"j":0,"c":1},{"i":2,"j":0,"c":2},{"i":1,"j":0,"c":1},{"i":1,"j":1,"c":2},{"i":0,"j":1,"c":1},{"i":0,"j":2,"c":1}]'
    _, out = run(["topology", "-i", str(M0)])
    assert json.loads(out) == {"class": "contractible-u31"}
    _, out = run(["shell-check", "--order", "lex", "--which", "act", "-i", str(M0)])
    rep = json.loads(out)
    assert rep["is_shelling"]
    assert rep["restriction_sets"] == [FACET_TABLE[w][2] for w in sorted(FACET_TABLE)]


def test_graph_and_uniform_descriptors():
    _, a = run(["activity", "-i", str(DATA / "m0_graph.json")])
    _, b = run(["activity", "-i", str(M0)])
    assert a == b
    _, out = run(["topology", "-i", str(DATA / "u32.json")])
    assert json.loads(out) == {"class": "sphere", "dim": 1}


def test_stdin():
    code, out = run(["tutte"], stdin=M0.read_text())
    assert code == 0 and out == (DATA / "golden" / "m0_tutte.json").read_text()


def test_order_file(tmp_path):
    p = tmp_path / "order.json"
    p.write_text(json.dumps([[1, 2, 4], [1, 3, 5], [1, 2, 5], [1, 3, 4], [2, 3, 4], [2, 3, 5], [2, 4, 5], [3, 4, 5]]))
    code, out = run(["shell-check", "--which", "in", "--order", f"file:{p}", "-i", str(M0)])
    assert code == 0 and json.loads(out)["failure_index"] == 1


def test_sampled_extint_orders_all_shell():
    code, out = run(["shell-check", "--order", "sample-extint:100", "--seed", "4", "-i", str(M0)])
    rep = json.loads(out)
    assert code == 0 and rep["all_shellings"] and rep["failures"] == []


def test_determinism():
    argv = ["shell-check", "--order", "sample-int:30", "--seed", "9", "-i", str(M0)]
    assert run(argv) == run(argv)


class TestErrors:
    def test_invalid_matroid_exit_2(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text(json.dumps({"type": "bases", "n": 3, "bases": [[1, 2], [3]]}))
        code, out = run(["validate", "-i", str(p)])
        assert code == 2 and json.loads(out)["error"]["code"] == "UnequalSizes"

    def test_exchange_failure_has_witness(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text(json.dumps({"type": "bases", "n": 4, "bases": [[1, 2], [3, 4]]}))
        code, out = run(["validate", "-i", str(p)])
        err = json.loads(out)["error"]
        assert code == 2 and err["code"] == "ExchangeAxiomViolated" and err["witness"]

    def test_order_file_with_non_basis(self, tmp_path):
        p = tmp_path / "order.json"
        p.write_text(json.dumps([[1, 2, 3]]))
        code, out = run(["shell-check", "--order", f"file:{p}", "-i", str(M0)])
        assert code == 2 and json.loads(out)["error"]["code"] == "NotABasis"

    def test_parse_error_exit_3(self, tmp_path):
        p = tmp_path / "junk.json"
        p.write_text("{not json")
        code, out = run(["validate", "-i", str(p)])
        assert code == 3 and json.loads(out)["error"]["code"] == "ParseError"

    @pytest.mark.parametrize("payload", ['{"type": "mystery"}', "[1, 2]", '{"type": "bases"}'])
    def test_malformed_descriptors(self, payload):
        code, _ = run(["validate"], stdin=payload)
        assert code == 3

    def test_missing_file(self):
        code, _ = run(["validate", "-i", "/nonexistent/m.json"])
        assert code == 3

    def test_unknown_order(self):
        code, _ = run(["shell-check", "--order", "weird", "-i", str(M0)])
        assert code == 3


def test_reproduce_in_process():
    code, out = run(["reproduce-paper"])
    rep = json.loads(out)
    assert code == 0 and rep["ok"] and all(c["ok"] for c in rep["checks"])


def test_console_script_and_module():
    a = subprocess.run(["actshell", "tutte", "-i", str(M0)], capture_output=True, text=True)
    b = subprocess.run([sys.executable, "-m", "actshell", "tutte", "-i", str(M0)], capture_output=True, text=True)
    assert a.returncode == b.returncode == 0 and a.stdout == b.stdout
    h = subprocess.run(["actshell", "complex", "--help"], capture_output=True, text=True)
    assert "-e for the" in h.stdout and "reduced_chi" in h.stdout
