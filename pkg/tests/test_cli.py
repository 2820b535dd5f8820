import io
import subprocess
import sys

import pytest

from cubictsp.cli import run
from cubictsp.generators import gadget_cycle, petersen


def call(*argv):
    out = io.StringIO()
    rc = run([str(a) for a in argv], out)
    return rc, out.getvalue()


@pytest.fixture
def gadget2(tmp_path):
    path = tmp_path / "g2.txt"
    path.write_text(gadget_cycle(2).to_text())
    return path


def test_count(gadget2):
    assert call("count", gadget2) == (0, "16\n")


def test_solve_gadget(gadget2):
    rc, text = call("solve", gadget2, "--stats")
    assert rc == 0
    assert text.splitlines()[0] == "cost 12"
    assert any(line.startswith("branch_nodes=") for line in text.splitlines())


def test_petersen_is_infeasible(tmp_path):
    path = tmp_path / "p.txt"
    path.write_text(petersen().to_text())
    assert call("solve", path) == (1, "infeasible\n")


def test_list_stream_and_explicit(gadget2):
    rc, text = call("list", gadget2)
    assert rc == 0
    lines = text.splitlines()
    assert lines.count("C") == 16 and lines.count(".") == 16
    rc, text = call("list", gadget2, "--explicit")
    assert len(set(text.splitlines())) == 16


def test_gen_round_trip(tmp_path):
    path = tmp_path / "t.txt"
    assert call("gen", "torus_dual", 3, 4, "-o", path)[0] == 0
    rc, text = call("solve", path)
    assert rc == 0 and text.startswith("cost 24")


def test_gen_is_deterministic():
    assert call("gen", "random_cubic", 20, "--seed", 9) == call("gen", "random_cubic", 20, "--seed", 9)


def test_verify_random():
    rc, text = call("verify", "--random", 20, "--n", 8, "--seed", 1)
    assert rc == 0 and text.strip() == "OK"


def test_bench_output_is_byte_identical():
    a = call("bench", "gadget_cycle", "1:3")
    assert a == call("bench", "gadget_cycle", "1:3")
    assert a[1].splitlines()[-1].startswith("fitted_base_per_vertex=")


@pytest.mark.parametrize("argv", [
    ("gen", "nonsense"),
    ("gen", "prism", "x"),
    ("count", "/nonexistent/graph.txt"),
    ("bench", "prism", "3-5"),
    ("verify",),
    ("frobnicate",),
])
def test_bad_input_exits_2(argv):
    assert call(*argv)[0] == 2


def test_malformed_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1 1\n")
    assert call("solve", path)[0] == 2


def test_listing_rejects_multigraph(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("2 2\n0 1 1\n0 1 1\n")
    assert call("count", path)[0] == 2


def test_degree4_needs_flag(tmp_path):
    path = tmp_path / "k5.txt"
    assert call("gen", "circulant", 5, 1, 2, "-o", path)[0] == 0
    assert call("solve", path)[0] == 2
    rc, text = call("solve", path, "--deg4", "--deterministic")
    assert rc == 0 and text.startswith("cost 5")


def test_module_entry_point(gadget2):
    res = subprocess.run([sys.executable, "-m", "cubictsp", "count", str(gadget2)],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "16\n"
