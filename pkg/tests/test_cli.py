import io

import pytest

from valquiver import catalog
from valquiver.cli import run
from valquiver.errors import (
    AsymmetricZero,
    DuplicateEdge,
    OrientedCycle,
    ParseError,
    UnorientedEdge,
)
from valquiver.fileformat import format_quiver, parse_quiver

KRONECKER = "# Kronecker quiver\nn 2\nedge 1 2 2 2\narrow 1 2   # 1 -> 2\n"
B2 = "n 2\nedge 1 2 2 1\narrow 1 2\n"


@pytest.fixture
def qfile(tmp_path):
    counter = iter(range(10**6))

    def write(text, name=None):
        p = tmp_path / (name or f"q{next(counter)}.txt")
        p.write_text(text, encoding="utf-8")
        return str(p)
    return write


def call(argv):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue().splitlines()


def test_parse_quiver():
    qf = parse_quiver(KRONECKER)
    assert qf.graph.value(1, 2) == 2
    assert qf.orientation.arrows == ((1, 2),)
    assert parse_quiver("n 2\nedge 1 2 1 1\n").orientation is None


@pytest.mark.parametrize(
    "text, exc",
    [
        ("edge 1 2 1 1\n", ParseError),
        ("", ParseError),
        ("n 2\nedge 1 2 1\n", ParseError),
        ("n 2\nedge 1 2 x 1\n", ParseError),
        ("n 2\nvertex 1\n", ParseError),
        ("n 2\nn 2\n", ParseError),
        ("n 2\nedge 1 2 2 0\n", AsymmetricZero),
        ("n 3\nedge 1 2 1 1\nedge 2 3 1 1\narrow 1 2\n", UnorientedEdge),
        ("n 2\nedge 1 2 1 1\narrow 1 2\narrow 2 1\n", DuplicateEdge),
        ("n 3\nedge 1 2 1 1\nedge 2 3 1 1\nedge 1 3 1 1\narrow 1 2\narrow 2 3\narrow 3 1\n",
         OrientedCycle),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_quiver(text)


@pytest.mark.parametrize("name", catalog.names())
def test_format_roundtrip(name):
    o = catalog.quiver(name)
    qf = parse_quiver(format_quiver(o.graph, o))
    assert qf.graph == o.graph and qf.orientation == o


def test_spec_examples(qfile):
    assert call(["word-reduced", qfile(B2), "1", "2", "1", "2"]) == (0, ["reduced=true"])
    assert call(["seq-principal", qfile(KRONECKER), "2", "2"]) == (0, ["2 1 2"])
    code, lines = call(["coxeter-powers", qfile(KRONECKER), "--perm", "2", "1", "--max-m", "3"])
    assert code == 0
    assert lines == ["m=1 len=2 expected=2", "m=2 len=4 expected=4", "m=3 len=6 expected=6",
                     "weyl_infinite_consistent=true"]


def test_subcommands(qfile):
    k = qfile(KRONECKER)
    b2 = qfile(B2)
    assert call(["validate", b2]) == (
        0, ["ok=true", "n=2", "symmetrizer=1 2", "finite_type=true", "orientation=1->2"])
    assert call(["cartan", b2]) == (0, ["2 -2", "-1 2"])
    assert call(["word-length", b2, "1", "2", "1", "2", "1"]) == (0, ["length=3"])
    assert call(["seq-validate", k, "2", "1", "2"]) == (
        0, ["ok=true", "length=3", "multiplicity=1 2"])
    assert call(["seq-canon", k, "2", "1", "2"]) == (0, ["2 1 | 2"])
    assert call(["seq-equiv", k, "--s", "2", "1", "--t", "2", "1"]) == (0, ["equivalent=true"])
    assert call(["seq-meet", k, "--s", "2", "1", "2", "--t", "2"]) == (0, ["2"])
    assert call(["seq-join", k, "--s", "2", "1", "2", "--t", "2"]) == (0, ["2 1 2"])
    assert call(["seq-meet", k, "--s", "2", "--t"]) == (0, [""])
    assert call(["seq-realizable", k, "2", "1", "2"]) == (0, ["realizable=true", "witness=2,2"])
    assert call(["preproj-dim", k, "2", "1", "2"]) == (
        0, ["3 2 : 0 1", "2 1 : 2 1", "1 2 : 2 3", "dim=2 3"])
    assert call(["preproj-enum", k, "--max-r", "2"]) == (
        0, ["1 2 : dim 0 1", "1 1 : dim 1 2", "2 2 : dim 2 3", "2 1 : dim 3 4"])


def test_finite_type_outputs(qfile):
    a2 = qfile("n 2\nedge 1 2 1 1\narrow 1 2\n")
    assert call(["seq-realizable", a2, "2", "1", "2", "1"]) == (
        0, ["realizable=false", "witness=none"])
    code, lines = call(["preproj-dim", a2, "2", "1", "2", "1"])
    assert lines[-1] == "zero_at=1"
    code, lines = call(["coxeter-powers", a2, "--perm", "1", "2", "--max-m", "3"])
    assert lines[-1] == "weyl_infinite_consistent=true"
    assert lines[1] == "m=2 len=2 expected=4"


def test_errors(qfile):
    k = qfile(KRONECKER)
    assert call(["seq-validate", k, "1"]) == (1, ["error=NotASink", "position=1"])
    assert call(["validate", qfile("n 1\n")]) == (1, ["error=RankOne"])
    assert call(["validate", qfile("n 2\nedge 1 2 2 0\n")]) == (1, ["error=AsymmetricZero"])
    assert call(["seq-canon", qfile("n 2\nedge 1 2 1 1\n"), "2"]) == (1, ["error=UnorientedEdge"])
    assert call(["seq-canon", k]) == (1, ["error=EmptySequence"])
    assert call(["coxeter-powers", k, "--perm", "1", "1", "--max-m", "2"]) == (
        1, ["error=NotPermutation"])
    assert call(["word-reduced", k, "3"]) == (1, ["error=VertexOutOfRange"])
    assert call(["validate", "/nonexistent/file"]) == (1, ["error=ParseError"])
    assert call(["validate", qfile(b"\xff\xfe".decode("latin-1"))])[0] == 1


def test_usage_errors(qfile):
    with pytest.raises(SystemExit) as info:
        run(["preproj-enum", qfile(KRONECKER), "--max-r", "0"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run([])
    assert info.value.code == 2


def test_oracle_subcommand(qfile):
    k = qfile(KRONECKER)
    assert call(["oracle", k, "enum", "--max-len", "2"]) == (0, ["", "2", "2 1"])
    assert call(["oracle", qfile(B2), "bfs"]) == (
        0, ["status=Finite(8)", "elements=8", "max_length=4"])
    src = qfile("n 3\nedge 1 2 1 1\nedge 2 3 1 1\narrow 2 1\narrow 2 3\n", "s.txt")
    assert call(["oracle", src, "closure", "1", "3"]) == (0, ["1 3", "3 1"])


def test_deterministic(qfile):
    k = qfile(KRONECKER)
    assert call(["preproj-enum", k, "--max-r", "4"]) == call(["preproj-enum", k, "--max-r", "4"])


def test_module_entry_point(qfile):
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "valquiver", "cartan", qfile(KRONECKER)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "2 -2\n-2 2\n"


def test_help_needs_no_quiver_file():
    out = io.StringIO()
    assert run(["help"], out) == 0
    assert "seq-principal" in out.getvalue()
    out = io.StringIO()
    assert run(["help", "preproj-enum"], out) == 0
    assert "--max-r" in out.getvalue()


def test_help_unknown_topic_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        run(["help", "nope"], io.StringIO())
    assert exc.value.code == 2
