from pathlib import Path

import pytest
from typer.testing import CliRunner

from setfeat.cli import app
from setfeat.solver import default_root
from setfeat.sat import PVar, encode
from setfeat.syntax import parse, render
from setfeat.models import ModelDocument
from setfeat.semantics import holds

from .fol.test_translate import EXPECTED_FEATURE_LISTING

runner = CliRunner()


@pytest.mark.parametrize(
    "name,stdout,code",
    [
        ("clash_atoms.term", "INCONSISTENT clash=1 var=x\n", 1),
        ("feat_atom.term", "CONSISTENT\n", 0),
        (
            "subcat.term",
            "CONSISTENT name=believes\nCONSISTENT name=principle\nCONSISTENT name=principle_n\n",
            0,
        ),
    ],
)
def test_check(test_data: Path, name, stdout, code):
    result = runner.invoke(app, ["check", str(test_data / name)])
    assert result.exit_code == code
    assert result.stdout == stdout


def test_check_corpus_entry(test_data: Path):
    result = runner.invoke(app, ["check", str(test_data / "subcat.term"), "-n", "principle"])
    assert result.exit_code == 0
    assert result.stdout == "CONSISTENT name=principle\n"


def test_check_missing_entry(test_data: Path):
    result = runner.invoke(app, ["check", str(test_data / "subcat.term"), "-n", "nope"])
    assert result.exit_code == 2
    assert "error: no entry 'nope'" in result.output


def test_check_with_trace(test_data: Path):
    result = runner.invoke(app, ["check", str(test_data / "feat_atom.term"), "--trace"])
    assert result.stdout == "DFeat @ x\nCONSISTENT\n"


def test_trace(test_data: Path):
    result = runner.invoke(app, ["trace", str(test_data / "feat_atom.term")])
    assert result.exit_code == 0
    assert result.stdout == "DFeat @ x\nCONSISTENT\n"


def test_parse_error_exits_2(tmp_path: Path):
    bad = tmp_path / "bad.term"
    bad.write_text("f: \n")
    result = runner.invoke(app, ["check", str(bad)])
    assert result.exit_code == 2
    assert "error:" in result.output
    assert "bad.term:" in result.output


def test_step_budget(test_data: Path):
    result = runner.invoke(app, ["check", str(test_data / "feat_atom.term"), "--max-steps", "1"])
    assert result.exit_code == 0
    result = runner.invoke(app, ["check", str(test_data / "subcat.term"), "--max-steps", "1"])
    assert result.exit_code == 2


def test_model(test_data: Path, tmp_path: Path):
    out = tmp_path / "model.json"
    result = runner.invoke(app, ["model", str(test_data / "feat_atom.term"), "-o", str(out)])
    assert result.exit_code == 0
    assert result.stdout == "CONSISTENT\n"
    model = ModelDocument.from_path(out).to_model()
    assert holds(model, model.var("x"), parse("f: a"))


def test_model_inconsistent(test_data: Path):
    result = runner.invoke(app, ["model", str(test_data / "clash_atoms.term")])
    assert result.exit_code == 1
    assert result.stdout == "INCONSISTENT clash=1 var=x\n"


def test_model_needs_entry_for_corpus(test_data: Path):
    result = runner.invoke(app, ["model", str(test_data / "subcat.term")])
    assert result.exit_code == 2


@pytest.mark.parametrize(
    "args,stdout",
    [
        (["(a \\/ ~a)"], "solver=CONSISTENT sat=TRUE AGREE\n"),
        (["a /\\ ~a"], "solver=INCONSISTENT sat=FALSE AGREE\n"),
    ],
)
def test_sat_encode_check(args, stdout):
    result = runner.invoke(app, ["sat-encode", "--check", *args])
    assert result.exit_code == 0
    assert result.stdout == stdout


def test_sat_encode_files(test_data: Path):
    result = runner.invoke(app, ["sat-encode", "--check", str(test_data / "xor.prop")])
    assert result.stdout == "solver=CONSISTENT sat=TRUE AGREE\n"
    result = runner.invoke(
        app, ["sat-encode", "--check", "--dimacs", str(test_data / "pigeon.cnf")]
    )
    assert result.exit_code == 0
    assert result.stdout == "solver=INCONSISTENT sat=FALSE AGREE\n"


def test_sat_encode_emit():
    result = runner.invoke(app, ["sat-encode", "a"])
    assert result.exit_code == 0
    assert result.stdout == render(encode(PVar("a")).term) + "\n"


def test_sat_encode_reserved_name():
    result = runner.invoke(app, ["sat-encode", "true \\/ a"])
    assert result.exit_code == 2


def test_translate_fol(test_data: Path, tmp_path: Path):
    result = runner.invoke(app, ["translate-fol", str(test_data / "feat_atom.term")])
    assert result.exit_code == 0
    assert result.stdout == EXPECTED_FEATURE_LISTING
    out = tmp_path / "feat_atom.p"
    result = runner.invoke(
        app, ["translate-fol", str(test_data / "feat_atom.term"), "--decide", "-o", str(out)]
    )
    assert out.read_text() == EXPECTED_FEATURE_LISTING + "% sb_satisfiable: true\n"


def test_dump_config(test_data: Path):
    result = runner.invoke(app, ["check", str(test_data / "feat_atom.term"), "--dump-config"])
    assert result.exit_code == 0


def test_timings(test_data: Path):
    result = runner.invoke(app, ["check", str(test_data / "feat_atom.term"), "--timings"])
    assert result.exit_code == 0
    assert result.stdout.startswith("CONSISTENT\n")


@pytest.mark.parametrize(
    "text,root", [("f: a", "x"), ("f: $x", "x1"), ("$x & g: $x1", "x2")]
)
def test_default_root(text, root):
    assert default_root(parse(text)) == root
