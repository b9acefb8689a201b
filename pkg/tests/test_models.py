from pathlib import Path

import pytest

from setfeat.errors import ModelError
from setfeat.models import ModelDocument
from setfeat.solver import solve
from setfeat.syntax import parse


def test_document_is_sorted():
    doc = ModelDocument(
        universe=["e2", "a", "e1", "a"],
        atoms={"a": "a"},
        relations={"g": [("e1", "a")], "f": [("e2", "a"), ("e1", "a")]},
        assignment={"vars": {"y": "e2", "x": "e1"}, "concepts": {"C": ["e2", "e1"]}},
    )
    assert doc.universe == ["a", "e1", "e2"]
    assert list(doc.relations) == ["f", "g"]
    assert doc.relations["f"] == [("e1", "a"), ("e2", "a")]
    assert list(doc.assignment.vars) == ["x", "y"]
    assert doc.assignment.concepts == {"C": ["e1", "e2"]}


def test_solver_model_round_trips_through_file(tmp_path: Path):
    model = solve(parse("f: {a, $y} & g: #c & some f: !a & C")).model
    path = tmp_path / "model.json"
    path.write_text(ModelDocument.from_model(model).dump())
    assert ModelDocument.from_path(path).to_model() == model


def test_invalid_document():
    doc = ModelDocument(universe=["a", "e"], atoms={"a": "a"}, relations={"f": [("a", "e")]})
    with pytest.raises(ModelError):
        doc.to_model()
