import pytest
from hypothesis import given

from setfeat.terms import (
    Var,
    Atom,
    Conj,
    Union,
    Forall,
    NegVar,
    Concept,
    Feature,
    SetDesc,
    Signature,
    Disjointness,
    DisjointUnion,
    SetDifference,
    size,
    names,
    rename,
    children,
    desugar,
    validate,
    free_vars,
    reduce_difference,
)
from setfeat.errors import KindError, SignatureError
from setfeat.constant import NameKind

from ..strategies import st_Term

size_cases = [
    (Atom("a"), 1),
    (Feature("f", Atom("a")), 2),
    (SetDesc("f", [Atom("a"), Var("y")]), 3),
    (Conj(Feature("f", Atom("a")), Var("y")), 4),
]


@pytest.mark.parametrize("term,expect", size_cases)
def test_size(term, expect):
    assert size(term) == expect


def test_names_first_occurrence_order():
    term = Conj(Feature("f", Var("y")), Union("g", "h", "z", "f", "y"))
    assert names(term) == [
        (NameKind.RELATION, "f"),
        (NameKind.VARIABLE, "y"),
        (NameKind.RELATION, "g"),
        (NameKind.RELATION, "h"),
        (NameKind.VARIABLE, "z"),
    ]


def test_free_vars_covers_set_operations():
    term = Conj(NegVar("y"), Disjointness("f", "z", "g", "w"))
    assert free_vars(term) == {"y", "z", "w"}


def test_validate_forall_body():
    violations = validate(Forall("f", Feature("g", Atom("a"))))
    assert [v.rule for v in violations] == ["Forall"]


def test_validate_kind_clash():
    violations = validate(Conj(Feature("a", Atom("b")), Atom("a")))
    assert [v.rule for v in violations] == ["Signature"]


def test_validate_against_signature():
    sig = Signature(relations={"f"})
    violations = validate(Feature("f", Atom("a")), sig)
    assert len(violations) == 1
    assert "atom 'a' not declared" in str(violations[0])


def test_validate_difference_shape():
    diff = SetDifference("f", "g", "y", "h", "z")
    assert validate(Conj(Var("w"), diff)) == []
    assert [v.rule for v in validate(Feature("k", diff))] == ["SetDifference"]


def test_desugar_disjoint_union():
    term = Feature("k", DisjointUnion("f", "g", "y", "h", "z"))
    assert desugar(term) == Feature(
        "k", Conj(Disjointness("g", "y", "h", "z"), Union("f", "g", "y", "h", "z"))
    )


def test_reduce_difference():
    term = Conj(Var("w"), SetDifference("f", "g", "y", "h", "z"))
    assert reduce_difference(term) == Conj(Var("y"), DisjointUnion("g", "f", "w", "h", "z"))
    assert reduce_difference(Atom("a")) == Atom("a")


def test_rename():
    term = Conj(NegVar("y"), Union("f", "g", "y", "h", "z"))
    assert rename(term, "y", "w") == Conj(NegVar("w"), Union("f", "g", "w", "h", "z"))


def test_signature_rejects_overlap():
    with pytest.raises(SignatureError):
        Signature(atoms={"a"}, relations={"a"})


def test_signature_declare():
    sig = Signature().declare(NameKind.ATOM, "a")
    assert sig.kind_of("a") is NameKind.ATOM
    assert sig.declare(NameKind.ATOM, "a") is sig
    with pytest.raises(KindError):
        sig.declare(NameKind.RELATION, "a")


def test_signature_has_top_and_bottom():
    assert {"Top", "Bot"} <= Signature.from_term(Concept("C")).concepts


@given(term=st_Term)
def test_desugar_removes_disjoint_unions(term):
    def walk(t):
        yield t
        for child in children(t):
            yield from walk(child)

    assert not any(isinstance(t, DisjointUnion) for t in walk(desugar(term)))
    assert free_vars(desugar(term)) == free_vars(term)
