from pathlib import Path

import pytest
from hypothesis import given, settings

from setfeat.terms import (
    Var,
    Atom,
    Conj,
    Const,
    Union,
    Exists,
    Forall,
    NegVar,
    Concept,
    Feature,
    NegAtom,
    SetDesc,
    FixedSet,
    Superset,
    Disjointness,
    DisjointUnion,
)
from setfeat.errors import KindError, TermSyntaxError, TermValidationError
from setfeat.syntax import SourceText, parse, render, parse_corpus, parse_document
from setfeat.syntax.lexer import KEYWORDS

from ..strategies import st_Term

parse_cases = [
    ("a", Atom("a")),
    ("!a", NegAtom("a")),
    ("$y", Var("y")),
    ("!$y", NegVar("y")),
    ("#c", Const("c")),
    ("Sign", Concept("Sign")),
    ("f: a", Feature("f", Atom("a"))),
    ("some f: a", Exists("f", Atom("a"))),
    ("all f: !a", Forall("f", NegAtom("a"))),
    ("f: {a, $y}", SetDesc("f", [Atom("a"), Var("y")])),
    ("f: {a, b}=", FixedSet("f", [Atom("a"), Atom("b")])),
    ("subcat: cdtrs($x) union n($y)", Union("subcat", "cdtrs", "x", "n", "y")),
    ("f: g($x) dunion h($y)", DisjointUnion("f", "g", "x", "h", "y")),
    ("f: >= g($x)", Superset("f", "g", "x")),
    ("f($x) != g($y)", Disjointness("f", "x", "g", "y")),
    ("a & f: b & c", Conj(Conj(Atom("a"), Feature("f", Atom("b"))), Atom("c"))),
    ("f: (a & b)", Feature("f", Conj(Atom("a"), Atom("b")))),
    ("h-dtr: a % trailing comment", Feature("h-dtr", Atom("a"))),
]


@pytest.mark.parametrize("text,expect", parse_cases)
def test_parse(text, expect):
    assert parse(text) == expect


bad_cases = [
    ("f: ", 1, 4),
    ("f: a &\n  @", 2, 3),
    ("(a", 1, 3),
]


@pytest.mark.parametrize("text,line,column", bad_cases)
def test_syntax_error_position(text, line, column):
    with pytest.raises(TermSyntaxError) as exc:
        parse(text)
    assert (exc.value.line, exc.value.column) == (line, column)


@pytest.mark.parametrize("word", sorted(KEYWORDS))
def test_keywords_are_not_names(word):
    with pytest.raises(TermSyntaxError):
        parse(f"f: {word}")
    with pytest.raises(TermSyntaxError):
        parse(f"{word}: a")
    assert parse(f"f: ${word}") == Feature("f", Var(word))
    assert parse(f"g: #{word}") == Feature("g", Const(word))


def test_kind_error():
    with pytest.raises(KindError):
        parse("a & a: b")


def test_forall_body_validated():
    with pytest.raises(TermValidationError):
        parse("all f: g: a")


def test_corpus(test_data: Path):
    corpus = parse_corpus(SourceText.from_path(test_data / "subcat.term"))
    assert list(corpus) == ["believes", "principle", "principle_n"]


def test_bare_term_corpus_is_keyed_by_stem(test_data: Path):
    corpus = parse_corpus(SourceText.from_path(test_data / "feat_atom.term"))
    assert corpus == {"feat_atom": Feature("f", Atom("a"))}


def test_parse_document():
    assert parse_document("f: a") == Feature("f", Atom("a"))
    assert parse_document("one = a. two = b.") == {"one": Atom("a"), "two": Atom("b")}


def test_corpus_shares_signature():
    with pytest.raises(KindError):
        parse_corpus("one = f: a. two = a: b.")


def test_single_term_rejects_clauses():
    with pytest.raises(TermSyntaxError):
        parse("one = a.")


@given(term=st_Term)
@settings(max_examples=1000, deadline=None)
def test_render_parses_back(term):
    assert parse(render(term)) == term
