from pathlib import Path
from itertools import combinations_with_replacement

import pytest
from codetiming import Timer
from hypothesis import given, settings

from setfeat.sat import (
    POr,
    PAnd,
    PNot,
    PVar,
    tau,
    rows,
    size,
    delta,
    depth,
    encode,
    tseitin,
    conjoin,
    evaluate,
    is_clause,
    logic_var,
    is_clausal,
    prop_vars,
    satisfying_row,
    truth_table_sat,
)
from setfeat.terms import Var, Atom, Exists, SetDesc, conjuncts
from setfeat.terms import size as term_size
from setfeat.errors import ReservedNameError, TooManyVariablesError
from setfeat.syntax import render, parse_prop, read_dimacs
from setfeat.sat.check import cross_check

from ..strategies import st_PropFormula, st_WidePropFormula

a, b = PVar("a"), PVar("b")

tau_cases = [
    (a, "$xa", ()),
    (a & b, "($xa & $xb)", ()),
    (~a, "($x1 & some f: ($xa & !$x1))", ("x1",)),
    (a | b, "($x1 & some f: (f: {$xa, $xb} & some f: $x1))", ("x1",)),
    (
        ~a | b,
        "($x2 & some f: (f: {($x1 & some f: ($xa & !$x1)), $xb} & some f: $x2))",
        ("x1", "x2"),
    ),
]


@pytest.mark.parametrize("phi,expect,eval_vars", tau_cases)
def test_tau(phi, expect, eval_vars):
    term, found = tau(phi)
    assert render(term) == expect
    assert found == eval_vars


def test_delta():
    parts = list(conjuncts(delta(a | ~a)))
    assert parts[0] == SetDesc("f", [Atom("true"), Atom("false")])
    assert parts[1:] == [Exists("f", Var(x)) for x in ("xa", "x1", "x2")]


def test_logic_var():
    assert logic_var("a") == "xa"
    with pytest.raises(ReservedNameError):
        logic_var("true")
    with pytest.raises(ReservedNameError):
        encode(PVar("false") | a)


@pytest.mark.parametrize(
    "phi,clausal",
    [(a, True), (~a | b, True), ((a | b) & ~b, True), (~~a, False), ((a & b) | b, False)],
)
def test_is_clausal(phi, clausal):
    assert is_clausal(phi) is clausal


def test_is_clause():
    assert is_clause(a | ~b | a)
    assert not is_clause(a & b)


def test_tseitin_keeps_clausal_input():
    phi = (a | b) & ~a
    assert tseitin(phi) is phi


def test_tseitin_gate_names_avoid_inputs():
    phi = ~(PVar("t1") & b)
    assert "t1" in prop_vars(tseitin(phi))
    assert "t2" in prop_vars(tseitin(phi))
    assert is_clausal(tseitin(phi))


@given(phi=st_PropFormula)
def test_tseitin_is_equisatisfiable(phi):
    clausal = tseitin(phi)
    assert is_clausal(clausal)
    assert truth_table_sat(clausal) == truth_table_sat(phi)


def test_rows():
    table = list(rows(b & a))
    assert len(table) == 4
    assert table[0] == {"a": False, "b": False}
    assert table[-1] == {"a": True, "b": True}
    assert satisfying_row(a & ~b) == {"a": True, "b": False}
    assert satisfying_row(a & ~a) is None


def test_too_many_variables():
    phi = conjoin(*(PVar(f"p{i}") for i in range(21)))
    assert evaluate(phi, {f"p{i}": True for i in range(21)})
    with pytest.raises(TooManyVariablesError):
        truth_table_sat(phi)


def test_encoding_shape():
    enc = encode(a | ~a)
    assert enc.clausal == enc.formula
    assert dict(enc.var_map) == {"a": "xa"}
    assert enc.eval_vars == ("x1", "x2")
    parts = list(conjuncts(enc.term))
    assert len(parts) == 4
    assert all(isinstance(p, Exists) for p in parts)


def test_encoding_of_non_clausal_formula():
    enc = encode(~(a & b))
    assert enc.clausal != enc.formula
    assert is_clausal(enc.clausal)


check_cases = [
    (a | ~a, True),
    (a & ~a, False),
    (a, True),
    (~a, True),
    ((a | b) & ~a & ~b, False),
    (~(a & b) & a, True),
    (~(a | b) & b, False),
]


@pytest.mark.parametrize("phi,satisfiable", check_cases)
def test_cross_check(phi, satisfiable):
    outcome = cross_check(phi)
    assert outcome.satisfiable is satisfiable
    assert outcome.result.consistent is satisfiable
    assert outcome.agree


def test_cross_check_summary():
    assert cross_check(a | ~a).summary() == "solver=CONSISTENT sat=TRUE AGREE"
    assert cross_check(a & ~a).summary() == "solver=INCONSISTENT sat=FALSE AGREE"


def test_cross_check_files(test_data: Path):
    xor = parse_prop((test_data / "xor.prop").read_text())
    assert cross_check(xor).result.consistent
    pigeon = read_dimacs((test_data / "pigeon.cnf").read_text())
    assert not cross_check(pigeon).result.consistent


def assert_agrees(phi):
    with Timer(logger=None) as timer:
        check = cross_check(phi)
    assert check.agree, check.summary()
    stats = check.result.stats
    assert stats.steps <= 10**6
    # fresh names only come from decomposition
    assert stats.final_counter == stats.basic_counter
    assert timer.last < 30


@pytest.mark.slow
@given(phi=st_WidePropFormula)
@settings(max_examples=1000, deadline=None)
def test_encoding_agrees_with_truth_table(phi):
    assert_agrees(phi)


def formulas(max_depth: int, names=("a", "b", "c")):
    """Every formula over ``names`` up to ``max_depth``."""
    level = [PVar(name) for name in names]
    for _ in range(max_depth):
        level = (
            [PVar(name) for name in names]
            + [PNot(phi) for phi in level]
            + [kind(s, t) for kind in (PAnd, POr) for s in level for t in level]
        )
    return level


def literal_formulas(names=("a", "b", "c")):
    """Literals over ``names`` joined by two levels of ``&`` and ``|``, up to commutativity."""
    level = [PVar(name) for name in names] + [PNot(PVar(name)) for name in names]
    literals = list(level)
    for _ in range(2):
        pairs = list(combinations_with_replacement(level, 2))
        level = literals + [kind(s, t) for kind in (PAnd, POr) for s, t in pairs]
    return level


def test_formulas_enumeration():
    assert len(formulas(0)) == 3
    assert len(formulas(1)) == 24
    assert all(depth(phi) <= 2 for phi in formulas(2))
    suite = literal_formulas()
    assert len(suite) == 2358
    assert max(depth(phi) for phi in suite) == 3


@pytest.mark.slow
def test_encoding_agrees_exhaustively():
    for phi in formulas(2):
        assert_agrees(phi)


@pytest.mark.slow
def test_encoding_agrees_on_literal_combinations():
    for phi in literal_formulas():
        assert_agrees(phi)


@given(phi=st_PropFormula)
@settings(max_examples=100, deadline=None)
def test_encoding_size_is_linear(phi):
    enc = encode(phi)
    assert size(enc.clausal) <= 28 * size(phi)
    assert term_size(enc.term) <= 12 * size(enc.clausal) + 12


def test_encoding_size_growth():
    chain = [a]
    for i in range(1, 9):
        chain.append(chain[-1] | PVar(f"v{i}"))
    sizes = [term_size(encode(phi).term) for phi in chain]
    steps = {later - earlier for earlier, later in zip(sizes, sizes[1:])}
    # A disjunction over a new input adds a fixed amount.
    assert len(steps) == 1
