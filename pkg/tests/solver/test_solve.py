from pathlib import Path

import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from setfeat.terms import Feature, SetDesc, FixedSet, size, desugar
from setfeat.errors import SignatureError, StepBudgetExceeded, TermValidationError
from setfeat.solver import (
    Consistent,
    TraceEntry,
    Inconsistent,
    SolverConfig,
    SolverFlag,
    SolverContext,
    DepthFirstSearch,
    solve,
    prepare,
    default_root,
)
from setfeat.syntax import SourceText, parse, parse_corpus
from setfeat.constant import RuleId, TraceKind, ClashCondition
from setfeat.semantics import holds, satisfies

from ..utils import SolveTextType
from ..strategies import st_CoreTerm

verdict_cases = [
    ("a & b", "INCONSISTENT clash=1 var=x"),
    ("#c & #d", "INCONSISTENT clash=2 var=x"),
    ("a & !a", "INCONSISTENT clash=3 var=x"),
    ("!Top", "INCONSISTENT clash=3 var=x"),
    ("a & f: b", "INCONSISTENT clash=4 var=x"),
    ("f: {$y, $z}= & f: {$w}", "INCONSISTENT clash=6 var=x"),
    ("f: a", "CONSISTENT"),
    ("f: a & f: a", "CONSISTENT"),
    ("f: {a, b}", "CONSISTENT"),
    ("f: {a, b}= & some f: b", "CONSISTENT"),
    ("some f: a & all f: !b", "CONSISTENT"),
    ("all f: !a & f: {a}", "INCONSISTENT clash=3 var=_1"),
    ("f: a & all f: !a", "INCONSISTENT clash=3 var=_1"),
    ("f: {$y, $z}= & all f: a", "INCONSISTENT clash=6 var=x"),
    ("g: #c & h: !#c", "CONSISTENT"),
    ("Sign & f: (Word & $y) & g: $y", "CONSISTENT"),
]


@pytest.mark.parametrize("text,expect", verdict_cases)
def test_verdict(solve_text: SolveTextType, text, expect):
    assert solve_text(text).summary() == expect


def test_disjointness_clash(solve_text: SolveTextType):
    result = solve_text("$y & f: a & g: a & f($y) != g($y)")
    assert not result.consistent
    assert result.clash.condition is ClashCondition.DISJOINTNESS


feature_forms = ["f: {}", "f: {{{}}}", "f: {{{}}}="]
bodies = ["a", "!a", "g: b", "a & b", "g: a & g: b", "C & !C", "some g: a"]


@pytest.mark.parametrize("body", bodies)
def test_feature_and_singleton_sets_agree(solve_text: SolveTextType, body):
    verdicts = {solve_text(form.format(f"({body})")).consistent for form in feature_forms}
    assert len(verdicts) == 1


@given(body=st_CoreTerm)
@settings(max_examples=200, deadline=None)
def test_feature_and_singleton_sets_agree_on_generated_bodies(body):
    forms = [Feature("f", body), SetDesc("f", [body]), FixedSet("f", [body])]
    assert len({solve(form).consistent for form in forms}) == 1


singleton_fixed_sets = ["f: {a}=", "f: {$y}=", "g: f: {a}=", "f: {a}= & some f: a", "f: {g: b}="]


@pytest.mark.parametrize("text", singleton_fixed_sets)
def test_singleton_fixed_sets_have_models(solve_text: SolveTextType, text):
    result = solve_text(text)
    assert isinstance(result, Consistent)
    assert holds(result.model, result.model.var("x"), parse(text))
    assert satisfies(result.model, result.normal_form)


def test_model_satisfies_term():
    term = parse("syn: loc: ($y & subcat: {noun, verb}) & dtrs: some c-dtrs: noun")
    result = solve(term)
    assert isinstance(result, Consistent)
    assert holds(result.model, result.model.var("x"), term)
    assert satisfies(result.model, result.normal_form)


def test_model_elements(solve_text: SolveTextType):
    model = solve_text("f: a & g: #c").model
    assert model.successors("f", model.var("x")) == {"a"}
    assert model.successors("g", model.var("x")) == {model.const("c")}


def test_subcat_corpus(test_data: Path):
    corpus = parse_corpus(SourceText.from_path(test_data / "subcat.term"))
    for name, term in corpus.items():
        assert solve(term, default_root(term)).consistent, name


def test_subcat_shared_complement(test_data: Path):
    corpus = parse_corpus(SourceText.from_path(test_data / "subcat_shared.term"))
    result = solve(corpus["shared"])
    assert isinstance(result, Inconsistent)
    assert result.clash.condition is ClashCondition.DISJOINTNESS


def test_trace(solve_text: SolveTextType):
    result = solve_text("f: a", trace=True)
    assert [str(entry) for entry in result.trace] == ["DFeat @ x"]
    assert solve_text("f: a").trace == ()


def test_trace_entry_format():
    opened = TraceEntry(TraceKind.OPEN, RuleId.SDIS, "_2", 1, 3)
    closed = TraceEntry(TraceKind.CLOSE, RuleId.UNION_DOWN, "x", 2, 2)
    assert str(opened) == "> SDis 1/3 @ _2"
    assert str(closed) == "< UnionDown 2/2 @ x"


def test_branching_trace(solve_text: SolveTextType):
    result = solve_text("f: {a, b} & some f: !a", trace=True)
    assert result.consistent
    assert result.stats.branches >= 1
    kinds = {entry.kind for entry in result.trace}
    assert TraceKind.OPEN in kinds


def test_step_budget(solve_text: SolveTextType):
    with pytest.raises(StepBudgetExceeded) as exc:
        solve_text("f: g: h: a", max_steps=2)
    assert exc.value.max_steps == 2


def test_config_rejects_bad_budget():
    with pytest.raises(ValidationError):
        SolverConfig(max_steps=0)


def test_flags():
    assert SolverConfig().flags is SolverFlag.NONE
    flags = SolverConfig(trace=True, seed=3).flags
    assert SolverFlag.TRACE in flags and SolverFlag.RANDOMIZED in flags
    assert SolverContext.from_config(SolverConfig(seed=3)).strategy is DepthFirstSearch


def test_seeded_search_is_reproducible(solve_text: SolveTextType):
    text = "f: {a, b, $y} & some f: !a & some f: !b"
    first = solve_text(text, seed=7, trace=True)
    second = solve_text(text, seed=7, trace=True)
    assert first.trace == second.trace
    if first.consistent:
        assert first.normal_form == second.normal_form
    assert first.consistent and second.consistent


def test_root_must_not_occur():
    with pytest.raises(SignatureError):
        solve(parse("f: $x"), "x")


def test_prepare_rejects_invalid_terms():
    with pytest.raises(TermValidationError):
        prepare(parse("$w & f: g($y) minus h($z)").right, "x")


def test_prepare_reduces_difference():
    term = prepare(parse("$w & f: g($y) minus h($z)"), "x")
    assert term == desugar(parse("$y & g: f($w) dunion h($z)"))


@given(term=st_CoreTerm)
@settings(max_examples=60, deadline=None)
def test_consistent_verdicts_come_with_models(term):
    result = solve(term)
    if result.consistent:
        assert holds(result.model, result.model.var("x"), term)
    else:
        assert result.clashes


@pytest.mark.slow
@given(term=st_CoreTerm.filter(lambda t: size(t) <= 8))
@settings(max_examples=500, deadline=None)
def test_consistent_verdicts_come_with_models_at_scale(term):
    result = solve(term)
    if result.consistent:
        assert holds(result.model, result.model.var("x"), term)


@given(term=st_CoreTerm)
@settings(max_examples=60, deadline=None)
def test_solve_is_deterministic(term):
    params = SolverConfig(trace=True)
    first, second = solve(term, params=params), solve(term, params=params)
    assert first.summary() == second.summary()
    assert first.trace == second.trace
