"""Simplification steps against concrete tiny models."""

from hypothesis import HealthCheck, given, assume, settings
from hypothesis import strategies as st

from setfeat.solver import Branch, Unchanged, Deterministic, detect_clash, simplify_step
from setfeat.constant import ClashCondition
from setfeat.semantics import Model, Assignment, Interpretation, satisfies
from setfeat.constraints import ConstraintSystem

from ..strategies import BASIC_VARIABLES, st_BasicSystem

ATOMS = ("a", "b")
ELEMENTS = ("a", "b", "e0", "e1", "e2")
NODES = ("e0", "e1", "e2")

st_Pairs = st.lists(st.tuples(st.sampled_from(NODES), st.sampled_from(ELEMENTS)), max_size=6)


@st.composite
def st_Model(draw) -> Model:
    interp = Interpretation(
        ELEMENTS,
        {atom: atom for atom in ATOMS},
        {"f": draw(st_Pairs), "g": draw(st_Pairs)},
    )
    assign = Assignment(
        vars={x: draw(st.sampled_from(ELEMENTS)) for x in BASIC_VARIABLES},
        consts={"c": draw(st.sampled_from(ELEMENTS))},
        concepts={"C": draw(st.frozensets(st.sampled_from(ELEMENTS)))},
    )
    return Model(interp, assign)


@given(cs=st_BasicSystem, m=st_Model())
@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
def test_steps_preserve_models(cs: ConstraintSystem, m: Model):
    assume(satisfies(m, cs))
    # a bare fixed set has no successors until its plain companion is added
    clash = detect_clash(cs)
    assert clash is None or clash.condition is ClashCondition.CARDINALITY
    step = simplify_step(cs)
    match step:
        case Unchanged():
            pass
        case Deterministic(system=nxt):
            assert satisfies(m, nxt)
        case Branch(branches=branches):
            assert any(satisfies(m, b) for b in branches)


@given(cs=st_BasicSystem, m=st_Model())
@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
def test_steps_reflect_models(cs: ConstraintSystem, m: Model):
    step = simplify_step(cs)
    match step:
        case Deterministic(system=nxt):
            assume(satisfies(m, nxt))
            assert satisfies(m, cs)
        case Branch(branches=branches):
            assume(any(satisfies(m, b) for b in branches))
            assert satisfies(m, cs)


@given(cs=st_BasicSystem)
@settings(max_examples=200, deadline=None)
def test_steps_introduce_no_variables(cs: ConstraintSystem):
    step = simplify_step(cs)
    match step:
        case Deterministic(system=nxt):
            assert set(nxt.variables()) <= set(cs.variables())
        case Branch(branches=branches):
            assert all(set(b.variables()) <= set(cs.variables()) for b in branches)
