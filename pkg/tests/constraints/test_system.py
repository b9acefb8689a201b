import pytest
from hypothesis import given

from setfeat.terms import Var, Atom, Exists, Forall, NegVar, Feature
from setfeat.constraints import (
    UnionFind,
    Disjunctive,
    Containment,
    ConstraintSystem,
    entails,
    fresh_index,
    representative,
)

from ..utils import SystemFactoryType
from ..strategies import BASIC_TERMS, BASIC_VARIABLES, st_BasicSystem, st_BasicConstraint


def test_union_find():
    uf = UnionFind()
    uf.merge("z", "y")
    uf.merge("y", "w")
    assert uf.same("z", "w")
    assert not uf.same("z", "x")
    assert uf.find("z") == "w"
    assert uf.classes(["x", "y", "z", "w"]) == [frozenset({"w", "y", "z"}), frozenset({"x"})]
    assert representative({"_2", "y", "_10"}) == "_10"


@pytest.mark.parametrize(
    "name,expect", [("_1", 1), ("_42", 42), ("x", 0), ("x_1", 0), ("_", 0)]
)
def test_fresh_index(name, expect):
    assert fresh_index(name) == expect


def test_fresh_counter_starts_past_existing(system_factory: SystemFactoryType):
    cs = system_factory([("x", "f: $_3")])
    assert cs.counter == 4
    names, nxt = cs.fresh(2)
    assert names == ["_4", "_5"]
    assert nxt.counter == 6
    assert cs.counter == 4


def test_equations_are_closed(system_factory: SystemFactoryType):
    cs = system_factory([("x", "$y"), ("y", "$z")])
    assert entails(cs, Containment("x", Var("z")))
    assert entails(cs, Containment("z", Var("x")))
    assert entails(cs, Containment("w", Var("w")))
    assert not entails(cs, Containment("x", Var("w")))


def test_negated_variables_are_symmetric(system_factory: SystemFactoryType):
    cs = system_factory([("x", "!$y")])
    assert cs.entails(Containment("y", NegVar("x")))


def test_successors(system_factory: SystemFactoryType):
    cs = system_factory([("x", "f: $y"), ("x", "f: {$z, a}"), ("x", "some g: $w")])
    assert cs.entails(Containment("x", Exists("f", Var("y"))))
    assert cs.entails(Containment("x", Forall("f", Var("y"))))
    assert cs.entails(Containment("x", Exists("f", Var("z"))))
    assert not cs.entails(Containment("x", Forall("f", Var("z"))))
    assert not cs.entails(Containment("x", Forall("g", Var("w"))))
    assert list(cs.succ("x", "f")) == ["y", "z"]
    assert list(cs.succ("y", "f")) == []


def test_literals_entailed_when_present(system_factory: SystemFactoryType):
    cs = system_factory([("x", "a & f: b")])
    assert not cs.entails(Containment("x", Atom("a")))
    cs = system_factory([("x", "a")])
    assert cs.entails(Containment("x", Atom("a")))


def test_substitute(system_factory: SystemFactoryType):
    cs = system_factory([("x", "f: $y"), ("y", "a")])
    renamed = cs.substitute("y", "z")
    assert set(renamed) == {
        Containment("x", Feature("f", Var("z"))),
        Containment("z", Atom("a")),
    }
    with pytest.raises(ValueError):
        cs.substitute("y", "y")


def test_equiv_classes(system_factory: SystemFactoryType):
    cs = system_factory([("x", "$y"), ("z", "a")])
    assert cs.equiv_classes(over=["w"]) == [
        frozenset({"w"}),
        frozenset({"x", "y"}),
        frozenset({"z"}),
    ]
    assert cs.class_of("y") == frozenset({"x", "y"})


def test_disjunctive():
    d = Disjunctive("x", ["y", "z"])
    assert str(d) == "$x = $y | $z."
    assert d.rename("z", "w") == Disjunctive("x", ["y", "w"])
    with pytest.raises(ValueError):
        Disjunctive("x", [])


def test_dump_is_sorted(system_factory: SystemFactoryType):
    cs = system_factory([("y", "a"), ("x", "f: $y")])
    assert cs.dump() == "$x = f: $y.\n$y = a."
    assert len(cs) == 2
    assert Containment("y", Atom("a")) in cs


def test_initial():
    cs = ConstraintSystem.initial("x", Atom("a"))
    assert list(cs) == [Containment("x", Atom("a"))]
    assert cs.counter == 1


def _goals():
    for x in BASIC_VARIABLES:
        yield from (Containment(x, t) for t in BASIC_TERMS)
        for y in BASIC_VARIABLES:
            yield Containment(x, Var(y))
            yield Containment(x, NegVar(y))
            for f in ("f", "g"):
                yield Containment(x, Exists(f, Var(y)))
                yield Containment(x, Forall(f, Var(y)))


GOALS = list(_goals())


@given(cs=st_BasicSystem, extra=st_BasicConstraint)
def test_entailment_is_monotone(cs: ConstraintSystem, extra: Containment):
    bigger = cs.add(extra)
    assert [g for g in GOALS if cs.entails(g) and not bigger.entails(g)] == []
    for x in BASIC_VARIABLES:
        for f in ("f", "g"):
            assert set(cs.succ(x, f)) <= set(bigger.succ(x, f))
