from .index import UnionFind, EntailmentIndex
from .system import ConstraintSystem, fresh_index, representative
from .constraint import Constraint, Disjunctive, Containment, sort_key


def entails(cs: ConstraintSystem, goal: Containment) -> bool:
    return cs.entails(goal)


def succ(cs: ConstraintSystem, x: str, f: str):
    return cs.succ(x, f)


def substitute(cs: ConstraintSystem, x: str, y: str) -> ConstraintSystem:
    return cs.substitute(x, y)


def equiv_classes(cs: ConstraintSystem, over=()):
    return cs.equiv_classes(over)
