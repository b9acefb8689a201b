"""Denotation of terms and satisfaction of constraints over finite models."""

from __future__ import annotations

from typing import List, Sequence, FrozenSet

from setfeat.terms import (
    Var,
    Atom,
    Conj,
    Term,
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
    NegConst,
    Superset,
    NegConcept,
    Disjointness,
    Intersection,
    DisjointUnion,
    SetDifference,
    negate,
)
from setfeat.semantics.interpretation import Model
from setfeat.constraints import Constraint, Disjunctive, Containment, ConstraintSystem


def covers(values: FrozenSet[str], candidates: Sequence[FrozenSet[str]]) -> bool:
    """Whether ``values`` can be written as ``{e1, ..., en}`` with ``ei`` in ``candidates[i]``.

    Every index needs some candidate in ``values``, and the indices must be able to reach every
    value at once, i.e. a matching saturating ``values`` exists.
    """
    options = [c & values for c in candidates]
    if any(not o for o in options):
        return False
    if len(values) > len(options):
        return False
    matched_by = {}

    def augment(i: int, seen: set) -> bool:
        for e in options[i]:
            if e in seen:
                continue
            seen.add(e)
            if e not in matched_by or augment(matched_by[e], seen):
                matched_by[e] = i
                return True
        return False

    for i in range(len(options)):
        augment(i, set())
    return len(matched_by) == len(values)


def _candidates(m: Model, values: FrozenSet[str], elements) -> List[FrozenSet[str]]:
    return [frozenset(v for v in values if holds(m, v, t)) for t in elements]


def _disjoint(m: Model, term) -> bool:
    left = m.successors(term.left_rel, m.var(term.left_var))
    return not left & m.successors(term.right_rel, m.var(term.right_var))


def _set_target(m: Model, term) -> FrozenSet[str]:
    left = m.successors(term.left_rel, m.var(term.left_var))
    right = m.successors(term.right_rel, m.var(term.right_var))
    match term:
        case Union() | DisjointUnion():
            return left | right
        case Intersection():
            return left & right
    return left - right


def holds(m: Model, e: str, term: Term) -> bool:
    """``e ∈ ⟦term⟧``, evaluated locally at ``e``."""
    match term:
        case Var(name=x):
            return e == m.var(x)
        case Atom(name=a):
            return e == m.interp.atom(a)
        case Const(name=c):
            return e == m.const(c)
        case Concept(name=c):
            return e in m.concept(c)
        case NegVar() | NegAtom() | NegConst() | NegConcept():
            return not holds(m, e, negate(term))
        case Feature(rel=f, body=body):
            values = m.successors(f, e)
            return len(values) == 1 and holds(m, next(iter(values)), body)
        case Exists(rel=f, body=body):
            return any(holds(m, v, body) for v in m.successors(f, e))
        case Forall(rel=f, body=body):
            return all(holds(m, v, body) for v in m.successors(f, e))
        case FixedSet(rel=f, elements=elements):
            values = m.successors(f, e)
            if len(values) != len(elements):
                return False
            return covers(values, _candidates(m, values, elements))
        case SetDesc(rel=f, elements=elements):
            values = m.successors(f, e)
            return covers(values, _candidates(m, values, elements))
        case Union() | DisjointUnion() | Intersection() | SetDifference():
            if isinstance(term, DisjointUnion) and not _disjoint(m, term):
                return False
            return m.successors(term.rel, e) == _set_target(m, term)
        case Superset(rel=f, sub_rel=g, var=y):
            return m.successors(f, e) >= m.successors(g, m.var(y))
        case Disjointness():
            return _disjoint(m, term)
        case Conj(left=left, right=right):
            return holds(m, e, left) and holds(m, e, right)
    raise TypeError(f"not a term: {term!r}")


def denote(term: Term, m: Model) -> FrozenSet[str]:
    """``⟦term⟧`` as a subset of the universe."""
    return frozenset(e for e in m.universe if holds(m, e, term))


def satisfies_constraint(m: Model, constraint: Constraint) -> bool:
    match constraint:
        case Containment(var=x, term=term):
            return holds(m, m.var(x), term)
        case Disjunctive(var=x, choices=choices):
            return any(m.var(x) == m.var(c) for c in choices)
    raise TypeError(f"not a constraint: {constraint!r}")


def satisfies(m: Model, cs: ConstraintSystem) -> bool:
    """``I, α ⊨ cs``."""
    return all(satisfies_constraint(m, c) for c in cs)
