"""Clash conditions on constraint systems."""

from __future__ import annotations

from typing import List, Tuple, Callable, Iterator, Optional

import attrs

from setfeat.terms import (
    Var,
    Atom,
    Const,
    NegVar,
    Concept,
    NegAtom,
    FixedSet,
    NegConst,
    NegConcept,
    Disjointness,
    negate,
)
from setfeat.constant import BOT, TOP, ClashCondition
from setfeat.constraints import Constraint, Containment, ConstraintSystem


@attrs.frozen
class Clash:
    condition: ClashCondition
    witness: str
    detail: Tuple[Constraint, ...] = attrs.field(converter=tuple, factory=tuple)

    def __str__(self) -> str:
        return f"clash={int(self.condition)} var={self.witness}"


ClashCheck = Callable[[ConstraintSystem, str], Optional[Clash]]


def _literal(cs: ConstraintSystem, x: str, kind: type) -> List[Containment]:
    return [c for c in cs.about(x) if isinstance(c, Containment) and type(c.term) is kind]


def _distinct_literals(kind: type, condition: ClashCondition) -> ClashCheck:
    def check(cs: ConstraintSystem, x: str) -> Optional[Clash]:
        held = _literal(cs, x, kind)
        if len({c.term for c in held}) > 1:
            return Clash(condition, x, held[:2])
        return None

    return check


def _complement(cs: ConstraintSystem, x: str) -> Optional[Clash]:
    for c in cs.about(x):
        if not isinstance(c, Containment):
            continue
        term = c.term
        match term:
            case Concept(name=name) if name == BOT:
                return Clash(ClashCondition.COMPLEMENT, x, [c])
            case NegConcept(name=name) if name == TOP:
                return Clash(ClashCondition.COMPLEMENT, x, [c])
            case NegVar(name=y):
                if cs.entails(Containment(x, Var(y))):
                    return Clash(ClashCondition.COMPLEMENT, x, [c])
            case Atom() | Const() | Concept() | NegAtom() | NegConst() | NegConcept():
                opposite = Containment(x, negate(term))
                if opposite in cs:
                    return Clash(ClashCondition.COMPLEMENT, x, [c, opposite])
    return None


def _atom_successor(cs: ConstraintSystem, x: str) -> Optional[Clash]:
    atoms = _literal(cs, x, Atom)
    if not atoms:
        return None
    for (var, _), successors in sorted(cs.index.successors.items()):
        if var == x and successors:
            return Clash(ClashCondition.ATOM_SUCCESSOR, x, atoms[:1])
    return None


def _closed(cs: ConstraintSystem, names) -> set:
    find = cs.index.equalities.find
    return {find(n) for n in names}


def _disjointness(cs: ConstraintSystem, x: str) -> Optional[Clash]:
    for c in cs.containments():
        match c.term:
            case Disjointness(left_rel=f, left_var=y, right_rel=g, right_var=z) if y == x:
                if _closed(cs, cs.succ(y, f)) & _closed(cs, cs.succ(z, g)):
                    return Clash(ClashCondition.DISJOINTNESS, x, [c])
    return None


def _cardinality(cs: ConstraintSystem, x: str) -> Optional[Clash]:
    for c in cs.about(x):
        match c:
            case Containment(term=FixedSet(rel=f, elements=elements)):
                if len(_closed(cs, cs.succ(x, f))) < len(elements):
                    return Clash(ClashCondition.CARDINALITY, x, [c])
    return None


CLASH_CHECKS: Tuple[Tuple[ClashCondition, ClashCheck], ...] = (
    (ClashCondition.ATOMS, _distinct_literals(Atom, ClashCondition.ATOMS)),
    (ClashCondition.CONSTANTS, _distinct_literals(Const, ClashCondition.CONSTANTS)),
    (ClashCondition.COMPLEMENT, _complement),
    (ClashCondition.ATOM_SUCCESSOR, _atom_successor),
    (ClashCondition.DISJOINTNESS, _disjointness),
    (ClashCondition.CARDINALITY, _cardinality),
)


def clashes(cs: ConstraintSystem) -> Iterator[Clash]:
    """Every clash of ``cs``, by condition and then by variable."""
    variables = cs.variables()
    for _, check in CLASH_CHECKS:
        for x in variables:
            clash = check(cs, x)
            if clash is not None:
                yield clash


def detect_clash(cs: ConstraintSystem) -> Optional[Clash]:
    return next(clashes(cs), None)
