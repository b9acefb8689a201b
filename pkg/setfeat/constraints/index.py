"""Derived indexes answering syntactic entailment queries."""

from __future__ import annotations

from typing import Dict, List, Tuple, Iterable, FrozenSet
from collections import defaultdict

import attrs
from boltons.setutils import IndexedSet

from setfeat.terms import Var, Term, Exists, Forall, NegVar, Feature, SetDesc
from setfeat.constraints.constraint import Constraint, Containment


class UnionFind:
    """Union-find over variable names, with path compression."""

    def __init__(self):
        self._parent: Dict[str, str] = {}

    def find(self, name: str) -> str:
        parent = self._parent.setdefault(name, name)
        if parent == name:
            return name
        root = self.find(parent)
        self._parent[name] = root
        return root

    def merge(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if rb < ra:
            ra, rb = rb, ra
        self._parent[rb] = ra

    def same(self, a: str, b: str) -> bool:
        return a == b or self.find(a) == self.find(b)

    def classes(self, names: Iterable[str]) -> List[FrozenSet[str]]:
        groups: Dict[str, set] = defaultdict(set)
        for name in names:
            groups[self.find(name)].add(name)
        return sorted((frozenset(g) for g in groups.values()), key=min)


@attrs.define
class EntailmentIndex:
    """Closed form of the eight deduction rules.

    Equations are closed under reflexivity, symmetry and transitivity by the union-find;
    negated variables under symmetry; successors come from ``∃f:y``, ``f:y`` and plain set
    members; universal successors from ``∀f:y`` and ``f:y``. Everything else is entailed only
    when literally present.
    """

    equalities: UnionFind = attrs.field(factory=UnionFind)
    literals: Dict[str, set] = attrs.field(factory=lambda: defaultdict(set))
    negations: set = attrs.field(factory=set)
    successors: Dict[Tuple[str, str], IndexedSet] = attrs.field(
        factory=lambda: defaultdict(IndexedSet)
    )
    universals: Dict[Tuple[str, str], set] = attrs.field(factory=lambda: defaultdict(set))

    @classmethod
    def build(cls, constraints: Iterable[Constraint]) -> EntailmentIndex:
        index = cls()
        for constraint in constraints:
            if isinstance(constraint, Containment):
                index._add(constraint.var, constraint.term)
        return index

    def _add(self, x: str, term: Term) -> None:
        self.literals[x].add(term)
        match term:
            case Var(name=y):
                self.equalities.merge(x, y)
            case NegVar(name=y):
                self.negations.add((x, y))
                self.negations.add((y, x))
            case Feature(rel=f, body=Var(name=y)):
                self.successors[(x, f)].add(y)
                self.universals[(x, f)].add(y)
            case Exists(rel=f, body=Var(name=y)):
                self.successors[(x, f)].add(y)
            case Forall(rel=f, body=Var(name=y)):
                self.universals[(x, f)].add(y)
            case SetDesc(rel=f, elements=elements):
                for element in elements:
                    if isinstance(element, Var):
                        self.successors[(x, f)].add(element.name)

    def entails(self, goal: Containment) -> bool:
        x, term = goal.var, goal.term
        match term:
            case Var(name=y):
                return self.equalities.same(x, y)
            case NegVar(name=y):
                return (x, y) in self.negations
            case Exists(rel=f, body=Var(name=y)):
                return y in self.successors.get((x, f), ())
            case Forall(rel=f, body=Var(name=y)):
                return y in self.universals.get((x, f), ())
        return term in self.literals.get(x, ())

    def succ(self, x: str, f: str) -> IndexedSet:
        return self.successors.get((x, f), IndexedSet())
