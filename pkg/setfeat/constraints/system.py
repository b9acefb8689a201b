"""Constraint systems: the value the solver rewrites."""

from __future__ import annotations

import re
from typing import Dict, List, Tuple, Iterable, Iterator, Optional, FrozenSet
from collections import Counter, defaultdict
from functools import cached_property

import attrs
from boltons.setutils import IndexedSet

from setfeat.terms import Term
from setfeat.constant import Defaults
from setfeat.constraints.index import EntailmentIndex
from setfeat.constraints.constraint import Constraint, Containment, sort_key

_FRESH = re.compile(rf"^{re.escape(Defaults.FRESH_PREFIX)}(\d+)$")


def fresh_index(name: str) -> int:
    """Index of a solver-generated variable, 0 for any other name."""
    match = _FRESH.match(name)
    return int(match.group(1)) if match else 0


@attrs.frozen(slots=False)
class ConstraintSystem:
    constraints: FrozenSet[Constraint] = attrs.field(factory=frozenset, converter=frozenset)
    counter: int = attrs.field(default=1)

    @classmethod
    def of(cls, constraints: Iterable[Constraint]) -> ConstraintSystem:
        constraints = frozenset(constraints)
        top = max((fresh_index(v) for c in constraints for v in c.variables()), default=0)
        return cls(constraints, counter=top + 1)

    @classmethod
    def initial(cls, root: str, term: Term) -> ConstraintSystem:
        """``{root = term}``."""
        return cls.of([Containment(root, term)])

    def __getstate__(self):
        return {"constraints": self.constraints, "counter": self.counter}

    def __setstate__(self, state):
        for key, value in state.items():
            object.__setattr__(self, key, value)

    def __iter__(self) -> Iterator[Constraint]:
        return iter(self.ordered)

    def __len__(self) -> int:
        return len(self.constraints)

    def __contains__(self, constraint: Constraint) -> bool:
        return constraint in self.constraints

    @cached_property
    def ordered(self) -> Tuple[Constraint, ...]:
        return tuple(sorted(self.constraints, key=sort_key))

    @cached_property
    def index(self) -> EntailmentIndex:
        return EntailmentIndex.build(self.ordered)

    @cached_property
    def by_var(self) -> Dict[str, Tuple[Constraint, ...]]:
        grouped: Dict[str, List[Constraint]] = defaultdict(list)
        for constraint in self.ordered:
            grouped[constraint.var].append(constraint)
        return {k: tuple(v) for k, v in grouped.items()}

    def about(self, x: str) -> Tuple[Constraint, ...]:
        return self.by_var.get(x, ())

    def containments(self) -> Iterator[Containment]:
        return (c for c in self.ordered if isinstance(c, Containment))

    @cached_property
    def occurrences(self) -> Counter:
        return Counter(v for c in self.constraints for v in c.variables())

    def variables(self) -> IndexedSet:
        return IndexedSet(sorted(self.occurrences))

    def entails(self, goal: Containment) -> bool:
        return self.index.entails(goal)

    def succ(self, x: str, f: str) -> IndexedSet:
        return self.index.succ(x, f)

    def add(self, *constraints: Constraint) -> ConstraintSystem:
        return attrs.evolve(self, constraints=self.constraints | set(constraints))

    def remove(self, *constraints: Constraint) -> ConstraintSystem:
        return attrs.evolve(self, constraints=self.constraints - set(constraints))

    def replace(
        self, remove: Iterable[Constraint] = (), add: Iterable[Constraint] = ()
    ) -> ConstraintSystem:
        return attrs.evolve(self, constraints=(self.constraints - set(remove)) | set(add))

    def fresh(self, count: int = 1) -> Tuple[List[str], ConstraintSystem]:
        """Draw ``count`` fresh variable names from the counter."""
        start = self.counter
        names = [f"{Defaults.FRESH_PREFIX}{start + i}" for i in range(count)]
        return names, attrs.evolve(self, counter=start + count)

    def substitute(self, x: str, y: str) -> ConstraintSystem:
        """Replace every occurrence of ``x`` by ``y``."""
        if x == y:
            raise ValueError("substitute needs two distinct variables")
        renamed = frozenset(c.rename(x, y) for c in self.constraints)
        return attrs.evolve(self, constraints=renamed)

    def occurs(self, x: str, exclude: Optional[Constraint] = None) -> bool:
        own = 1 if exclude is not None and x in exclude.variables() else 0
        return self.occurrences[x] - own > 0

    def equiv_classes(self, over: Iterable[str] = ()) -> List[FrozenSet[str]]:
        return self.index.equalities.classes(self.variables() | IndexedSet(over))

    def class_of(self, x: str) -> FrozenSet[str]:
        uf = self.index.equalities
        return frozenset(v for v in self.variables() if uf.same(v, x)) | {x}

    def dump(self) -> str:
        return "\n".join(str(c) for c in self.ordered)


def representative(cls: Iterable[str]) -> str:
    return min(cls)
