"""Bounded finite model search, the reference oracle for the solver."""

from __future__ import annotations

import itertools
from typing import Dict, List, Tuple, Iterator, Optional, FrozenSet, Sequence

import attrs
from loguru import logger
from pydantic import Field, BaseModel, validator
from codetiming import Timer

from setfeat.terms import (
    Conj,
    Term,
    Forall,
    Exists,
    Feature,
    SetDesc,
    FixedSet,
    Superset,
    Disjointness,
    SetOperation,
    Signature,
    conjuncts,
)
from setfeat.config import config
from setfeat.errors import EnumerationBudgetExceeded
from setfeat.constant import BOT, TOP
from setfeat.semantics.denote import holds
from setfeat.semantics.interpretation import Model, Assignment, Interpretation


class EnumerationParams(BaseModel):
    # Fresh elements allowed beyond the constants of the term.
    bound: int = 3
    # Candidate structures checked before giving up.
    budget: int = Field(default_factory=lambda: config.ENUM_BUDGET)

    @validator("bound")
    def validate_bound(cls, v: int):
        if v < 0:
            raise ValueError("bound must not be negative")
        return v

    @validator("budget")
    def validate_budget(cls, v: int):
        if v < 1:
            raise ValueError("budget must be positive")
        return v


def relational_depth(term: Term) -> int:
    """Longest chain of relation steps the denotation of ``term`` looks along."""
    match term:
        case Feature(body=body) | Exists(body=body) | Forall(body=body):
            return 1 + relational_depth(body)
        case SetDesc(elements=elements) | FixedSet(elements=elements):
            return 1 + max(relational_depth(e) for e in elements)
        case SetOperation() | Superset():
            return 1
        case Conj(left=left, right=right):
            return max(relational_depth(left), relational_depth(right))
    return 0


def anchor_vars(term: Term) -> List[str]:
    """Variables whose own successor sets the term inspects."""
    found = []
    for part in _walk(term):
        match part:
            case SetOperation(left_var=y, right_var=z) | Disjointness(left_var=y, right_var=z):
                found += [y, z]
            case Superset(var=y):
                found.append(y)
    return sorted(set(found))


def _walk(term: Term) -> Iterator[Term]:
    for part in conjuncts(term):
        yield part
        match part:
            case Feature(body=body) | Exists(body=body) | Forall(body=body):
                yield from _walk(body)
            case SetDesc(elements=elements) | FixedSet(elements=elements):
                for e in elements:
                    yield from _walk(e)


@attrs.frozen
class _Partial:
    """Structure under construction: non-atom elements, fixed rows, scheduled elements."""

    elements: Tuple[str, ...] = ()
    rows: Tuple[Tuple[Tuple[str, str], FrozenSet[str]], ...] = ()
    scheduled: FrozenSet[str] = frozenset()


@attrs.define
class ModelSearch:
    term: Term
    root: str
    params: EnumerationParams = attrs.field(factory=EnumerationParams)
    candidates: int = 0

    atoms: Tuple[str, ...] = attrs.field(init=False)
    consts: Tuple[str, ...] = attrs.field(init=False)
    concepts: Tuple[str, ...] = attrs.field(init=False)
    relations: Tuple[str, ...] = attrs.field(init=False)
    variables: Tuple[str, ...] = attrs.field(init=False)
    depth: int = attrs.field(init=False)
    anchors: List[str] = attrs.field(init=False)
    limit: int = attrs.field(init=False)

    def __attrs_post_init__(self):
        sig = Signature.from_term(self.term)
        self.atoms = tuple(sorted(sig.atoms))
        self.consts = tuple(sorted(sig.constants))
        self.concepts = tuple(sorted(sig.concepts - {TOP, BOT}))
        self.relations = tuple(sorted(sig.relations))
        self.variables = (self.root,) + tuple(sorted(sig.variables - {self.root}))
        self.depth = relational_depth(self.term)
        self.anchors = anchor_vars(self.term)
        self.limit = len(self.consts) + self.params.bound

    def _tick(self) -> None:
        self.candidates += 1
        if self.candidates > self.params.budget:
            raise EnumerationBudgetExceeded(
                f"more than {self.params.budget} candidate models for bound {self.params.bound}"
            )

    def _new(self, partial: _Partial, count: int) -> List[str]:
        start = len(partial.elements)
        return [f"@{start + i}" for i in range(count)]

    def _assignments(self) -> Iterator[Tuple[_Partial, Dict[str, str], Dict[str, str]]]:
        names = [("var", v) for v in self.variables] + [("const", c) for c in self.consts]

        def extend(i: int, partial: _Partial, images: Tuple[str, ...]):
            if i == len(names):
                yield partial, images
                return
            kind, _ = names[i]
            taken = set(images[len(self.variables) :]) if kind == "const" else set()
            for e in self.atoms + partial.elements:
                if e not in taken:
                    yield from extend(i + 1, partial, images + (e,))
            if len(partial.elements) < self.limit:
                (e,) = self._new(partial, 1)
                grown = attrs.evolve(partial, elements=partial.elements + (e,))
                yield from extend(i + 1, grown, images + (e,))

        for partial, images in extend(0, _Partial(), ()):
            k = len(self.variables)
            yield partial, dict(zip(self.variables, images[:k])), dict(zip(self.consts, images[k:]))

    def _rows(self, partial: _Partial, pending: Sequence[Tuple[int, str]]) -> Iterator[_Partial]:
        if not pending:
            yield partial
            return
        (distance, e), rest = pending[0], tuple(pending[1:])
        yield from self._fill(partial, distance, e, 0, rest)

    def _fill(self, partial: _Partial, distance: int, e: str, r: int, rest) -> Iterator[_Partial]:
        if r == len(self.relations):
            yield from self._rows(partial, rest)
            return
        f = self.relations[r]
        existing = self.atoms + partial.elements
        room = self.limit - len(partial.elements)
        for size in range(len(existing) + 1):
            for old in itertools.combinations(existing, size):
                for j in range(room + 1):
                    new = self._new(partial, j)
                    row = frozenset(old) | frozenset(new)
                    grown = attrs.evolve(
                        partial,
                        elements=partial.elements + tuple(new),
                        rows=partial.rows + (((f, e), row),),
                    )
                    queued = rest
                    if distance + 1 < self.depth:
                        follow = [
                            v
                            for v in list(old) + new
                            if v not in self.atoms and v not in grown.scheduled
                        ]
                        queued = rest + tuple((distance + 1, v) for v in follow)
                        grown = attrs.evolve(grown, scheduled=grown.scheduled | set(follow))
                    yield from self._fill(grown, distance, e, r + 1, queued)

    def _extents(self, universe: Tuple[str, ...]) -> Iterator[Dict[str, FrozenSet[str]]]:
        subsets = [
            frozenset(c)
            for size in range(len(universe) + 1)
            for c in itertools.combinations(universe, size)
        ]
        for choice in itertools.product(subsets, repeat=len(self.concepts)):
            yield dict(zip(self.concepts, choice))

    def _start(self, partial: _Partial, vars_: Dict[str, str]) -> Tuple[_Partial, tuple]:
        starts = [vars_[self.root]] if self.depth > 0 else []
        starts += [vars_[v] for v in self.anchors if v in vars_]
        starts = [e for e in dict.fromkeys(starts) if e not in self.atoms]
        partial = attrs.evolve(partial, scheduled=frozenset(starts))
        return partial, tuple((0, e) for e in starts)

    def run(self) -> Optional[Model]:
        atoms = {a: a for a in self.atoms}
        for partial, vars_, consts in self._assignments():
            partial, pending = self._start(partial, vars_)
            for grown in self._rows(partial, pending):
                universe = self.atoms + grown.elements
                tables: Dict[str, list] = {f: [] for f in self.relations}
                for (f, e), row in grown.rows:
                    tables[f] += [(e, v) for v in sorted(row)]
                interp = Interpretation(universe, atoms, tables)
                for extents in self._extents(universe):
                    self._tick()
                    model = Model(interp, Assignment(vars_, consts, extents))
                    if holds(model, vars_[self.root], self.term):
                        return model
        return None


@Timer("oracle>enumerate", logger=logger.trace)
def enumerate_models(
    term: Term, root: str, bound: int = 3, budget: Optional[int] = None
) -> Optional[Model]:
    """First model of ``{root = term}`` with at most ``bound`` fresh elements, or ``None``.

    Raises ``EnumerationBudgetExceeded`` when the search space is larger than the budget.
    """
    params = EnumerationParams(bound=bound, **({"budget": budget} if budget else {}))
    search = ModelSearch(term, root, params)
    model = search.run()
    logger.debug(
        "model search for {}: {} after {} candidates",
        root,
        "found" if model else "none",
        search.candidates,
    )
    return model
