"""Finite interpretations, assignments and models."""

from __future__ import annotations

from typing import Dict, Tuple, Mapping, Iterable, FrozenSet
from collections import defaultdict
from functools import cached_property

import attrs

from setfeat.errors import ModelError, UninterpretedNameError
from setfeat.constant import BOT, TOP, NameKind

Pair = Tuple[str, str]


def _frozen_tables(tables: Mapping[str, Iterable[Pair]]) -> Dict[str, FrozenSet[Pair]]:
    return {f: frozenset(tuple(p) for p in pairs) for f, pairs in tables.items()}


def _frozen_extents(extents: Mapping[str, Iterable[str]]) -> Dict[str, FrozenSet[str]]:
    return {name: frozenset(ext) for name, ext in extents.items()}


@attrs.frozen(slots=False, hash=False)
class Interpretation:
    """Universe, atom images and relation tables.

    A relation missing from ``relations`` is interpreted as the empty relation.
    """

    universe: FrozenSet[str] = attrs.field(converter=frozenset)
    atoms: Dict[str, str] = attrs.field(converter=dict, factory=dict)
    relations: Dict[str, FrozenSet[Pair]] = attrs.field(converter=_frozen_tables, factory=dict)

    def __attrs_post_init__(self):
        images = list(self.atoms.values())
        if len(set(images)) != len(images):
            raise ModelError("atom map is not injective")
        missing = set(images) - self.universe
        if missing:
            raise ModelError(f"atom images outside the universe: {sorted(missing)}")
        for f, pairs in self.relations.items():
            for e, e2 in pairs:
                if e not in self.universe or e2 not in self.universe:
                    raise ModelError(f"{f}-pair ({e}, {e2}) leaves the universe")
                if e in self.atom_images:
                    raise ModelError(f"atom image {e} has an {f}-successor")

    @cached_property
    def atom_images(self) -> FrozenSet[str]:
        return frozenset(self.atoms.values())

    @cached_property
    def _successors(self) -> Dict[Tuple[str, str], FrozenSet[str]]:
        grouped = defaultdict(set)
        for f, pairs in self.relations.items():
            for e, e2 in pairs:
                grouped[(f, e)].add(e2)
        return {k: frozenset(v) for k, v in grouped.items()}

    def successors(self, f: str, e: str) -> FrozenSet[str]:
        """``f^I(e)``."""
        return self._successors.get((f, e), frozenset())

    def atom(self, name: str) -> str:
        try:
            return self.atoms[name]
        except KeyError:
            raise UninterpretedNameError(NameKind.ATOM.value, name) from None


@attrs.frozen(slots=False, hash=False)
class Assignment:
    vars: Dict[str, str] = attrs.field(converter=dict, factory=dict)
    consts: Dict[str, str] = attrs.field(converter=dict, factory=dict)
    concepts: Dict[str, FrozenSet[str]] = attrs.field(converter=_frozen_extents, factory=dict)

    def __attrs_post_init__(self):
        images = list(self.consts.values())
        if len(set(images)) != len(images):
            raise ModelError("constant assignment is not injective")


@attrs.frozen(slots=False, hash=False)
class Model:
    interp: Interpretation
    assign: Assignment

    def __attrs_post_init__(self):
        universe = self.interp.universe
        ranged = list(self.assign.vars.values()) + list(self.assign.consts.values())
        outside = {e for e in ranged if e not in universe}
        for ext in self.assign.concepts.values():
            outside |= ext - universe
        if outside:
            raise ModelError(f"assignment leaves the universe: {sorted(outside)}")
        if self.assign.concepts.get(TOP, universe) != universe:
            raise ModelError(f"{TOP} must denote the whole universe")
        if self.assign.concepts.get(BOT, frozenset()):
            raise ModelError(f"{BOT} must denote the empty set")

    @property
    def universe(self) -> FrozenSet[str]:
        return self.interp.universe

    def var(self, name: str) -> str:
        try:
            return self.assign.vars[name]
        except KeyError:
            raise UninterpretedNameError(NameKind.VARIABLE.value, name) from None

    def const(self, name: str) -> str:
        try:
            return self.assign.consts[name]
        except KeyError:
            raise UninterpretedNameError(NameKind.CONSTANT.value, name) from None

    def concept(self, name: str) -> FrozenSet[str]:
        if name == TOP:
            return self.universe
        if name == BOT:
            return frozenset()
        try:
            return self.assign.concepts[name]
        except KeyError:
            raise UninterpretedNameError(NameKind.CONCEPT.value, name) from None

    def successors(self, f: str, e: str) -> FrozenSet[str]:
        return self.interp.successors(f, e)
