"""Closed alphabet of names, split by kind."""

from __future__ import annotations

from typing import Dict, Iterable, Optional, Tuple, FrozenSet

import attrs

from setfeat.errors import KindError, SignatureError
from setfeat.constant import BOT, TOP, NameKind


def _with_top_bottom(concepts: Iterable[str]) -> FrozenSet[str]:
    return frozenset(concepts) | {TOP, BOT}


@attrs.frozen
class Signature:
    variables: FrozenSet[str] = attrs.field(factory=frozenset, converter=frozenset)
    relations: FrozenSet[str] = attrs.field(factory=frozenset, converter=frozenset)
    constants: FrozenSet[str] = attrs.field(factory=frozenset, converter=frozenset)
    atoms: FrozenSet[str] = attrs.field(factory=frozenset, converter=frozenset)
    concepts: FrozenSet[str] = attrs.field(factory=frozenset, converter=_with_top_bottom)

    def __attrs_post_init__(self):
        spaces = self.spaces
        kinds = list(spaces)
        for idx, kind in enumerate(kinds):
            for other in kinds[idx + 1 :]:
                shared = spaces[kind] & spaces[other]
                if shared:
                    raise SignatureError(
                        f"{kind.value} and {other.value} names overlap: {sorted(shared)}"
                    )

    @property
    def spaces(self) -> Dict[NameKind, FrozenSet[str]]:
        return {
            NameKind.VARIABLE: self.variables,
            NameKind.RELATION: self.relations,
            NameKind.CONSTANT: self.constants,
            NameKind.ATOM: self.atoms,
            NameKind.CONCEPT: self.concepts,
        }

    def kind_of(self, name: str) -> Optional[NameKind]:
        for kind, space in self.spaces.items():
            if name in space:
                return kind
        return None

    def declares(self, kind: NameKind, name: str) -> bool:
        return name in self.spaces[kind]

    def declare(self, kind: NameKind, name: str) -> Signature:
        """Return a signature that also declares ``name`` as ``kind``."""
        current = self.kind_of(name)
        if current is kind:
            return self
        if current is not None:
            raise KindError(name, kind.value, current.value)
        field = {
            NameKind.VARIABLE: "variables",
            NameKind.RELATION: "relations",
            NameKind.CONSTANT: "constants",
            NameKind.ATOM: "atoms",
            NameKind.CONCEPT: "concepts",
        }[kind]
        return attrs.evolve(self, **{field: getattr(self, field) | {name}})

    def declare_all(self, names: Iterable[Tuple[NameKind, str]]) -> Signature:
        sig = self
        for kind, name in names:
            sig = sig.declare(kind, name)
        return sig

    def merge(self, other: Signature) -> Signature:
        return self.declare_all(
            (kind, name) for kind, space in other.spaces.items() for name in sorted(space)
        )

    @classmethod
    def from_term(cls, term) -> Signature:
        """Infer the signature of ``term`` from the kind of each name occurrence."""
        from setfeat.terms.ops import names

        return cls().declare_all(names(term))
