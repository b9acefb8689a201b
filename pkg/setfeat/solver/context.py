from __future__ import annotations

from enum import Flag, auto
from typing import TYPE_CHECKING, TypeVar, Protocol, runtime_checkable

if TYPE_CHECKING:
    from setfeat.terms import Term


class SolverFlag(Flag):
    NONE = 0
    # Record the rule application trace.
    TRACE = auto()
    # Shuffle branch order with a seeded generator.
    RANDOMIZED = auto()
    # Explore the first branch point in worker processes.
    PARALLEL = auto()

    DEFAULT = NONE


ParamsT = TypeVar("ParamsT", contravariant=True)
T = TypeVar("T")


@runtime_checkable
class Context(Protocol[ParamsT]):
    @property
    def flags(self) -> SolverFlag:
        ...

    def search_strategy(self, params: ParamsT) -> T:
        ...

    def assemble(self, term: Term, root: str) -> T:
        ...
