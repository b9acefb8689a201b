"""Containment and disjunctive constraints."""

from __future__ import annotations

from typing import Tuple, Union, FrozenSet
from functools import lru_cache

import attrs

from setfeat.terms import Var, Term, rename, free_vars
from setfeat.syntax.printer import render


def _non_empty(instance, attribute, value):
    if not value:
        raise ValueError(f"{attribute.name} must not be empty")


@attrs.frozen
class Containment:
    """``x = T``."""

    var: str
    term: Term

    def __str__(self) -> str:
        return f"${self.var} = {render(self.term)}."

    @property
    def is_equation(self) -> bool:
        return isinstance(self.term, Var)

    @property
    def is_trivial(self) -> bool:
        return self.is_equation and self.term.name == self.var

    def variables(self) -> FrozenSet[str]:
        return free_vars(self.term) | {self.var}

    def rename(self, old: str, new: str) -> Containment:
        var = new if self.var == old else self.var
        return Containment(var, rename(self.term, old, new))


@attrs.frozen
class Disjunctive:
    """``x = x1 | ... | xn``."""

    var: str
    choices: Tuple[str, ...] = attrs.field(converter=tuple, validator=_non_empty)

    def __str__(self) -> str:
        return f"${self.var} = {' | '.join('$' + c for c in self.choices)}."

    is_equation = False
    is_trivial = False

    def variables(self) -> FrozenSet[str]:
        return frozenset(self.choices) | {self.var}

    def rename(self, old: str, new: str) -> Disjunctive:
        var = new if self.var == old else self.var
        return Disjunctive(var, [new if c == old else c for c in self.choices])


Constraint = Union[Containment, Disjunctive]


@lru_cache(maxsize=65536)
def sort_key(constraint: Constraint) -> str:
    return str(constraint)
