"""Function-free first-order formulas."""

from __future__ import annotations

from typing import Tuple, Union, Iterator, FrozenSet

import attrs


@attrs.frozen
class UVar:
    """Universally quantified variable."""

    name: str


@attrs.frozen
class Witness:
    """Existentially quantified variable, one per logic variable or fresh translation variable."""

    name: str


@attrs.frozen
class AtomSym:
    name: str


@attrs.frozen
class ConstSym:
    name: str


FolTerm = Union[UVar, Witness, AtomSym, ConstSym]


class FolFormula:
    __slots__ = ()


@attrs.frozen
class Rel(FolFormula):
    rel: str
    left: FolTerm
    right: FolTerm


@attrs.frozen
class Pred(FolFormula):
    pred: str
    arg: FolTerm


@attrs.frozen
class Eq(FolFormula):
    left: FolTerm
    right: FolTerm


@attrs.frozen
class Not(FolFormula):
    body: FolFormula


@attrs.frozen
class And(FolFormula):
    parts: Tuple[FolFormula, ...] = attrs.field(converter=tuple)


@attrs.frozen
class Or(FolFormula):
    parts: Tuple[FolFormula, ...] = attrs.field(converter=tuple)


@attrs.frozen
class Implies(FolFormula):
    premise: FolFormula
    conclusion: FolFormula


@attrs.frozen
class Universal(FolFormula):
    bound: Tuple[UVar, ...] = attrs.field(converter=tuple)
    body: FolFormula


@attrs.frozen
class Existential(FolFormula):
    bound: Tuple[Witness, ...] = attrs.field(converter=tuple)
    body: FolFormula


def neq(left: FolTerm, right: FolTerm) -> FolFormula:
    return Not(Eq(left, right))


def subformulas(phi: FolFormula) -> Iterator[FolFormula]:
    yield phi
    match phi:
        case Not(body=body) | Universal(body=body) | Existential(body=body):
            yield from subformulas(body)
        case And(parts=parts) | Or(parts=parts):
            for part in parts:
                yield from subformulas(part)
        case Implies(premise=premise, conclusion=conclusion):
            yield from subformulas(premise)
            yield from subformulas(conclusion)


def arguments(phi: FolFormula) -> Iterator[FolTerm]:
    for sub in subformulas(phi):
        match sub:
            case Rel(left=left, right=right) | Eq(left=left, right=right):
                yield left
                yield right
            case Pred(arg=arg):
                yield arg


def witnesses(phi: FolFormula) -> FrozenSet[Witness]:
    return frozenset(t for t in arguments(phi) if isinstance(t, Witness))


def is_quantifier_free(phi: FolFormula) -> bool:
    return not any(isinstance(s, (Universal, Existential)) for s in subformulas(phi))


def is_sb(phi: FolFormula) -> bool:
    """Whether ``phi`` is a prenex sentence with an exists-forall prefix."""
    if isinstance(phi, Existential):
        phi = phi.body
    if isinstance(phi, Universal):
        phi = phi.body
    return is_quantifier_free(phi)
