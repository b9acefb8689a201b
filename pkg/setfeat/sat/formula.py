"""Propositional formulas."""

from __future__ import annotations

from typing import Dict, List, Mapping, Iterator, FrozenSet

import attrs
from boltons.iterutils import unique


class PropFormula:
    __slots__ = ()

    def __and__(self, other: PropFormula) -> PAnd:
        return PAnd(self, other)

    def __or__(self, other: PropFormula) -> POr:
        return POr(self, other)

    def __invert__(self) -> PNot:
        return PNot(self)


@attrs.frozen
class PVar(PropFormula):
    name: str


@attrs.frozen
class PNot(PropFormula):
    operand: PropFormula


@attrs.frozen
class PAnd(PropFormula):
    left: PropFormula
    right: PropFormula


@attrs.frozen
class POr(PropFormula):
    left: PropFormula
    right: PropFormula


def _vars(phi: PropFormula) -> Iterator[str]:
    match phi:
        case PVar(name=name):
            yield name
        case PNot(operand=operand):
            yield from _vars(operand)
        case PAnd(left=left, right=right) | POr(left=left, right=right):
            yield from _vars(left)
            yield from _vars(right)


def prop_vars(phi: PropFormula) -> List[str]:
    """Variables of ``phi`` in first-occurrence order."""
    return unique(_vars(phi))


def var_set(phi: PropFormula) -> FrozenSet[str]:
    return frozenset(_vars(phi))


def evaluate(phi: PropFormula, row: Mapping[str, bool]) -> bool:
    match phi:
        case PVar(name=name):
            return row[name]
        case PNot(operand=operand):
            return not evaluate(operand, row)
        case PAnd(left=left, right=right):
            return evaluate(left, row) and evaluate(right, row)
        case POr(left=left, right=right):
            return evaluate(left, row) or evaluate(right, row)
    raise TypeError(f"not a propositional formula: {phi!r}")


def size(phi: PropFormula) -> int:
    match phi:
        case PVar():
            return 1
        case PNot(operand=operand):
            return 1 + size(operand)
        case PAnd(left=left, right=right) | POr(left=left, right=right):
            return 1 + size(left) + size(right)
    raise TypeError(f"not a propositional formula: {phi!r}")


def depth(phi: PropFormula) -> int:
    match phi:
        case PVar():
            return 0
        case PNot(operand=operand):
            return 1 + depth(operand)
        case PAnd(left=left, right=right) | POr(left=left, right=right):
            return 1 + max(depth(left), depth(right))
    raise TypeError(f"not a propositional formula: {phi!r}")


def conjoin(*formulas: PropFormula) -> PropFormula:
    """Left-associated conjunction."""
    if not formulas:
        raise ValueError("conjoin() needs at least one formula")
    result = formulas[0]
    for phi in formulas[1:]:
        result = PAnd(result, phi)
    return result


def disjoin(*formulas: PropFormula) -> PropFormula:
    if not formulas:
        raise ValueError("disjoin() needs at least one formula")
    result = formulas[0]
    for phi in formulas[1:]:
        result = POr(result, phi)
    return result


def complement(literal: PropFormula) -> PropFormula:
    """Negation of a literal, without double negation."""
    if isinstance(literal, PNot):
        return literal.operand
    return PNot(literal)


def assignment_str(row: Dict[str, bool]) -> str:
    return " ".join(f"{k}={int(v)}" for k, v in sorted(row.items()))
