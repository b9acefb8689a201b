"""Clausal form check and Tseitin conversion."""

from __future__ import annotations

import itertools
from typing import Dict, List, Iterator, FrozenSet

import attrs
from loguru import logger

from setfeat.sat.formula import (
    POr,
    PAnd,
    PNot,
    PVar,
    PropFormula,
    var_set,
    conjoin,
    disjoin,
    complement,
)

GATE_PREFIX = "t"


def is_literal(phi: PropFormula) -> bool:
    return isinstance(phi, PVar) or (isinstance(phi, PNot) and isinstance(phi.operand, PVar))


def is_clause(phi: PropFormula) -> bool:
    if isinstance(phi, POr):
        return is_clause(phi.left) and is_clause(phi.right)
    return is_literal(phi)


def is_clausal(phi: PropFormula) -> bool:
    """Negation only on variables, conjunction never below disjunction or negation."""
    if isinstance(phi, PAnd):
        return is_clausal(phi.left) and is_clausal(phi.right)
    return is_clause(phi)


def gate_names(taken: FrozenSet[str]) -> Iterator[str]:
    for i in itertools.count(1):
        name = f"{GATE_PREFIX}{i}"
        if name not in taken:
            yield name


@attrs.define
class TseitinBuilder:
    names: Iterator[str]
    clauses: List[PropFormula] = attrs.field(factory=list)
    gates: Dict[PropFormula, PropFormula] = attrs.field(factory=dict)

    def define(self, *clauses: List[PropFormula]) -> None:
        self.clauses.extend(disjoin(*literals) for literals in clauses)

    def gate(self, phi: PropFormula) -> PropFormula:
        """Literal standing for ``phi``, defining fresh gates for compound parts."""
        if is_literal(phi):
            return phi
        if phi in self.gates:
            return self.gates[phi]
        g = PVar(next(self.names))
        match phi:
            case PNot(operand=operand):
                a = self.gate(operand)
                self.define([PNot(g), complement(a)], [g, a])
            case PAnd(left=left, right=right):
                a, b = self.gate(left), self.gate(right)
                self.define([PNot(g), a], [PNot(g), b], [g, complement(a), complement(b)])
            case POr(left=left, right=right):
                a, b = self.gate(left), self.gate(right)
                self.define([PNot(g), a, b], [g, complement(a)], [g, complement(b)])
        self.gates[phi] = g
        return g


def tseitin(phi: PropFormula) -> PropFormula:
    """Equisatisfiable clausal form; clausal input is returned unchanged."""
    if is_clausal(phi):
        return phi
    builder = TseitinBuilder(gate_names(var_set(phi)))
    top = builder.gate(phi)
    logger.debug("tseitin: {} gates, {} clauses", len(builder.gates), len(builder.clauses) + 1)
    return conjoin(top, *builder.clauses)
