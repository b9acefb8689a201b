"""Finite-model decision procedure for translated terms.

An exists-forall sentence without function symbols has a model iff it has one whose
elements are the denotations of its constants. Witnesses are therefore read as constants,
each equality partition of the constants fixes a domain, and the universals are grounded
over it. The remaining relational atoms are decided by DPLL.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Tuple, Hashable, Iterable, Iterator, FrozenSet

import attrs
from loguru import logger
from codetiming import Timer

from setfeat.config import config
from setfeat.errors import GroundBudgetExceeded
from setfeat.fol.formula import (
    Eq,
    Or,
    And,
    Not,
    Rel,
    Pred,
    UVar,
    AtomSym,
    Implies,
    Witness,
    ConstSym,
    FolTerm,
    Universal,
    FolFormula,
    arguments,
)
from setfeat.fol.translate import TranslationOutput

Literal = Tuple[Hashable, bool]
GroundClause = FrozenSet[Literal]
Cnf = List[GroundClause]

TRUE: Cnf = []
FALSE: Cnf = [frozenset()]


def _flip(lit: Literal) -> Literal:
    return lit[0], not lit[1]


def _assign(clauses: Iterable[GroundClause], lits: FrozenSet[Literal]) -> Cnf:
    """Satisfy ``lits``: drop satisfied clauses, strike the complements elsewhere."""
    falsified = frozenset(_flip(l) for l in lits)
    return [c - falsified for c in clauses if not (c & lits)]


def dpll(clauses: Cnf) -> bool:
    """Unit propagation and pure literal elimination, then split on the first open atom."""
    while True:
        if any(not c for c in clauses):
            return False
        if not clauses:
            return True
        units = frozenset(next(iter(c)) for c in clauses if len(c) == 1)
        if any(_flip(l) in units for l in units):
            return False
        if units:
            clauses = _assign(clauses, units)
            continue
        polarities: Dict[Hashable, set] = {}
        for c in clauses:
            for key, pol in c:
                polarities.setdefault(key, set()).add(pol)
        pure = frozenset((k, next(iter(p))) for k, p in polarities.items() if len(p) == 1)
        if not pure:
            break
        clauses = _assign(clauses, pure)
    key, _ = next(iter(clauses[0]))
    return dpll(_assign(clauses, frozenset({(key, True)}))) or dpll(
        _assign(clauses, frozenset({(key, False)}))
    )


def _disjoin(parts: Iterable[Cnf]) -> Cnf:
    result: Cnf = FALSE
    for part in parts:
        result = [a | b for a in result for b in part]
        result = [c for c in result if not any(_flip(l) in c for l in c)]
        if not result:
            return TRUE
    return result


def _conjoin(parts: Iterable[Cnf]) -> Cnf:
    result: Cnf = []
    for part in parts:
        result.extend(part)
    return result


@attrs.define
class Grounding:
    """Grounds clauses over one equality partition of the constants."""

    blocks: Dict[FolTerm, int]
    size: int

    def element(self, t: FolTerm, env: Dict[str, int]) -> int:
        if isinstance(t, UVar):
            return env[t.name]
        return self.blocks[t]

    def cnf(self, phi: FolFormula, env: Dict[str, int], positive: bool = True) -> Cnf:
        match phi:
            case Eq(left=left, right=right):
                same = self.element(left, env) == self.element(right, env)
                return TRUE if same == positive else FALSE
            case Rel(rel=f, left=left, right=right):
                key = (f, self.element(left, env), self.element(right, env))
                return [frozenset({(key, positive)})]
            case Pred(pred=p, arg=arg):
                return [frozenset({((p, self.element(arg, env)), positive)})]
            case Not(body=body):
                return self.cnf(body, env, not positive)
            case And(parts=parts) if positive:
                return _conjoin(self.cnf(p, env) for p in parts)
            case And(parts=parts):
                return _disjoin(self.cnf(p, env, False) for p in parts)
            case Or(parts=parts) if positive:
                return _disjoin(self.cnf(p, env) for p in parts)
            case Or(parts=parts):
                return _conjoin(self.cnf(p, env, False) for p in parts)
            case Implies(premise=premise, conclusion=conclusion) if positive:
                return _disjoin([self.cnf(premise, env, False), self.cnf(conclusion, env)])
            case Implies(premise=premise, conclusion=conclusion):
                return _conjoin([self.cnf(premise, env), self.cnf(conclusion, env, False)])
            case Universal(bound=bound, body=body) if positive:
                names = [v.name for v in bound]
                return _conjoin(
                    self.cnf(body, {**env, **dict(zip(names, values))})
                    for values in itertools.product(range(self.size), repeat=len(names))
                )
        raise TypeError(f"cannot ground {phi!r} with polarity {positive}")


def herbrand_constants(out: TranslationOutput) -> List[FolTerm]:
    """Atoms first, then constants, then witnesses, so that pruning happens early."""
    found = {t for c in out.clauses for t in arguments(c.formula) if not isinstance(t, UVar)}
    found.add(Witness(out.root))
    order = {AtomSym: 0, ConstSym: 1, Witness: 2}
    return sorted(found, key=lambda t: (order[type(t)], t.name))


def partitions(symbols: List[FolTerm]) -> Iterator[Dict[FolTerm, int]]:
    """Restricted-growth partitions that never merge two atoms or two constants."""
    blocks: List[int] = []
    # Named kinds already present in each block.
    kinds: List[set] = []

    def place(i: int) -> Iterator[Dict[FolTerm, int]]:
        if i == len(symbols):
            yield dict(zip(symbols, blocks))
            return
        kind = type(symbols[i])
        named = kind in (AtomSym, ConstSym)
        for b in range(len(kinds)):
            if named and kind in kinds[b]:
                continue
            blocks.append(b)
            if named:
                kinds[b].add(kind)
            yield from place(i + 1)
            blocks.pop()
            if named:
                kinds[b].discard(kind)
        kinds.append({kind} if named else set())
        blocks.append(len(kinds) - 1)
        yield from place(i + 1)
        blocks.pop()
        kinds.pop()

    yield from place(0)


@Timer("fol>ground", logger=logger.trace)
def sb_satisfiable(out: TranslationOutput) -> bool:
    """Decide the translation with its axioms by grounding over every equality partition."""
    symbols = herbrand_constants(out)
    tried = 0
    for blocks in partitions(symbols):
        tried += 1
        if tried > config.GROUND_MAX_PARTITIONS:
            raise GroundBudgetExceeded(f"more than {config.GROUND_MAX_PARTITIONS} partitions")
        grounding = Grounding(blocks, max(blocks.values()) + 1)
        clauses: Cnf = []
        for c in out.clauses:
            clauses.extend(grounding.cnf(c.formula, {}))
            if len(clauses) > config.GROUND_MAX_CLAUSES:
                raise GroundBudgetExceeded(f"more than {config.GROUND_MAX_CLAUSES} clauses")
        if dpll(list(set(clauses))):
            logger.debug("satisfiable over {} elements (partition {})", grounding.size, tried)
            return True
    logger.debug("unsatisfiable after {} partitions of {} constants", tried, len(symbols))
    return False
