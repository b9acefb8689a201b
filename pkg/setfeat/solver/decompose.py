"""Decomposition rules: bring a constraint system into basic form."""

from __future__ import annotations

from typing import ClassVar, Optional

import attrs
from loguru import logger
from codetiming import Timer

from setfeat.terms import (
    Var,
    Atom,
    Conj,
    Const,
    Exists,
    Forall,
    Feature,
    SetDesc,
    FixedSet,
)
from setfeat.errors import StepBudgetExceeded
from setfeat.config import config
from setfeat.constant import RuleId
from setfeat.constraints import Containment, ConstraintSystem
from setfeat.solver.pipeline import RulePipeline, RuleApplication


def _all_vars(elements) -> bool:
    return all(isinstance(e, Var) for e in elements)


@attrs.define
class DFeat:
    """``x = F:T`` with T not a variable becomes ``x = F:y & y = T``."""

    rule_id: ClassVar[RuleId] = RuleId.DFEAT

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case Feature(rel=f, body=body) | Exists(rel=f, body=body) if not isinstance(
                    body, Var
                ):
                    (y,), nxt = cs.fresh()
                    head = type(c.term)(f, Var(y))
                    nxt = nxt.replace([c], [Containment(c.var, head), Containment(y, body)])
                    return RuleApplication(self.rule_id, c.var, (nxt,))
        return None


@attrs.define
class DForall:
    rule_id: ClassVar[RuleId] = RuleId.DFORALL

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case Forall(rel=f, body=Atom() | Const() as body):
                    (y,), nxt = cs.fresh()
                    added = [Containment(c.var, Forall(f, Var(y))), Containment(y, body)]
                    return RuleApplication(self.rule_id, c.var, (nxt.replace([c], added),))
        return None


@attrs.define
class DSet:
    rule_id: ClassVar[RuleId] = RuleId.DSET

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case SetDesc(rel=f, elements=elements) if not _all_vars(elements):
                    names, nxt = cs.fresh(len(elements))
                    added = [Containment(c.var, SetDesc(f, [Var(n) for n in names]))]
                    added += [Containment(n, t) for n, t in zip(names, elements)]
                    return RuleApplication(self.rule_id, c.var, (nxt.replace([c], added),))
        return None


@attrs.define
class DSetF:
    """Split a fixed set into plain set plus fixed set over fresh members.

    An all-variable fixed set without its plain companion only gains the companion, unless
    ``companions`` is off. Simplification may rewrite a companion away, so the basic-form
    check of a finished system runs with it off.
    """

    rule_id: ClassVar[RuleId] = RuleId.DSETF
    companions: bool = True

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case FixedSet(rel=f, elements=elements) if not _all_vars(elements):
                    names, nxt = cs.fresh(len(elements))
                    members = [Var(n) for n in names]
                    added = [
                        Containment(c.var, SetDesc(f, members)),
                        Containment(c.var, FixedSet(f, members)),
                    ]
                    added += [Containment(n, t) for n, t in zip(names, elements)]
                    return RuleApplication(self.rule_id, c.var, (nxt.replace([c], added),))
                case FixedSet(rel=f, elements=elements) if self.companions:
                    companion = Containment(c.var, SetDesc(f, elements))
                    if companion not in cs:
                        return RuleApplication(self.rule_id, c.var, (cs.add(companion),))
        return None


@attrs.define
class DConj:
    rule_id: ClassVar[RuleId] = RuleId.DCONJ

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case Conj(left=left, right=right):
                    added = [Containment(c.var, left), Containment(c.var, right)]
                    return RuleApplication(self.rule_id, c.var, (cs.replace([c], added),))
        return None


DecompositionPipeline = RulePipeline().add_rules(DConj(), DFeat(), DForall(), DSet(), DSetF())

# Basic form proper: no rule splits a compound term.
BasicFormPipeline = RulePipeline().add_rules(
    DConj(), DFeat(), DForall(), DSet(), DSetF(companions=False)
)


def decompose(cs: ConstraintSystem, max_steps: Optional[int] = None):
    """Yield every decomposition step until the system is basic."""
    max_steps = max_steps or config.MAX_STEPS
    for _ in range(max_steps):
        application = DecompositionPipeline.first_applicable(cs)
        if application is None:
            return
        cs = application.result
        yield application
    if DecompositionPipeline.first_applicable(cs) is not None:
        raise StepBudgetExceeded(max_steps)


@Timer("solve>decompose", logger=logger.trace)
def to_basic(cs: ConstraintSystem, max_steps: Optional[int] = None) -> ConstraintSystem:
    for application in decompose(cs, max_steps):
        cs = application.result
    return cs
