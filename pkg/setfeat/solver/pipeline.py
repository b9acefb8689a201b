"""Rule pipes."""
from __future__ import annotations

from typing import Tuple, Union, Iterable, Optional, Protocol, runtime_checkable
from collections import deque

import attrs
from loguru import logger

from setfeat.constant import RuleId
from setfeat.constraints import Constraint, ConstraintSystem


@attrs.frozen
class RuleApplication:
    """Outcome of one rule firing at ``position``."""

    rule: RuleId
    position: str
    branches: Tuple[ConstraintSystem, ...] = attrs.field(converter=tuple)

    @property
    def deterministic(self) -> bool:
        return len(self.branches) == 1

    @property
    def result(self) -> ConstraintSystem:
        return self.branches[0]


@runtime_checkable
class Rule(Protocol):
    rule_id: RuleId

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        ...


def extend(
    cs: ConstraintSystem,
    rule: RuleId,
    position: str,
    remove: Iterable[Constraint] = (),
    add: Iterable[Constraint] = (),
) -> Optional[RuleApplication]:
    """Apply a deterministic consequent, or ``None`` when it adds nothing new."""
    added = [c for c in add if not c.is_trivial]
    if not any(c not in cs for c in added):
        return None
    return RuleApplication(rule, position, (cs.replace(remove, added),))


@attrs.define
class RulePipeline:
    rules: deque[Union[Rule, RulePipeline]] = attrs.field(factory=deque)

    def add_rules(self, *rules: Union[Rule, RulePipeline]) -> RulePipeline:
        self.rules.extend(rules)
        return self

    def first_applicable(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for rule in self.rules:
            if isinstance(rule, RulePipeline):
                application = rule.first_applicable(cs)
            elif isinstance(rule, Rule):
                application = rule.apply(cs)
            else:
                raise TypeError(f"Expected Rule or RulePipeline object, got: {rule}")
            if application is not None:
                logger.trace("applying rule: {} @ {}", application.rule, application.position)
                return application
        return None
