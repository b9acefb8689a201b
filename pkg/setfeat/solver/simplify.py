"""Simplification rules for basic constraint systems.

Every rule scans the system in sorted order and fires at the first match. ``SDis`` instead
splits the disjunction with the fewest live disjuncts, first in sorted order on ties. A given
system always yields the same application. Only ``SDis`` and ``UnionDown`` branch.
"""

from __future__ import annotations

from typing import Set, Dict, List, Tuple, Union, Callable, ClassVar, Iterator, Optional
from collections import defaultdict

import attrs
from boltons.iterutils import unique

from setfeat.terms import (
    Var,
    Atom,
    Const,
    Exists,
    Forall,
    NegVar,
    Concept,
    Feature,
    NegAtom,
    SetDesc,
    NegConst,
    Superset,
    NegConcept,
    Intersection,
    Union as UnionTerm,
)
from setfeat.constant import RuleId
from setfeat.constraints import Disjunctive, Containment, ConstraintSystem
from setfeat.solver.pipeline import RulePipeline, RuleApplication, extend

# Bodies of ``∀f: C̄`` that SForallE and SForall push onto successors.
UNIVERSAL_BODIES = (Concept, NegConcept, NegAtom, NegConst, NegVar)


def _var_set(term) -> Optional[Tuple[str, ...]]:
    if isinstance(term, SetDesc) and all(isinstance(e, Var) for e in term.elements):
        return tuple(e.name for e in term.elements)
    return None


def _plain_sets(cs: ConstraintSystem) -> Iterator[Tuple[Containment, str, Tuple[str, ...]]]:
    for c in cs.containments():
        members = _var_set(c.term)
        if members is not None:
            yield c, c.term.rel, members


def _exists(x: str, f: str, y: str) -> Containment:
    return Containment(x, Exists(f, Var(y)))


@attrs.define
class SEquals:
    """``x = y`` with x occurring elsewhere: replace x by y everywhere else."""

    rule_id: ClassVar[RuleId] = RuleId.SEQUALS

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            if not c.is_equation or c.is_trivial or not cs.occurs(c.var, exclude=c):
                continue
            rest = cs.remove(c).substitute(c.var, c.term.name)
            kept = [k for k in rest.constraints if not k.is_trivial]
            nxt = attrs.evolve(rest, constraints=frozenset(kept) | {c})
            return RuleApplication(self.rule_id, c.var, (nxt,))
        return None


@attrs.define
class SConst:
    rule_id: ClassVar[RuleId] = RuleId.SCONST

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        holders = {}
        for c in cs.containments():
            if not isinstance(c.term, (Atom, Const)):
                continue
            x = holders.setdefault(c.term, c.var)
            if x != c.var:
                application = extend(cs, self.rule_id, x, [c], [Containment(x, Var(c.var))])
                if application is not None:
                    return application
        return None


@attrs.define
class SFeat:
    """``x = f:y`` absorbs every other ``x = F:z`` on the same relation."""

    rule_id: ClassVar[RuleId] = RuleId.SFEAT

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case Feature(rel=f, body=Var(name=y)):
                    for other in cs.about(c.var):
                        match other:
                            case Containment(
                                term=Feature(rel=g, body=Var(name=z))
                                | Exists(rel=g, body=Var(name=z))
                                | Forall(rel=g, body=Var(name=z))
                            ) if g == f and other != c:
                                added = [Containment(y, Var(z))]
                                application = extend(cs, self.rule_id, c.var, [other], added)
                                if application is not None:
                                    return application
        return None


@attrs.define
class SExists:
    rule_id: ClassVar[RuleId] = RuleId.SEXISTS

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case Exists(rel=f, body=Var(name=y)):
                    for other in cs.about(c.var):
                        match other:
                            case Containment(term=Forall(rel=g, body=Var(name=z))) if g == f:
                                added = [
                                    Containment(c.var, Feature(f, Var(y))),
                                    Containment(y, Var(z)),
                                ]
                                application = extend(cs, self.rule_id, c.var, [c, other], added)
                                if application is not None:
                                    return application
        return None


@attrs.define
class SForallE:
    """Push ``∀f: C̄`` onto every f-successor that does not carry it yet."""

    rule_id: ClassVar[RuleId] = RuleId.SFORALLE

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case Forall(rel=f, body=body) if isinstance(body, UNIVERSAL_BODIES):
                    for y in cs.succ(c.var, f):
                        goal = Containment(y, body)
                        if not cs.entails(goal):
                            return extend(cs, self.rule_id, c.var, (), [goal])
        return None


@attrs.define
class SSetF:
    """A plain set meeting ``x = f:y`` or ``x = ∀f:y`` collapses onto y."""

    rule_id: ClassVar[RuleId] = RuleId.SSETF

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for s, f, members in _plain_sets(cs):
            for other in cs.about(s.var):
                match other:
                    case Containment(
                        term=Feature(rel=g, body=Var(name=y)) | Forall(rel=g, body=Var(name=y))
                    ) if g == f:
                        added = [Containment(s.var, Feature(f, Var(y)))]
                        added += [Containment(y, Var(m)) for m in members]
                        application = extend(cs, self.rule_id, s.var, [other, s], added)
                        if application is not None:
                            return application
        return None


@attrs.define
class SSet:
    rule_id: ClassVar[RuleId] = RuleId.SSET

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for s, f, members in _plain_sets(cs):
            if len(members) == 1:
                added = [Containment(s.var, Feature(f, Var(members[0])))]
                application = extend(cs, self.rule_id, s.var, [s], added)
                if application is not None:
                    return application
        return None


@attrs.define
class SDup:
    rule_id: ClassVar[RuleId] = RuleId.SDUP

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for s, f, members in _plain_sets(cs):
            distinct = unique(members)
            if len(distinct) < len(members):
                added = [Containment(s.var, SetDesc(f, [Var(m) for m in distinct]))]
                application = extend(cs, self.rule_id, s.var, [s], added)
                if application is not None:
                    return application
        return None


@attrs.define
class SForall:
    """``∀f: C̄`` against a plain set is discharged onto the members."""

    rule_id: ClassVar[RuleId] = RuleId.SFORALL

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for s, f, members in _plain_sets(cs):
            for other in cs.about(s.var):
                match other:
                    case Containment(term=Forall(rel=g, body=body)) if g == f and isinstance(
                        body, UNIVERSAL_BODIES
                    ):
                        added = [Containment(m, body) for m in members]
                        if all(cs.entails(a) for a in added):
                            continue
                        application = extend(cs, self.rule_id, s.var, [other], added)
                        if application is not None:
                            return application
        return None


@attrs.define
class SSetE:
    rule_id: ClassVar[RuleId] = RuleId.SSETE

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for s, f, members in _plain_sets(cs):
            for other in cs.about(s.var):
                match other:
                    case Containment(term=Exists(rel=g, body=Var(name=y))) if g == f:
                        added = [Disjunctive(y, members)]
                        application = extend(cs, self.rule_id, s.var, [other], added)
                        if application is not None:
                            return application
        return None


@attrs.define
class SSetSet:
    """Two plain sets on one relation: keep the smaller, relate members both ways."""

    rule_id: ClassVar[RuleId] = RuleId.SSETSET

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        sets = list(_plain_sets(cs))
        for i, (s, f, xs) in enumerate(sets):
            for t, g, ys in sets[i + 1 :]:
                if t.var != s.var or g != f:
                    continue
                # ordered by sort key, so on equal size the first set is kept
                if len(ys) < len(xs):
                    s, xs, t, ys = t, ys, s, xs
                added = [Disjunctive(x, ys) for x in xs] + [Disjunctive(y, xs) for y in ys]
                application = extend(cs, self.rule_id, s.var, [t], added)
                if application is not None:
                    return application
        return None


@attrs.define
class _ClassFacts:
    """Atoms and negations per equivalence class, for forward checking choices."""

    find: Callable[[str], str]
    atoms: Dict[str, set] = attrs.field(factory=lambda: defaultdict(set))
    negated: Set[Tuple[str, str]] = attrs.field(factory=set)

    @classmethod
    def of(cls, cs: ConstraintSystem) -> _ClassFacts:
        facts = cls(cs.index.equalities.find)
        for x, terms in cs.index.literals.items():
            facts.atoms[facts.find(x)] |= {t for t in terms if isinstance(t, Atom)}
        facts.negated = {(facts.find(x), facts.find(y)) for x, y in cs.index.negations}
        return facts

    def live(self, x: str, y: str) -> bool:
        """Whether ``x = y`` survives the atom and complement clashes."""
        rx, ry = self.find(x), self.find(y)
        return len(self.atoms[rx] | self.atoms[ry]) <= 1 and (rx, ry) not in self.negated


@attrs.define
class SDis:
    """Choose one disjunct of an undecided ``x = x1 | ... | xn``.

    Every disjunct becomes a branch, in listed order. Of the undecided disjunctions the one
    with the fewest live disjuncts is split first, so forced choices propagate before any
    real guess.
    """

    rule_id: ClassVar[RuleId] = RuleId.SDIS

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        facts: Optional[_ClassFacts] = None
        best: Optional[Tuple[int, Disjunctive, List[str]]] = None
        for d in cs.ordered:
            if not isinstance(d, Disjunctive):
                continue
            choices = list(unique(d.choices))
            if any(cs.entails(Containment(d.var, Var(c))) for c in choices):
                continue
            facts = facts or _ClassFacts.of(cs)
            live = sum(facts.live(d.var, c) for c in choices)
            if best is None or live < best[0]:
                best = (live, d, choices)
            if live <= 1:
                break
        if best is None:
            return None
        _, d, choices = best
        branches = [cs.add(Containment(d.var, Var(c))) for c in choices]
        return RuleApplication(self.rule_id, d.var, branches)


@attrs.define
class Subset:
    rule_id: ClassVar[RuleId] = RuleId.SUBSET

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case Superset(rel=f, sub_rel=g, var=y):
                    for yi in cs.succ(y, g):
                        goal = _exists(c.var, f, yi)
                        if not cs.entails(goal):
                            return extend(cs, self.rule_id, c.var, (), [goal])
        return None


@attrs.define
class UnionLeft:
    rule_id: ClassVar[RuleId] = RuleId.UNION_LEFT

    def _part(self, term: UnionTerm) -> Superset:
        return Superset(term.rel, term.left_rel, term.left_var)

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            if isinstance(c.term, UnionTerm):
                goal = Containment(c.var, self._part(c.term))
                if not cs.entails(goal):
                    return extend(cs, self.rule_id, c.var, (), [goal])
        return None


@attrs.define
class UnionRight(UnionLeft):
    rule_id: ClassVar[RuleId] = RuleId.UNION_RIGHT

    def _part(self, term: UnionTerm) -> Superset:
        return Superset(term.rel, term.right_rel, term.right_var)


@attrs.define
class UnionDown:
    """Every f-value of x comes from the g-side or from the h-side."""

    rule_id: ClassVar[RuleId] = RuleId.UNION_DOWN

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case UnionTerm(rel=f, left_rel=g, left_var=y, right_rel=h, right_var=z):
                    for xi in cs.succ(c.var, f):
                        left, right = _exists(y, g, xi), _exists(z, h, xi)
                        if cs.entails(left) or cs.entails(right):
                            continue
                        return RuleApplication(self.rule_id, c.var, (cs.add(left), cs.add(right)))
        return None


@attrs.define
class IsectDown:
    rule_id: ClassVar[RuleId] = RuleId.ISECT_DOWN

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case Intersection(rel=f, left_rel=g, left_var=y, right_rel=h, right_var=z):
                    for xi in cs.succ(c.var, f):
                        added = [_exists(y, g, xi), _exists(z, h, xi)]
                        if all(cs.entails(a) for a in added):
                            continue
                        return extend(cs, self.rule_id, c.var, (), added)
        return None


@attrs.define
class IsectUp:
    rule_id: ClassVar[RuleId] = RuleId.ISECT_UP

    def apply(self, cs: ConstraintSystem) -> Optional[RuleApplication]:
        for c in cs.containments():
            match c.term:
                case Intersection(rel=f, left_rel=g, left_var=y, right_rel=h, right_var=z):
                    shared = [xi for xi in cs.succ(y, g) if xi in cs.succ(z, h)]
                    for xi in shared:
                        goal = _exists(c.var, f, xi)
                        if not cs.entails(goal):
                            return extend(cs, self.rule_id, c.var, (), [goal])
        return None


DeterministicPipeline = RulePipeline().add_rules(
    SEquals(),
    SConst(),
    SFeat(),
    SExists(),
    SForallE(),
    SSetF(),
    SSet(),
    SDup(),
    SForall(),
    SSetE(),
    SSetSet(),
    Subset(),
    UnionLeft(),
    UnionRight(),
    IsectDown(),
    IsectUp(),
)

SimplificationPipeline = RulePipeline().add_rules(DeterministicPipeline, SDis(), UnionDown())


@attrs.frozen
class Unchanged:
    pass


@attrs.frozen
class Deterministic:
    system: ConstraintSystem
    rule: RuleId
    position: str


@attrs.frozen
class Branch:
    branches: Tuple[ConstraintSystem, ...] = attrs.field(converter=tuple)
    rule: RuleId
    position: str


StepOutcome = Union[Unchanged, Deterministic, Branch]


def simplify_step(cs: ConstraintSystem) -> StepOutcome:
    """Apply the first applicable simplification rule to a basic system."""
    application = SimplificationPipeline.first_applicable(cs)
    if application is None:
        return Unchanged()
    if application.deterministic:
        return Deterministic(application.result, application.rule, application.position)
    return Branch(application.branches, application.rule, application.position)
