"""Consistency checking: decomposition, then depth-first search over simplification branches."""

from __future__ import annotations

import random
from typing import List, Type, Tuple, Union, ClassVar, Optional, Sequence
from multiprocessing import Pool

import attrs
import psutil
from loguru import logger
from pydantic import Field, BaseModel, validator
from codetiming import Timer

from setfeat.terms import Term, Signature, desugar, validate, free_vars, reduce_difference
from setfeat.config import config
from setfeat.errors import ModelError, SignatureError, StepBudgetExceeded, TermValidationError
from setfeat.syntax import render
from setfeat.constant import RuleId, Defaults, TraceKind
from setfeat.constraints import ConstraintSystem
from setfeat.solver.clash import Clash, detect_clash
from setfeat.solver.model import extract_model
from setfeat.solver.context import Context, SolverFlag
from setfeat.solver.simplify import Branch, Unchanged, Deterministic, simplify_step
from setfeat.solver.decompose import decompose
from setfeat.semantics.denote import holds
from setfeat.semantics.interpretation import Model


class SolverConfig(BaseModel):
    # Rule application fuse.
    max_steps: int = Field(default_factory=lambda: config.MAX_STEPS)
    # Seed for randomized branch order, deterministic order when unset.
    seed: Optional[int] = None
    trace: bool = False
    parallel: bool = False

    @validator("max_steps")
    def validate_max_steps(cls, v: int):
        if v < 1:
            raise ValueError("max_steps must be at least 1")
        return v

    @property
    def flags(self) -> SolverFlag:
        flags = SolverFlag.NONE
        if self.trace:
            flags |= SolverFlag.TRACE
        if self.seed is not None:
            flags |= SolverFlag.RANDOMIZED
        if self.parallel:
            flags |= SolverFlag.PARALLEL
        return flags


@attrs.frozen
class TraceEntry:
    kind: TraceKind
    rule: RuleId
    position: str
    index: int = 0
    total: int = 0

    def __str__(self) -> str:
        if self.kind is TraceKind.RULE:
            return f"{self.rule} @ {self.position}"
        marker = ">" if self.kind is TraceKind.OPEN else "<"
        return f"{marker} {self.rule} {self.index}/{self.total} @ {self.position}"


@attrs.frozen
class SolveStats:
    # Rule applications, decomposition included.
    steps: int
    # Branches entered at choice points.
    branches: int
    # Fresh-name counter once the system is basic, and at the end.
    basic_counter: int
    final_counter: int


@attrs.frozen
class Consistent:
    consistent: ClassVar[bool] = True

    root: str
    normal_form: ConstraintSystem
    model: Model
    trace: Tuple[TraceEntry, ...]
    stats: SolveStats

    @property
    def verdict(self) -> str:
        return "CONSISTENT"

    def summary(self) -> str:
        return self.verdict


@attrs.frozen
class Inconsistent:
    consistent: ClassVar[bool] = False

    root: str
    clashes: Tuple[Clash, ...]
    branches_explored: int
    trace: Tuple[TraceEntry, ...]
    stats: SolveStats

    @property
    def verdict(self) -> str:
        return "INCONSISTENT"

    @property
    def clash(self) -> Clash:
        return self.clashes[0]

    def summary(self) -> str:
        return f"{self.verdict} {self.clash}"


SolveResult = Union[Consistent, Inconsistent]


@attrs.define
class SolverContext(Context[SolverConfig]):
    params: SolverConfig = attrs.field(factory=SolverConfig)
    strategy: Type[DepthFirstSearch] = attrs.field(default=None)

    @property
    def flags(self) -> SolverFlag:
        return self.params.flags

    @classmethod
    def from_config(cls, params: Optional[SolverConfig] = None) -> SolverContext:
        params = params or SolverConfig()
        strategy = DepthFirstSearch
        if SolverFlag.PARALLEL in params.flags:
            if SolverFlag.RANDOMIZED in params.flags:
                logger.warning("randomized branch order is only supported sequentially")
            else:
                strategy = ParallelSearch
        return cls(params=params, strategy=strategy)

    def search_strategy(self, params: SolverConfig) -> DepthFirstSearch:
        return self.strategy(context=self, params=params)

    def assemble(self, term: Term, root: str) -> SolveResult:
        inst = self.search_strategy(self.params)
        return inst.assemble(term, root)


@attrs.define
class DepthFirstSearch:
    context: SolverContext = attrs.field(repr=False)
    params: SolverConfig = attrs.field(repr=False)
    rng: Optional[random.Random] = attrs.field(default=None, repr=False)
    steps: int = 0
    branches: int = 0
    trace: List[TraceEntry] = attrs.field(factory=list, repr=False)
    clashes: List[Clash] = attrs.field(factory=list)

    def __attrs_post_init__(self):
        if self.rng is None and self.params.seed is not None:
            self.rng = random.Random(self.params.seed)

    def record(self, entry: TraceEntry) -> None:
        if SolverFlag.TRACE in self.context.flags:
            self.trace.append(entry)

    def step(self, rule: RuleId, position: str) -> None:
        self.steps += 1
        if self.steps > self.params.max_steps:
            raise StepBudgetExceeded(self.params.max_steps)
        logger.trace("{} @ {}", rule, position)
        self.record(TraceEntry(TraceKind.RULE, rule, position))

    def order(self, total: int) -> List[int]:
        indices = list(range(total))
        if self.rng is not None:
            self.rng.shuffle(indices)
        return indices

    @Timer("solve>decompose", logger=logger.trace)
    def decompose(self, cs: ConstraintSystem) -> ConstraintSystem:
        for application in decompose(cs, self.params.max_steps):
            self.step(application.rule, application.position)
            cs = application.result
        return cs

    def explore(self, cs: ConstraintSystem) -> Optional[ConstraintSystem]:
        while True:
            clash = detect_clash(cs)
            if clash is not None:
                logger.debug("branch closed by {}", clash)
                self.clashes.append(clash)
                return None
            match simplify_step(cs):
                case Unchanged():
                    return cs
                case Deterministic(system=system, rule=rule, position=position):
                    self.step(rule, position)
                    cs = system
                case Branch(branches=branches, rule=rule, position=position):
                    self.step(rule, position)
                    return self.explore_branches(branches, rule, position)

    def explore_branches(
        self, branches: Sequence[ConstraintSystem], rule: RuleId, position: str
    ) -> Optional[ConstraintSystem]:
        total = len(branches)
        for i in self.order(total):
            self.branches += 1
            self.record(TraceEntry(TraceKind.OPEN, rule, position, i + 1, total))
            found = self.explore(branches[i])
            if found is not None:
                return found
            self.record(TraceEntry(TraceKind.CLOSE, rule, position, i + 1, total))
        return None

    @Timer("solve>search", logger=logger.trace)
    def search(self, cs: ConstraintSystem) -> Optional[ConstraintSystem]:
        return self.explore(cs)

    @Timer("solve", logger=logger.success)
    def assemble(self, term: Term, root: str) -> SolveResult:
        logger.info("solving ${} = {}", root, render(term))
        basic = self.decompose(ConstraintSystem.initial(root, term))
        basic_counter = basic.counter
        normal = self.search(basic)

        def stats(final: ConstraintSystem) -> SolveStats:
            return SolveStats(self.steps, self.branches, basic_counter, final.counter)

        if normal is None:
            logger.info("inconsistent after {} steps, {} branches", self.steps, self.branches)
            return Inconsistent(
                root, tuple(self.clashes), self.branches, tuple(self.trace), stats(basic)
            )
        model = extract_model(normal, Signature.from_term(term))
        if not holds(model, model.var(root), term):
            logger.error("extracted model fails ${} = {}", root, render(term))
            raise ModelError("extracted model does not satisfy the root constraint")
        logger.info("consistent after {} steps, {} branches", self.steps, self.branches)
        return Consistent(root, normal, model, tuple(self.trace), stats(normal))


@attrs.frozen
class BranchOutcome:
    normal_form: Optional[ConstraintSystem]
    trace: Tuple[TraceEntry, ...]
    clashes: Tuple[Clash, ...]
    steps: int
    branches: int


def explore_branch(job: Tuple[ConstraintSystem, SolverConfig]) -> BranchOutcome:
    """Worker entry point: search one branch sequentially."""
    cs, params = job
    search = DepthFirstSearch(context=SolverContext(params, DepthFirstSearch), params=params)
    normal = search.explore(cs)
    return BranchOutcome(
        normal, tuple(search.trace), tuple(search.clashes), search.steps, search.branches
    )


@attrs.define
class ParallelSearch(DepthFirstSearch):
    """Fans the first choice point out to a process pool; later ones run sequentially."""

    forked: bool = False

    def explore_branches(
        self, branches: Sequence[ConstraintSystem], rule: RuleId, position: str
    ) -> Optional[ConstraintSystem]:
        if self.forked:
            return super().explore_branches(branches, rule, position)
        self.forked = True
        workers = psutil.cpu_count()
        remaining = max(1, self.params.max_steps - self.steps)
        params = self.params.copy(update=dict(parallel=False, max_steps=remaining))
        total = len(branches)
        logger.info(
            "exploring {} branches of {} @ {} on {} workers", total, rule, position, workers
        )
        with Pool(processes=workers) as pool:
            jobs = [(branch, params) for branch in branches]
            for i, outcome in enumerate(pool.imap(explore_branch, jobs)):
                self.branches += 1 + outcome.branches
                self.steps += outcome.steps
                self.clashes.extend(outcome.clashes)
                self.record(TraceEntry(TraceKind.OPEN, rule, position, i + 1, total))
                self.trace.extend(outcome.trace)
                if outcome.normal_form is not None:
                    return outcome.normal_form
                self.record(TraceEntry(TraceKind.CLOSE, rule, position, i + 1, total))
        return None


def default_root(term: Term) -> str:
    """``x``, or the first free ``x<n>`` when the term uses ``$x``."""
    used = free_vars(term)
    if Defaults.ROOT not in used:
        return Defaults.ROOT
    n = 1
    while f"{Defaults.ROOT}{n}" in used:
        n += 1
    return f"{Defaults.ROOT}{n}"


def prepare(term: Term, root: str) -> Term:
    """Validate ``term`` for solving from ``root`` and remove derived set operations."""
    violations = validate(term)
    if violations:
        raise TermValidationError(violations)
    if root in free_vars(term):
        raise SignatureError(f"root variable ${root} occurs in the term")
    return desugar(reduce_difference(term))


def solve(
    term: Term, root: str = Defaults.ROOT, params: Optional[SolverConfig] = None
) -> SolveResult:
    """Decide whether ``term`` has a non-empty denotation."""
    return SolverContext.from_config(params).assemble(prepare(term, root), root)
