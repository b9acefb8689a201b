"""Translation of ``root = term`` into the exists-forall class."""

from __future__ import annotations

import itertools
from typing import List, Tuple, Iterator, FrozenSet

import attrs
from loguru import logger
from codetiming import Timer

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
    Existential,
    neq,
    subformulas,
)
from setfeat.terms import (
    Var,
    Atom,
    Conj,
    Term,
    Const,
    Union,
    Exists,
    Forall,
    NegVar,
    Concept,
    Feature,
    NegAtom,
    SetDesc,
    FixedSet,
    NegConst,
    Superset,
    Signature,
    NegConcept,
    Disjointness,
    Intersection,
    names,
    desugar,
    free_vars,
)
from setfeat.constant import BOT, TOP, Defaults, NameKind
from setfeat.constraints.system import fresh_index


@attrs.frozen
class Clause:
    name: str
    formula: FolFormula
    # Case not among the printed definitions, derived from the decomposition rules.
    extrapolated: bool = False


@attrs.frozen
class Symbols:
    relations: FrozenSet[str]
    atoms: FrozenSet[str]
    constants: FrozenSet[str]
    predicates: FrozenSet[str]
    witnesses: Tuple[str, ...]


@attrs.frozen
class TranslationOutput:
    root: str
    formulas: Tuple[Clause, ...]
    axioms: Tuple[Clause, ...]
    symbols: Symbols

    @property
    def clauses(self) -> Tuple[Clause, ...]:
        return self.formulas + self.axioms

    @property
    def extrapolated(self) -> Tuple[Clause, ...]:
        return tuple(c for c in self.clauses if c.extrapolated)

    def universals(self) -> Tuple[UVar, ...]:
        bound: List[UVar] = []
        for c in self.clauses:
            if isinstance(c.formula, Universal):
                bound.extend(c.formula.bound)
        return tuple(bound)


@attrs.define
class Translator:
    """Recursive translation; fresh witnesses and universals are numbered per translation."""

    fresh: Iterator[int]
    universal: Iterator[int] = attrs.field(factory=lambda: itertools.count(1))
    witnesses: List[str] = attrs.field(factory=list)
    clauses: List[Tuple[FolFormula, bool]] = attrs.field(factory=list)

    def witness(self, name: str) -> Witness:
        if name not in self.witnesses:
            self.witnesses.append(name)
        return Witness(name)

    def new_witness(self) -> Witness:
        return self.witness(f"{Defaults.FRESH_PREFIX}{next(self.fresh)}")

    def new_universal(self) -> UVar:
        return UVar(f"Y{next(self.universal)}")

    def emit(self, formula: FolFormula, extrapolated: bool = False) -> None:
        self.clauses.append((formula, extrapolated))

    def value(self, term: Term) -> FolTerm:
        """First-order term for a primitive in element position."""
        match term:
            case Atom(name=a) | NegAtom(name=a):
                return AtomSym(a)
            case Const(name=c) | NegConst(name=c):
                return ConstSym(c)
            case Var(name=v) | NegVar(name=v):
                return self.witness(v)
        raise TypeError(f"no element for {term!r}")

    def membership(self, x: FolTerm, term: Term) -> Tuple[FolFormula, bool]:
        """``x`` lies in a primitive, with whether the case is extrapolated."""
        match term:
            case Atom():
                return Eq(x, self.value(term)), False
            case NegAtom():
                return neq(x, self.value(term)), False
            case Var() | Const():
                return Eq(x, self.value(term)), True
            case NegVar() | NegConst():
                return neq(x, self.value(term)), True
            case Concept(name=c):
                return Pred(c, x), True
            case NegConcept(name=c):
                return Not(Pred(c, x)), True
        raise TypeError(f"not a primitive: {term!r}")

    def translate(self, x: FolTerm, term: Term) -> None:
        match term:
            case Conj(left=left, right=right):
                self.translate(x, left)
                self.translate(x, right)
            case Feature(rel=f, body=body):
                y, y2 = self.new_witness(), self.new_universal()
                self.emit(Rel(f, x, y))
                self.emit(Universal([y2], Implies(Rel(f, x, y2), Eq(y, y2))))
                self.translate(y, body)
            case Exists(rel=f, body=body):
                y = self.new_witness()
                self.emit(Rel(f, x, y))
                self.translate(y, body)
            case Forall(rel=f, body=body):
                y = self.new_universal()
                inside, extrapolated = self.membership(y, body)
                self.emit(Universal([y], Implies(Rel(f, x, y), inside)), extrapolated)
            case SetDesc(rel=f, elements=elements):
                self.set_description(x, f, elements, False)
            case FixedSet(rel=f, elements=elements):
                members = self.set_description(x, f, elements, True)
                for a, b in itertools.combinations(members, 2):
                    self.emit(neq(a, b), True)
            case Union(rel=f, left_rel=g, left_var=y, right_rel=h, right_var=z):
                y, z = self.witness(y), self.witness(z)
                u, v, w = self.new_universal(), self.new_universal(), self.new_universal()
                either = Or([Rel(g, y, u), Rel(h, z, u)])
                self.emit(Universal([u], Implies(Rel(f, x, u), either)))
                self.emit(Universal([v], Implies(Rel(g, y, v), Rel(f, x, v))))
                self.emit(Universal([w], Implies(Rel(h, z, w), Rel(f, x, w))))
            case Intersection(rel=f, left_rel=g, left_var=y, right_rel=h, right_var=z):
                y, z = self.witness(y), self.witness(z)
                u, v = self.new_universal(), self.new_universal()
                inside = And([Rel(g, y, u), Rel(h, z, u)])
                self.emit(Universal([u], Implies(Rel(f, x, u), inside)), True)
                self.emit(
                    Universal([v], Implies(And([Rel(g, y, v), Rel(h, z, v)]), Rel(f, x, v))), True
                )
            case Superset(rel=f, sub_rel=g, var=y):
                y, u = self.witness(y), self.new_universal()
                self.emit(Universal([u], Implies(Rel(g, y, u), Rel(f, x, u))), True)
            case Disjointness(left_rel=f, left_var=y, right_rel=g, right_var=z):
                y, z = self.witness(y), self.witness(z)
                yi, zj = self.new_universal(), self.new_universal()
                both = And([Rel(f, y, yi), Rel(g, z, zj)])
                self.emit(Universal([yi, zj], Implies(both, neq(yi, zj))))
            case _:
                self.emit(*self.membership(x, term))

    def set_description(
        self, x: FolTerm, f: str, elements: Tuple[Term, ...], extrapolated: bool
    ) -> List[Witness]:
        members = [self.new_witness() for _ in elements]
        for m in members:
            self.emit(Rel(f, x, m), extrapolated)
        y = self.new_universal()
        cover = Or([Eq(y, m) for m in members])
        self.emit(Universal([y], Implies(Rel(f, x, y), cover)), extrapolated)
        for m, element in zip(members, elements):
            self.translate(m, element)
        return members


def _start(term: Term, root: str) -> Iterator[int]:
    taken = free_vars(term) | {root}
    return itertools.count(max((fresh_index(v) for v in taken), default=0) + 1)


def axioms(term: Term, start: int = 1) -> List[Clause]:
    """Atomicity, unique names for atoms and constants, and the Top/Bot predicates."""
    sig = Signature.from_term(term)
    atoms, relations, constants = sorted(sig.atoms), sorted(sig.relations), sorted(sig.constants)
    formulas: List[Tuple[FolFormula, bool]] = []
    y = UVar("Y1")
    for a in atoms:
        for f in relations:
            formulas.append((Universal([y], Not(Rel(f, AtomSym(a), y))), False))
    for a, b in itertools.combinations(atoms, 2):
        formulas.append((neq(AtomSym(a), AtomSym(b)), False))
    for c, d in itertools.combinations(constants, 2):
        formulas.append((neq(ConstSym(c), ConstSym(d)), True))
    mentioned = {name for kind, name in names(term) if kind is NameKind.CONCEPT}
    if TOP in mentioned:
        formulas.append((Universal([y], Pred(TOP, y)), True))
    if BOT in mentioned:
        formulas.append((Universal([y], Not(Pred(BOT, y))), True))
    return [
        Clause(f"ax_{i}", formula, extrapolated)
        for i, (formula, extrapolated) in enumerate(formulas, start=start)
    ]


@Timer("fol>translate", logger=logger.trace)
def translate(root: str, term: Term, with_axioms: bool = True) -> TranslationOutput:
    """Translate ``root = term`` for a validated ``term``."""
    term = desugar(term)
    tr = Translator(_start(term, root))
    tr.translate(tr.witness(root), term)
    formulas = tuple(
        Clause(f"tr_{i}", formula, extrapolated)
        for i, (formula, extrapolated) in enumerate(tr.clauses, start=1)
    )
    ax = tuple(axioms(term)) if with_axioms else ()
    sig = Signature.from_term(term)
    predicates = frozenset(p.pred for c in formulas + ax for p in _preds(c.formula))
    symbols = Symbols(sig.relations, sig.atoms, sig.constants, predicates, tuple(tr.witnesses))
    logger.debug(
        "translated into {} formulas and {} axioms, {} extrapolated",
        len(formulas),
        len(ax),
        sum(c.extrapolated for c in formulas + ax),
    )
    return TranslationOutput(root, formulas, ax, symbols)


def _preds(phi: FolFormula) -> Iterator[Pred]:
    return (s for s in subformulas(phi) if isinstance(s, Pred))


def sentence(out: TranslationOutput) -> FolFormula:
    """The whole output as one prenex exists-forall conjunction."""
    matrix: List[FolFormula] = []
    for c in out.clauses:
        matrix.append(c.formula.body if isinstance(c.formula, Universal) else c.formula)
    universals = _distinct_universals(out)
    body: FolFormula = And(matrix)
    if universals:
        body = Universal(universals, body)
    return Existential([Witness(w) for w in out.symbols.witnesses], body)


def _distinct_universals(out: TranslationOutput) -> Tuple[UVar, ...]:
    seen: List[UVar] = []
    for u in out.universals():
        if u not in seen:
            seen.append(u)
    return tuple(seen)


__all__ = [
    "Clause",
    "Symbols",
    "Translator",
    "TranslationOutput",
    "axioms",
    "sentence",
    "translate",
]
