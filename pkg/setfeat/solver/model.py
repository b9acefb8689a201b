"""Reading a model off a clash-free normal form."""

from __future__ import annotations

from typing import Dict, List, Tuple, Optional, FrozenSet

from loguru import logger

from setfeat.terms import Atom, Const, Concept, Signature, names
from setfeat.errors import ModelError
from setfeat.constant import BOT, TOP, NameKind
from setfeat.constraints import ConstraintSystem, representative
from setfeat.solver.clash import detect_clash
from setfeat.solver.simplify import Unchanged, simplify_step
from setfeat.solver.decompose import BasicFormPipeline
from setfeat.semantics.interpretation import Model, Assignment, Interpretation


def element_of(kind: NameKind, name: str) -> str:
    """Element id of a name: atoms denote themselves, others carry their sigil."""
    return kind.sigil + name


def _literals(cs: ConstraintSystem, kind: type) -> List[Tuple[str, str]]:
    return [(c.var, c.term.name) for c in cs.containments() if type(c.term) is kind]


def check_normal_form(cs: ConstraintSystem) -> None:
    clash = detect_clash(cs)
    if clash is not None:
        raise ModelError(f"constraint system has a clash ({clash})")
    if BasicFormPipeline.first_applicable(cs) is not None:
        raise ModelError("constraint system is not basic")
    if not isinstance(simplify_step(cs), Unchanged):
        raise ModelError("constraint system is not in normal form")


def extract_model(cs: ConstraintSystem, sig: Optional[Signature] = None) -> Model:
    """Canonical model of a clash-free normal form.

    Every equivalence class of variables becomes one element: the atom some member is equal
    to, or else the element of its least member. ``sig`` adds names that the model must
    interpret although they no longer occur in ``cs``.
    """
    check_normal_form(cs)
    sig = sig or Signature()

    atom_of: Dict[str, str] = {}
    for x, a in _literals(cs, Atom):
        atom_of.setdefault(x, a)

    alpha: Dict[str, str] = {}
    for cls in cs.equiv_classes(over=sig.variables):
        atoms = sorted(atom_of[v] for v in cls if v in atom_of)
        element = atoms[0] if atoms else element_of(NameKind.VARIABLE, representative(cls))
        for v in cls:
            alpha[v] = element

    consts: Dict[str, str] = {}
    for x, c in _literals(cs, Const):
        consts.setdefault(c, alpha[x])
    for c in sorted(sig.constants):
        consts.setdefault(c, element_of(NameKind.CONSTANT, c))

    concepts: Dict[str, set] = {c: set() for c in sig.concepts - {TOP, BOT}}
    for x, name in _literals(cs, Concept):
        if name not in (TOP, BOT):
            concepts.setdefault(name, set()).add(alpha[x])

    atom_names = set(sig.atoms)
    for c in cs.containments():
        atom_names |= {name for kind, name in names(c.term) if kind is NameKind.ATOM}

    relations: Dict[str, set] = {f: set() for f in sig.relations}
    for (x, f), successors in cs.index.successors.items():
        for y in successors:
            relations.setdefault(f, set()).add((alpha[x], alpha[y]))

    universe: FrozenSet[str] = (
        frozenset(alpha.values()) | frozenset(atom_names) | frozenset(consts.values())
    )
    logger.debug("extracted model over {} elements", len(universe))
    interp = Interpretation(universe, {a: a for a in atom_names}, relations)
    return Model(interp, Assignment(alpha, consts, concepts))
