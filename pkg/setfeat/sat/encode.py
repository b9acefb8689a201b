"""Reduction of propositional satisfiability to term consistency.

A truth assignment becomes an object whose ``f`` values are exactly the atoms ``true`` and
``false`` and among which every logic variable ``$x<a>`` must lie. The evaluation of a
formula is a term whose value is forced to be ``true``.
"""

from __future__ import annotations

from typing import Dict, List, Tuple, Mapping

import attrs
from loguru import logger

from setfeat.terms import Var, Atom, Term, Exists, NegVar, SetDesc, conj
from setfeat.errors import SignatureError, ReservedNameError
from setfeat.constant import RESERVED_ATOMS, Defaults
from setfeat.sat.clausal import tseitin, is_clausal
from setfeat.sat.formula import POr, PAnd, PNot, PVar, PropFormula, prop_vars

F = Defaults.ENCODING_RELATION


def logic_var(name: str) -> str:
    """Logic variable standing for the propositional variable ``name``."""
    if name in RESERVED_ATOMS:
        raise ReservedNameError(f"propositional variable {name!r} is a reserved atom")
    return f"x{name}"


@attrs.define
class _Evaluation:
    var_map: Dict[str, str] = attrs.field(factory=dict)
    eval_vars: List[str] = attrs.field(factory=list)
    witnesses: List[Term] = attrs.field(factory=list)

    def var(self, name: str) -> Var:
        if name not in self.var_map:
            self.var_map[name] = logic_var(name)
        return Var(self.var_map[name])

    def fresh(self) -> str:
        name = f"x{len(self.eval_vars) + 1}"
        self.eval_vars.append(name)
        return name

    def printed(self, phi: PropFormula) -> Term:
        match phi:
            case PVar(name=name):
                return self.var(name)
            case PAnd(left=left, right=right):
                return self.printed(left) & self.printed(right)
            case POr(left=left, right=right):
                s, t = self.printed(left), self.printed(right)
                x = self.fresh()
                return Var(x) & Exists(F, SetDesc(F, (s, t)) & Exists(F, Var(x)))
            case PNot(operand=operand):
                s = self.printed(operand)
                x = self.fresh()
                return Var(x) & Exists(F, s & NegVar(x))
        raise TypeError(f"not a propositional formula: {phi!r}")

    def hoisted(self, phi: PropFormula) -> Term:
        """Value of ``phi``; the parts nested below an eval variable go to ``witnesses``."""
        match phi:
            case PVar(name=name):
                return self.var(name)
            case PAnd(left=left, right=right):
                return self.hoisted(left) & self.hoisted(right)
            case POr(left=left, right=right):
                s, t = self.hoisted(left), self.hoisted(right)
                x = self.fresh()
                self.witnesses.append(SetDesc(F, (s, t)) & Exists(F, Var(x)))
                return Var(x)
            case PNot(operand=operand):
                s = self.hoisted(operand)
                x = self.fresh()
                self.witnesses.append(s & NegVar(x))
                return Var(x)
        raise TypeError(f"not a propositional formula: {phi!r}")

    def check(self) -> None:
        clash = set(self.var_map.values()) & set(self.eval_vars)
        if clash:
            raise SignatureError(f"variables {sorted(clash)} name both inputs and evaluations")


def tau(phi: PropFormula) -> Tuple[Term, Tuple[str, ...]]:
    """Evaluation term of ``phi`` with its eval variables, in post-order."""
    ev = _Evaluation()
    term = ev.printed(phi)
    ev.check()
    return term, tuple(ev.eval_vars)


def _delta(phi: PropFormula, eval_vars: Tuple[str, ...]) -> Term:
    truth = SetDesc(F, (Atom(Defaults.TRUE_ATOM), Atom(Defaults.FALSE_ATOM)))
    names = [logic_var(a) for a in prop_vars(phi)] + list(eval_vars)
    return conj(truth, *(Exists(F, Var(x)) for x in names))


def delta(phi: PropFormula) -> Term:
    """Truth assignment term over the inputs of ``phi`` and the eval variables of ``tau``."""
    _, eval_vars = tau(phi)
    return _delta(phi, eval_vars)


@attrs.frozen
class Encoding:
    # Formula as given.
    formula: PropFormula
    # Clausal formula actually encoded.
    clausal: PropFormula
    term: Term
    var_map: Mapping[str, str]
    eval_vars: Tuple[str, ...]


def encode(phi: PropFormula) -> Encoding:
    """Term that is consistent iff ``phi`` is satisfiable.

    Witness parts are conjoined at the root instead of below the eval variable that owns
    them, since an eval variable denotes an atom and atoms have no successors.
    """
    clausal = phi if is_clausal(phi) else tseitin(phi)
    ev = _Evaluation()
    value = ev.hoisted(clausal)
    ev.check()
    eval_vars = tuple(ev.eval_vars)
    term = conj(
        Exists(F, _delta(clausal, eval_vars)),
        Exists(F, Atom(Defaults.TRUE_ATOM) & value),
        *(Exists(F, w) for w in ev.witnesses),
    )
    logger.debug(
        "encoded {} inputs, {} eval variables, {} witnesses",
        len(ev.var_map),
        len(eval_vars),
        len(ev.witnesses),
    )
    return Encoding(phi, clausal, term, dict(ev.var_map), eval_vars)
