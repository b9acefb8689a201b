"""TPTP-like clause listing."""

from __future__ import annotations

import re
from typing import List

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
)
from setfeat.fol.translate import Clause, TranslationOutput

_LOWER_WORD = re.compile(r"^[a-z][A-Za-z0-9_]*$")

HEADER = "% X_ variables are existentially quantified over the whole listing."


def functor(name: str) -> str:
    """Lower word as is, anything else single-quoted."""
    if _LOWER_WORD.match(name):
        return name
    escaped = name.replace("\\", "\\\\").replace("'", "\\'")
    return f"'{escaped}'"


def render_term(t: FolTerm) -> str:
    match t:
        case UVar(name=name):
            return name
        case Witness(name=name):
            return f"X_{name}"
        case AtomSym(name=name):
            return functor(name)
        case ConstSym(name=name):
            return functor(f"#{name}")
    raise TypeError(f"not a first-order term: {t!r}")


def render_formula(phi: FolFormula) -> str:
    match phi:
        case Rel(rel=f, left=left, right=right):
            return f"{functor(f)}({render_term(left)},{render_term(right)})"
        case Pred(pred=p, arg=arg):
            return f"{functor(p)}({render_term(arg)})"
        case Eq(left=left, right=right):
            return f"{render_term(left)} = {render_term(right)}"
        case Not(body=Eq(left=left, right=right)):
            return f"{render_term(left)} != {render_term(right)}"
        case Not(body=body):
            return f"~{_group(body)}"
        case And(parts=()):
            return "$true"
        case Or(parts=()):
            return "$false"
        case And(parts=parts):
            return " & ".join(_group(p) for p in parts)
        case Or(parts=parts):
            return " | ".join(_group(p) for p in parts)
        case Implies(premise=premise, conclusion=conclusion):
            return f"{_group(premise)} => {_group(conclusion)}"
        case Universal(bound=bound, body=body):
            return f"![{','.join(render_term(v) for v in bound)}]: {_group(body)}"
        case Existential(bound=bound, body=body):
            return f"?[{','.join(render_term(v) for v in bound)}]: {_group(body)}"
    raise TypeError(f"not a first-order formula: {phi!r}")


def _group(phi: FolFormula) -> str:
    text = render_formula(phi)
    if isinstance(phi, (Rel, Pred)) or (isinstance(phi, (And, Or)) and len(phi.parts) < 2):
        return text
    if isinstance(phi, Not) and not isinstance(phi.body, Eq):
        return text
    return f"({text})"


def emit_clause(clause: Clause, role: str) -> str:
    line = f"fof({clause.name}, {role}, {render_formula(clause.formula)})."
    return f"{line} % extrapolated" if clause.extrapolated else line


def emit(out: TranslationOutput) -> str:
    lines: List[str] = [HEADER, f"% root: X_{out.root}"]
    lines += [emit_clause(c, "plain") for c in out.formulas]
    lines += [emit_clause(c, "axiom") for c in out.axioms]
    return "\n".join(lines) + "\n"
