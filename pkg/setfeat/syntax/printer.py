"""Deterministic printer for terms; inverse of the parser."""

from __future__ import annotations

from setfeat.terms.term import (
    Conj,
    Term,
    Exists,
    Forall,
    Feature,
    SetDesc,
    FixedSet,
    Superset,
    Primitive,
    SetOperation,
    Disjointness,
)


def render_name(term: Primitive) -> str:
    text = f"{term.kind.sigil}{term.name}"
    return f"!{text}" if term.negated else text


def render(term: Term) -> str:
    match term:
        case Primitive():
            return render_name(term)
        case Feature(rel=f, body=body):
            return f"{f}: {render(body)}"
        case Exists(rel=f, body=body):
            return f"some {f}: {render(body)}"
        case Forall(rel=f, body=body):
            return f"all {f}: {render(body)}"
        case SetDesc(rel=f, elements=elements):
            return f"{f}: {{{', '.join(render(e) for e in elements)}}}"
        case FixedSet(rel=f, elements=elements):
            return f"{f}: {{{', '.join(render(e) for e in elements)}}}="
        case SetOperation():
            left = f"{term.left_rel}(${term.left_var})"
            right = f"{term.right_rel}(${term.right_var})"
            return f"{term.rel}: {left} {term.keyword} {right}"
        case Superset(rel=f, sub_rel=g, var=x):
            return f"{f}: >= {g}(${x})"
        case Disjointness(left_rel=f, left_var=x, right_rel=g, right_var=y):
            return f"{f}(${x}) != {g}(${y})"
        case Conj(left=left, right=right):
            return f"({render(left)} & {render(right)})"
    raise TypeError(f"cannot render {term!r}")
