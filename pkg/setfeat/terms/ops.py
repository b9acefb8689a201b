"""Structural operations over terms."""

from __future__ import annotations

from typing import List, Tuple, Iterator, Optional, FrozenSet

import attrs
from boltons.iterutils import unique

from setfeat.constant import NameKind
from setfeat.terms.term import (
    Var,
    NegVar,
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
    DisjointUnion,
    SetDifference,
    Union,
    children,
    is_primitive,
)
from setfeat.terms.signature import Signature


@attrs.frozen
class Violation:
    subterm: Term
    rule: str
    message: str

    def __str__(self) -> str:
        from setfeat.syntax.printer import render

        return f"{self.rule}: {self.message} in `{render(self.subterm)}`"


def names(term: Term) -> List[Tuple[NameKind, str]]:
    """Every ``(kind, name)`` occurring in ``term``, in first-occurrence order."""
    return unique(_names(term))


def _names(term: Term) -> Iterator[Tuple[NameKind, str]]:
    match term:
        case Primitive(name=name):
            yield term.kind, name
        case Feature() | Exists() | Forall() | SetDesc() | FixedSet():
            yield NameKind.RELATION, term.rel
        case SetOperation():
            yield NameKind.RELATION, term.rel
            yield NameKind.RELATION, term.left_rel
            yield NameKind.VARIABLE, term.left_var
            yield NameKind.RELATION, term.right_rel
            yield NameKind.VARIABLE, term.right_var
        case Superset(rel=rel, sub_rel=sub_rel, var=var):
            yield NameKind.RELATION, rel
            yield NameKind.RELATION, sub_rel
            yield NameKind.VARIABLE, var
        case Disjointness(left_rel=f, left_var=x, right_rel=g, right_var=y):
            yield NameKind.RELATION, f
            yield NameKind.VARIABLE, x
            yield NameKind.RELATION, g
            yield NameKind.VARIABLE, y
    for child in children(term):
        yield from _names(child)


def free_vars(term: Term) -> FrozenSet[str]:
    return frozenset(name for kind, name in _names(term) if kind is NameKind.VARIABLE)


def size(term: Term) -> int:
    """Node count."""
    return 1 + sum(size(child) for child in children(term))


def is_difference_shape(term: Term) -> bool:
    """``$x & f: g($y) minus h($z)``."""
    return (
        isinstance(term, Conj)
        and isinstance(term.left, Var)
        and isinstance(term.right, SetDifference)
    )


def validate(term: Term, sig: Optional[Signature] = None) -> List[Violation]:
    """Collect every well-formedness violation of ``term``.

    Without ``sig`` only structural rules and kind consistency are checked.
    """
    report: List[Violation] = []
    if not is_difference_shape(term):
        _validate(term, report)
    report.extend(_check_names(term, sig))
    return report


def _validate(term: Term, report: List[Violation]) -> None:
    match term:
        case Forall(body=body) if not is_primitive(body):
            report.append(Violation(term, "Forall", "Forall body not in P"))
        case SetDesc(elements=()) | FixedSet(elements=()):
            report.append(Violation(term, type(term).__name__, "empty element list"))
        case SetDifference():
            report.append(
                Violation(term, "SetDifference", "difference allowed only as `$x & f: ...`")
            )
    for child in children(term):
        _validate(child, report)


def _check_names(term: Term, sig: Optional[Signature]) -> Iterator[Violation]:
    seen = {}
    for kind, name in names(term):
        previous = seen.setdefault(name, kind)
        if previous is not kind:
            message = f"{name!r} used as {previous.value} and {kind.value}"
            yield Violation(term, "Signature", message)
            continue
        if sig is not None and not sig.declares(kind, name):
            yield Violation(term, "Signature", f"{kind.value} {name!r} not declared")


def desugar(term: Term) -> Term:
    """Replace every disjoint union by disjointness plus union."""
    match term:
        case DisjointUnion(rel=f, left_rel=g, left_var=x, right_rel=h, right_var=y):
            return Conj(Disjointness(g, x, h, y), Union(f, g, x, h, y))
        case Feature(rel=f, body=body):
            return Feature(f, desugar(body))
        case Exists(rel=f, body=body):
            return Exists(f, desugar(body))
        case SetDesc(rel=f, elements=elements):
            return SetDesc(f, [desugar(e) for e in elements])
        case FixedSet(rel=f, elements=elements):
            return FixedSet(f, [desugar(e) for e in elements])
        case Conj(left=left, right=right):
            return Conj(desugar(left), desugar(right))
    return term


def reduce_difference(term: Term) -> Term:
    """Trade ``$x & f: g($y) minus h($z)`` for ``$y & g: f($x) dunion h($z)``.

    Both terms are consistent under the same conditions. Other terms come back unchanged.
    """
    if not is_difference_shape(term):
        return term
    x = term.left.name
    diff: SetDifference = term.right
    reduced = DisjointUnion(diff.left_rel, diff.rel, x, diff.right_rel, diff.right_var)
    return Conj(Var(diff.left_var), reduced)


def rename(term: Term, old: str, new: str) -> Term:
    """Replace every occurrence of variable ``old`` by ``new``."""

    def _var(name: str) -> str:
        return new if name == old else name

    match term:
        case Var(name=name) if name == old:
            return Var(new)
        case NegVar(name=name) if name == old:
            return NegVar(new)
        case Feature(rel=f, body=body):
            return Feature(f, rename(body, old, new))
        case Exists(rel=f, body=body):
            return Exists(f, rename(body, old, new))
        case Forall(rel=f, body=body):
            return Forall(f, rename(body, old, new))
        case SetDesc(rel=f, elements=elements):
            return SetDesc(f, [rename(e, old, new) for e in elements])
        case FixedSet(rel=f, elements=elements):
            return FixedSet(f, [rename(e, old, new) for e in elements])
        case SetOperation():
            return attrs.evolve(term, left_var=_var(term.left_var), right_var=_var(term.right_var))
        case Superset(var=var):
            return attrs.evolve(term, var=_var(var))
        case Disjointness(left_var=x, right_var=y):
            return attrs.evolve(term, left_var=_var(x), right_var=_var(y))
        case Conj(left=left, right=right):
            return Conj(rename(left, old, new), rename(right, old, new))
    return term
