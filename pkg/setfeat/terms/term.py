"""Term algebra for feature terms with set descriptions."""

from __future__ import annotations

from typing import ClassVar, Iterable, Iterator, Tuple, Type

import attrs

from setfeat.constant import BOT, TOP, NameKind


class Term:
    """Base of every term variant."""

    __slots__ = ()

    def __and__(self, other: Term) -> Conj:
        return Conj(self, other)


@attrs.frozen
class Primitive(Term):
    """Primitive of the P production (variable, atom, constant, concept)."""

    kind: ClassVar[NameKind]
    negated: ClassVar[bool] = False

    name: str


@attrs.frozen
class Var(Primitive):
    kind = NameKind.VARIABLE


@attrs.frozen
class Atom(Primitive):
    kind = NameKind.ATOM


@attrs.frozen
class Const(Primitive):
    kind = NameKind.CONSTANT


@attrs.frozen
class Concept(Primitive):
    kind = NameKind.CONCEPT

    @property
    def is_top(self) -> bool:
        return self.name == TOP

    @property
    def is_bottom(self) -> bool:
        return self.name == BOT


@attrs.frozen
class NegVar(Primitive):
    kind = NameKind.VARIABLE
    negated = True


@attrs.frozen
class NegAtom(Primitive):
    kind = NameKind.ATOM
    negated = True


@attrs.frozen
class NegConst(Primitive):
    kind = NameKind.CONSTANT
    negated = True


@attrs.frozen
class NegConcept(Primitive):
    kind = NameKind.CONCEPT
    negated = True


@attrs.frozen
class Feature(Term):
    rel: str
    body: Term


@attrs.frozen
class Exists(Term):
    rel: str
    body: Term


@attrs.frozen
class Forall(Term):
    rel: str
    body: Term


@attrs.frozen
class SetDesc(Term):
    rel: str
    elements: Tuple[Term, ...] = attrs.field(converter=tuple)


@attrs.frozen
class FixedSet(Term):
    rel: str
    elements: Tuple[Term, ...] = attrs.field(converter=tuple)


@attrs.frozen
class SetOperation(Term):
    """``rel: left_rel(left_var) <op> right_rel(right_var)``."""

    keyword: ClassVar[str]

    rel: str
    left_rel: str
    left_var: str
    right_rel: str
    right_var: str


@attrs.frozen
class Union(SetOperation):
    keyword = "union"


@attrs.frozen
class Intersection(SetOperation):
    keyword = "isect"


@attrs.frozen
class DisjointUnion(SetOperation):
    keyword = "dunion"


@attrs.frozen
class SetDifference(SetOperation):
    keyword = "minus"


@attrs.frozen
class Superset(Term):
    rel: str
    sub_rel: str
    var: str


@attrs.frozen
class Disjointness(Term):
    left_rel: str
    left_var: str
    right_rel: str
    right_var: str


@attrs.frozen
class Conj(Term):
    left: Term
    right: Term


PRIMITIVES: Tuple[Type[Primitive], ...] = (
    Var,
    Atom,
    Const,
    Concept,
    NegVar,
    NegAtom,
    NegConst,
    NegConcept,
)

_NEGATION = {
    Var: NegVar,
    Atom: NegAtom,
    Const: NegConst,
    Concept: NegConcept,
}
_NEGATION.update({v: k for k, v in list(_NEGATION.items())})


def is_primitive(term: Term) -> bool:
    """Whether ``term`` belongs to the P production."""
    return isinstance(term, Primitive)


def negate(term: Primitive) -> Primitive:
    return _NEGATION[type(term)](term.name)


def conj(*terms: Term) -> Term:
    """Left-associated conjunction of ``terms``."""
    if not terms:
        raise ValueError("conj() needs at least one term")
    result = terms[0]
    for term in terms[1:]:
        result = Conj(result, term)
    return result


def conjuncts(term: Term) -> Iterator[Term]:
    """Flatten nested conjunctions, left to right."""
    if isinstance(term, Conj):
        yield from conjuncts(term.left)
        yield from conjuncts(term.right)
    else:
        yield term


def children(term: Term) -> Iterable[Term]:
    if isinstance(term, (Feature, Exists, Forall)):
        return (term.body,)
    if isinstance(term, (SetDesc, FixedSet)):
        return term.elements
    if isinstance(term, Conj):
        return term.left, term.right
    return ()
