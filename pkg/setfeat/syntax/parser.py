"""LALR parser for terms and corpus files."""

from __future__ import annotations

import threading
from typing import Dict, List, Tuple, Union, Optional
from pathlib import Path

import attrs
from ply import yacc
from loguru import logger

from setfeat.errors import TermSyntaxError, TermValidationError
from setfeat.terms.ops import names, validate
from setfeat.terms.term import (
    Var,
    Atom,
    Conj,
    Term,
    Const,
    Union as UnionTerm,
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
    NegConcept,
    Disjointness,
    Intersection,
    DisjointUnion,
    SetDifference,
)
from setfeat.syntax.lexer import TermLexer, find_column
from setfeat.terms.signature import Signature

Document = Union[Term, List[Tuple[str, Term]]]

_SET_OPERATIONS = {
    "union": UnionTerm,
    "isect": Intersection,
    "dunion": DisjointUnion,
    "minus": SetDifference,
}


@attrs.frozen
class SourceText:
    text: str
    origin: str = "<stdin>"

    @classmethod
    def from_path(cls, path: Union[str, Path]) -> SourceText:
        path = Path(path)
        return cls(text=path.read_text(encoding="utf-8"), origin=str(path))


class TermParser:
    tokens = TermLexer.tokens

    def __init__(self):
        self.lexer = TermLexer()
        self.parser = yacc.yacc(
            module=self,
            start="document",
            write_tables=False,
            debug=False,
            errorlog=yacc.NullLogger(),
        )

    def parse(self, src: SourceText) -> Document:
        self.lexer.origin = src.origin
        return self.parser.parse(src.text, lexer=self.lexer)

    def p_document(self, p):
        """document : term
        | clauses"""
        p[0] = p[1]

    def p_clauses(self, p):
        """clauses : clause
        | clauses clause"""
        p[0] = [p[1]] if len(p) == 2 else p[1] + [p[2]]

    def p_clause(self, p):
        """clause : IDENT EQ term DOT"""
        p[0] = (p[1], p[3])

    def p_term_conj(self, p):
        """term : term AMP unary"""
        p[0] = Conj(p[1], p[3])

    def p_term_unary(self, p):
        """term : unary"""
        p[0] = p[1]

    def p_unary_group(self, p):
        """unary : LPAREN term RPAREN"""
        p[0] = p[2]

    def p_unary_primitive(self, p):
        """unary : primitive"""
        p[0] = p[1]

    def p_unary_feature(self, p):
        """unary : IDENT COLON unary"""
        p[0] = Feature(p[1], p[3])

    def p_unary_exists(self, p):
        """unary : SOME IDENT COLON unary"""
        p[0] = Exists(p[2], p[4])

    def p_unary_forall(self, p):
        """unary : ALL IDENT COLON unary"""
        p[0] = Forall(p[2], p[4])

    def p_unary_set(self, p):
        """unary : IDENT COLON LBRACE elements RBRACE
        | IDENT COLON LBRACE elements RBRACE EQ"""
        p[0] = SetDesc(p[1], p[4]) if len(p) == 6 else FixedSet(p[1], p[4])

    def p_unary_set_operation(self, p):
        """unary : IDENT COLON IDENT LPAREN VAR RPAREN setop IDENT LPAREN VAR RPAREN"""
        p[0] = _SET_OPERATIONS[p[7]](p[1], p[3], p[5], p[8], p[10])

    def p_setop(self, p):
        """setop : UNION
        | ISECT
        | DUNION
        | MINUS"""
        p[0] = p[1]

    def p_unary_superset(self, p):
        """unary : IDENT COLON GEQ IDENT LPAREN VAR RPAREN"""
        p[0] = Superset(p[1], p[4], p[6])

    def p_unary_disjointness(self, p):
        """unary : IDENT LPAREN VAR RPAREN NEQ IDENT LPAREN VAR RPAREN"""
        p[0] = Disjointness(p[1], p[3], p[6], p[8])

    def p_elements(self, p):
        """elements : term
        | elements COMMA term"""
        p[0] = [p[1]] if len(p) == 2 else p[1] + [p[3]]

    def p_primitive_var(self, p):
        """primitive : VAR"""
        p[0] = Var(p[1])

    def p_primitive_atom(self, p):
        """primitive : IDENT"""
        p[0] = Atom(p[1])

    def p_primitive_const(self, p):
        """primitive : CONST"""
        p[0] = Const(p[1])

    def p_primitive_concept(self, p):
        """primitive : CONCEPT"""
        p[0] = Concept(p[1])

    def p_primitive_negated(self, p):
        """primitive : BANG VAR
        | BANG IDENT
        | BANG CONST
        | BANG CONCEPT"""
        negation = {"VAR": NegVar, "IDENT": NegAtom, "CONST": NegConst, "CONCEPT": NegConcept}
        p[0] = negation[p.slice[2].type](p[2])

    def p_error(self, p):
        origin = self.lexer.origin
        if p is None:
            data = self.lexer.lexer.lexdata
            line = data.count("\n") + 1
            column = len(data) - data.rfind("\n")
            raise TermSyntaxError("unexpected end of input", line, column, origin)
        column = find_column(self.lexer.lexer.lexdata, p.lexpos)
        raise TermSyntaxError(f"unexpected {p.value!r}", p.lineno, column, origin)


_local = threading.local()


def _parser() -> TermParser:
    parser = getattr(_local, "parser", None)
    if parser is None:
        parser = _local.parser = TermParser()
    return parser


def _as_source(src: Union[SourceText, str]) -> SourceText:
    return src if isinstance(src, SourceText) else SourceText(text=src)


def _checked(term: Term, sig: Signature) -> Tuple[Term, Signature]:
    sig = sig.declare_all(names(term))
    violations = validate(term, sig)
    if violations:
        raise TermValidationError(violations)
    return term, sig


def parse_with_signature(
    src: Union[SourceText, str], sig: Optional[Signature] = None
) -> Tuple[Term, Signature]:
    """Parse a single term, auto-declaring its names into ``sig``."""
    src = _as_source(src)
    doc = _parser().parse(src)
    if not isinstance(doc, Term):
        raise TermSyntaxError("expected a single term, found clauses", 1, 1, src.origin)
    return _checked(doc, sig or Signature())


def parse(src: Union[SourceText, str], sig: Optional[Signature] = None) -> Term:
    term, _ = parse_with_signature(src, sig)
    return term


def parse_document(
    src: Union[SourceText, str], sig: Optional[Signature] = None
) -> Union[Term, Dict[str, Term]]:
    """A bare term as is, or the ``name = term.`` clauses of a corpus by name."""
    src = _as_source(src)
    doc = _parser().parse(src)
    sig = sig or Signature()
    if isinstance(doc, Term):
        term, _ = _checked(doc, sig)
        return term
    corpus: Dict[str, Term] = {}
    for name, term in doc:
        if name in corpus:
            logger.warning("{}: clause {!r} defined twice, keeping the last", src.origin, name)
        corpus[name], sig = _checked(term, sig)
    return corpus


def parse_corpus(
    src: Union[SourceText, str], sig: Optional[Signature] = None
) -> Dict[str, Term]:
    """Read ``name = term.`` clauses; a bare term is keyed by the file stem."""
    src = _as_source(src)
    doc = parse_document(src, sig)
    if isinstance(doc, Term):
        return {Path(src.origin).stem or "term": doc}
    return doc


__all__ = [
    "SourceText",
    "TermParser",
    "parse",
    "parse_corpus",
    "parse_document",
    "parse_with_signature",
]
