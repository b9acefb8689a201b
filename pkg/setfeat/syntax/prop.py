"""Propositional input: infix formulas and DIMACS CNF."""

from __future__ import annotations

import threading
from typing import List, Union

from ply import lex, yacc
from loguru import logger

from setfeat.errors import ParseError, TermSyntaxError
from setfeat.sat.formula import POr, PAnd, PNot, PVar, PropFormula, conjoin, disjoin
from setfeat.syntax.lexer import find_column
from setfeat.syntax.parser import SourceText


class PropLexer:
    tokens = ("PVAR", "NOT", "AND", "OR", "LPAREN", "RPAREN")

    t_ignore = " \t\r"
    t_ignore_COMMENT = r"%[^\n]*"

    t_NOT = r"~"
    t_AND = r"/\\"
    t_OR = r"\\/"
    t_LPAREN = r"\("
    t_RPAREN = r"\)"
    t_PVAR = r"[A-Za-z_][A-Za-z0-9_]*"

    def __init__(self, origin: str = "<stdin>"):
        self.origin = origin
        self.lexer = lex.lex(module=self, optimize=False, debug=False)

    def t_newline(self, t):
        r"\n+"
        t.lexer.lineno += len(t.value)

    def t_error(self, t):
        column = find_column(t.lexer.lexdata, t.lexpos)
        raise TermSyntaxError(
            f"illegal character {t.value[0]!r}", t.lexer.lineno, column, self.origin
        )

    def input(self, text: str) -> None:
        self.lexer.lineno = 1
        self.lexer.input(text)

    def token(self):
        return self.lexer.token()


class PropParser:
    tokens = PropLexer.tokens

    precedence = (
        ("left", "OR"),
        ("left", "AND"),
        ("right", "NOT"),
    )

    def __init__(self):
        self.lexer = PropLexer()
        self.parser = yacc.yacc(
            module=self,
            start="formula",
            write_tables=False,
            debug=False,
            errorlog=yacc.NullLogger(),
        )

    def parse(self, src: SourceText) -> PropFormula:
        self.lexer.origin = src.origin
        return self.parser.parse(src.text, lexer=self.lexer)

    def p_formula_or(self, p):
        """formula : formula OR formula"""
        p[0] = POr(p[1], p[3])

    def p_formula_and(self, p):
        """formula : formula AND formula"""
        p[0] = PAnd(p[1], p[3])

    def p_formula_not(self, p):
        """formula : NOT formula"""
        p[0] = PNot(p[2])

    def p_formula_group(self, p):
        """formula : LPAREN formula RPAREN"""
        p[0] = p[2]

    def p_formula_var(self, p):
        """formula : PVAR"""
        p[0] = PVar(p[1])

    def p_error(self, p):
        origin = self.lexer.origin
        if p is None:
            data = self.lexer.lexer.lexdata
            line = data.count("\n") + 1
            column = len(data) - data.rfind("\n")
            raise TermSyntaxError("unexpected end of input", line, column, origin)
        column = find_column(p.lexer.lexdata, p.lexpos)
        raise TermSyntaxError(f"unexpected {p.value!r}", p.lineno, column, origin)


_local = threading.local()


def _parser() -> PropParser:
    parser = getattr(_local, "parser", None)
    if parser is None:
        parser = _local.parser = PropParser()
    return parser


def parse_prop(src: Union[SourceText, str]) -> PropFormula:
    """Parse ``~``, ``/\\`` and ``\\/`` formulas, tightest binding first."""
    src = src if isinstance(src, SourceText) else SourceText(text=src)
    return _parser().parse(src)


def read_dimacs(text: str, origin: str = "<stdin>") -> PropFormula:
    """Read a DIMACS CNF problem; variable ``n`` becomes ``v<n>``."""
    declared = None
    clauses: List[PropFormula] = []
    literals: List[PropFormula] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith(("c", "%")):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise TermSyntaxError(f"bad problem line {line!r}", lineno, 1, origin)
            declared = int(fields[2])
            continue
        for field in line.split():
            try:
                value = int(field)
            except ValueError:
                raise TermSyntaxError(f"bad literal {field!r}", lineno, 1, origin) from None
            if value == 0:
                if not literals:
                    raise ParseError(f"{origin}:{lineno}: empty clause")
                clauses.append(disjoin(*literals))
                literals = []
                continue
            if declared is not None and abs(value) > declared:
                logger.warning("{}:{}: variable {} exceeds header", origin, lineno, abs(value))
            var = PVar(f"v{abs(value)}")
            literals.append(var if value > 0 else PNot(var))
    if literals:
        clauses.append(disjoin(*literals))
    if not clauses:
        raise ParseError(f"{origin}: no clauses")
    return conjoin(*clauses)


_PRECEDENCE = {POr: 1, PAnd: 2, PNot: 3, PVar: 4}


def render_prop(phi: PropFormula) -> str:
    match phi:
        case PVar(name=name):
            return name
        case PNot(operand=operand):
            inner = render_prop(operand)
            return f"~{inner}" if _PRECEDENCE[type(operand)] >= 3 else f"~({inner})"
        case PAnd() | POr():
            level = _PRECEDENCE[type(phi)]
            op = "/\\" if isinstance(phi, PAnd) else "\\/"
            left = render_prop(phi.left)
            right = render_prop(phi.right)
            if _PRECEDENCE[type(phi.left)] < level:
                left = f"({left})"
            if _PRECEDENCE[type(phi.right)] <= level:
                right = f"({right})"
            return f"{left} {op} {right}"
    raise TypeError(f"not a propositional formula: {phi!r}")


__all__ = ["PropLexer", "PropParser", "parse_prop", "read_dimacs", "render_prop"]
