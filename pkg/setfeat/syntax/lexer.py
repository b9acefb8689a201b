"""Tokenizer for the linear term syntax."""

from __future__ import annotations

from typing import Iterator

from ply import lex

from setfeat.errors import TermSyntaxError

KEYWORDS = {
    "some": "SOME",
    "all": "ALL",
    "union": "UNION",
    "isect": "ISECT",
    "dunion": "DUNION",
    "minus": "MINUS",
}


def find_column(data: str, lexpos: int) -> int:
    line_start = data.rfind("\n", 0, lexpos) + 1
    return (lexpos - line_start) + 1


class TermLexer:
    tokens = (
        "VAR",
        "CONST",
        "IDENT",
        "CONCEPT",
        "COLON",
        "AMP",
        "BANG",
        "NEQ",
        "GEQ",
        "EQ",
        "COMMA",
        "DOT",
        "LBRACE",
        "RBRACE",
        "LPAREN",
        "RPAREN",
    ) + tuple(KEYWORDS.values())

    t_ignore = " \t\r"
    t_ignore_COMMENT = r"%[^\n]*"

    t_NEQ = r"!="
    t_GEQ = r">="
    t_COLON = r":"
    t_AMP = r"&"
    t_BANG = r"!"
    t_EQ = r"="
    t_COMMA = r","
    t_DOT = r"\."
    t_LBRACE = r"\{"
    t_RBRACE = r"\}"
    t_LPAREN = r"\("
    t_RPAREN = r"\)"

    def __init__(self, origin: str = "<stdin>"):
        self.origin = origin
        self.lexer = lex.lex(module=self, optimize=False, debug=False)

    def t_VAR(self, t):
        r"\$[A-Za-z_][A-Za-z0-9_\-]*"
        t.value = t.value[1:]
        return t

    def t_CONST(self, t):
        r"\#[A-Za-z_][A-Za-z0-9_\-]*"
        t.value = t.value[1:]
        return t

    def t_IDENT(self, t):
        r"[a-z][A-Za-z0-9_\-]*"
        t.type = KEYWORDS.get(t.value, "IDENT")
        return t

    def t_CONCEPT(self, t):
        r"[A-Z][A-Za-z0-9_\-]*"
        return t

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

    def tokenize(self, text: str) -> Iterator[lex.LexToken]:
        self.input(text)
        while tok := self.token():
            yield tok
