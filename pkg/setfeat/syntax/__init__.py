from .parser import (
    SourceText,
    TermParser,
    parse,
    parse_corpus,
    parse_document,
    parse_with_signature,
)
from .printer import render, render_name
from .prop import PropParser, parse_prop, read_dimacs, render_prop
