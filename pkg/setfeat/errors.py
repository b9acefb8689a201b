"""setfeat exceptions."""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from setfeat.terms.ops import Violation


class SetfeatError(Exception):
    """Base of every error raised by setfeat."""


class ParseError(SetfeatError):
    pass


class TermSyntaxError(ParseError):
    def __init__(self, message: str, line: int, column: int, origin: str = "<stdin>"):
        self.line = line
        self.column = column
        self.origin = origin
        super().__init__(f"{origin}:{line}:{column}: {message}")


class KindError(ParseError):
    """Name reused at a different lexical class."""

    def __init__(self, name: str, kind: str, previous: str):
        self.name = name
        self.kind = kind
        self.previous = previous
        super().__init__(f"name {name!r} used as {kind} but already declared as {previous}")


class TermValidationError(ParseError):
    def __init__(self, violations: Sequence["Violation"]):
        self.violations = tuple(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"term does not validate: {lines}")


class SignatureError(SetfeatError):
    pass


class ReservedNameError(SignatureError):
    pass


class UninterpretedNameError(SetfeatError):
    def __init__(self, kind: str, name: str):
        self.kind = kind
        self.name = name
        super().__init__(f"{kind} {name!r} is not interpreted by the model")


class ModelError(SetfeatError):
    pass


class StepBudgetExceeded(SetfeatError):
    def __init__(self, max_steps: int):
        self.max_steps = max_steps
        super().__init__(f"rule application fuse blown after {max_steps} steps")


class OracleUnavailable(SetfeatError):
    """An oracle ran out of its resource budget before deciding."""


class EnumerationBudgetExceeded(OracleUnavailable):
    pass


class GroundBudgetExceeded(OracleUnavailable):
    pass


class TooManyVariablesError(SetfeatError):
    pass
