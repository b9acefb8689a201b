from typing import Tuple, Iterable
from pathlib import Path

import pytest

from setfeat.solver import SolverConfig, solve
from setfeat.syntax import parse
from setfeat.constraints import Containment, ConstraintSystem

from .utils import SolveTextType, SystemFactoryType

TESTS_ROOT = Path(__file__).parent
TESTS_DATA = TESTS_ROOT / "data"


@pytest.fixture
def test_data():
    assert TESTS_DATA.exists()
    return TESTS_DATA


@pytest.fixture
def solve_text() -> SolveTextType:
    def _solve_text(text: str, root: str = "x", **params):
        return solve(parse(text), root, SolverConfig(**params))

    return _solve_text


@pytest.fixture
def system_factory() -> SystemFactoryType:
    """Constraint systems from ``(variable, term text)`` pairs."""

    def _system_factory(pairs: Iterable[Tuple[str, str]]) -> ConstraintSystem:
        return ConstraintSystem.of(Containment(x, parse(text)) for x, text in pairs)

    return _system_factory
