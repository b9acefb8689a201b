from typing import Tuple, Callable, Iterable

from setfeat.solver import SolveResult
from setfeat.constraints import ConstraintSystem

SolveTextType = Callable[..., SolveResult]
SystemFactoryType = Callable[[Iterable[Tuple[str, str]]], ConstraintSystem]
