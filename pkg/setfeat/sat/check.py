"""Solver verdict on an encoding against the truth-table verdict."""

from __future__ import annotations

from typing import Optional

import attrs
from loguru import logger

from setfeat.solver import SolveResult, SolverConfig, solve
from setfeat.constant import Defaults
from setfeat.sat.encode import Encoding, encode
from setfeat.sat.formula import PropFormula
from setfeat.sat.truth_table import truth_table_sat


@attrs.frozen
class SatCheck:
    encoding: Encoding
    result: SolveResult
    satisfiable: bool

    @property
    def agree(self) -> bool:
        return self.result.consistent == self.satisfiable

    def summary(self) -> str:
        sat = "TRUE" if self.satisfiable else "FALSE"
        status = "AGREE" if self.agree else "DISAGREE"
        return f"solver={self.result.verdict} sat={sat} {status}"


def cross_check(phi: PropFormula, params: Optional[SolverConfig] = None) -> SatCheck:
    enc = encode(phi)
    result = solve(enc.term, Defaults.ROOT, params)
    check = SatCheck(enc, result, truth_table_sat(phi))
    if not check.agree:
        logger.error("encoding disagrees with truth table: {}", check.summary())
    return check
