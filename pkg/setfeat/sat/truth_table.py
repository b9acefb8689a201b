"""Exhaustive truth-table satisfiability."""

from __future__ import annotations

import itertools
from typing import Dict, Iterator, Optional

from loguru import logger
from codetiming import Timer

from setfeat.config import config
from setfeat.errors import TooManyVariablesError
from setfeat.sat.formula import PropFormula, evaluate, prop_vars, assignment_str


def rows(phi: PropFormula) -> Iterator[Dict[str, bool]]:
    """Every assignment over the variables of ``phi``, all-false first."""
    names = sorted(prop_vars(phi))
    if len(names) > config.TRUTH_TABLE_MAX_VARS:
        raise TooManyVariablesError(
            f"{len(names)} variables, truth tables stop at {config.TRUTH_TABLE_MAX_VARS}"
        )
    for values in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, values))


def satisfying_row(phi: PropFormula) -> Optional[Dict[str, bool]]:
    for row in rows(phi):
        if evaluate(phi, row):
            logger.debug("satisfied by {}", assignment_str(row))
            return row
    return None


@Timer("sat>truth_table", logger=logger.trace)
def truth_table_sat(phi: PropFormula) -> bool:
    return satisfying_row(phi) is not None
