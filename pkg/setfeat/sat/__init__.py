from .encode import Encoding, tau, delta, encode, logic_var
from .clausal import tseitin, is_clause, is_clausal, is_literal
from .formula import (
    POr,
    PAnd,
    PNot,
    PVar,
    PropFormula,
    size,
    depth,
    conjoin,
    disjoin,
    evaluate,
    var_set,
    prop_vars,
)
from .truth_table import rows, truth_table_sat, satisfying_row
