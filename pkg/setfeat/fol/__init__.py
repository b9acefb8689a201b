from .emit import emit, functor, render_term, render_formula
from .ground import dpll, partitions, sb_satisfiable, herbrand_constants
from .formula import (
    Eq,
    Or,
    And,
    Not,
    Rel,
    Pred,
    UVar,
    AtomSym,
    Implies,
    Witness,
    ConstSym,
    FolTerm,
    Universal,
    FolFormula,
    Existential,
    neq,
    is_sb,
    witnesses,
    subformulas,
)
from .translate import Clause, Symbols, Translator, TranslationOutput, axioms, sentence, translate
