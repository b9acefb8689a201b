from .ops import (
    Violation,
    size,
    names,
    desugar,
    validate,
    free_vars,
    rename,
    reduce_difference,
    is_difference_shape,
)
from .term import (
    Var,
    Atom,
    Conj,
    Term,
    Const,
    Union,
    Exists,
    Forall,
    NegVar,
    Concept,
    Feature,
    NegAtom,
    SetDesc,
    FixedSet,
    NegConst,
    Superset,
    Primitive,
    NegConcept,
    PRIMITIVES,
    Disjointness,
    Intersection,
    SetOperation,
    DisjointUnion,
    SetDifference,
    conj,
    negate,
    children,
    conjuncts,
    is_primitive,
)
from .signature import Signature
