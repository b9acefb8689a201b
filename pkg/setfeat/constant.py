"""setfeat Constants."""

from enum import Enum, IntEnum


class Defaults:
    MAX_STEPS = 10**6
    ROOT = "x"
    ENCODING_RELATION = "f"
    TRUE_ATOM = "true"
    FALSE_ATOM = "false"
    FRESH_PREFIX = "_"


RESERVED_ATOMS = frozenset({Defaults.TRUE_ATOM, Defaults.FALSE_ATOM})
TOP = "Top"
BOT = "Bot"


class NameKind(str, Enum):
    VARIABLE = "variable"
    RELATION = "relation"
    CONSTANT = "constant"
    ATOM = "atom"
    CONCEPT = "concept"

    @property
    def sigil(self) -> str:
        return {NameKind.VARIABLE: "$", NameKind.CONSTANT: "#"}.get(self, "")


class RuleId(str, Enum):
    # decomposition
    DFEAT = "DFeat"
    DFORALL = "DForall"
    DSET = "DSet"
    DSETF = "DSetF"
    DCONJ = "DConj"
    # simplification
    SEQUALS = "SEquals"
    SCONST = "SConst"
    SFEAT = "SFeat"
    SEXISTS = "SExists"
    SFORALLE = "SForallE"
    SSETF = "SSetF"
    SSET = "SSet"
    SDUP = "SDup"
    SFORALL = "SForall"
    SSETE = "SSetE"
    SSETSET = "SSetSet"
    SDIS = "SDis"
    # set operations
    SUBSET = "Subset"
    UNION_LEFT = "UnionLeft"
    UNION_RIGHT = "UnionRight"
    UNION_DOWN = "UnionDown"
    ISECT_DOWN = "IsectDown"
    ISECT_UP = "IsectUp"

    def __str__(self) -> str:
        return self.value

    @property
    def is_decomposition(self) -> bool:
        return self in _DECOMPOSITION

    @property
    def is_branching(self) -> bool:
        return self in (RuleId.SDIS, RuleId.UNION_DOWN)


_DECOMPOSITION = frozenset(
    {RuleId.DFEAT, RuleId.DFORALL, RuleId.DSET, RuleId.DSETF, RuleId.DCONJ}
)


class ClashCondition(IntEnum):
    ATOMS = 1
    CONSTANTS = 2
    COMPLEMENT = 3
    ATOM_SUCCESSOR = 4
    DISJOINTNESS = 5
    CARDINALITY = 6

    @property
    def description(self) -> str:
        return {
            ClashCondition.ATOMS: "two distinct atoms",
            ClashCondition.CONSTANTS: "two distinct constants",
            ClashCondition.COMPLEMENT: "primitive and its negation",
            ClashCondition.ATOM_SUCCESSOR: "atom with a successor",
            ClashCondition.DISJOINTNESS: "shared element of disjoint sets",
            ClashCondition.CARDINALITY: "too few successors for fixed set",
        }[self]


class TraceKind(str, Enum):
    RULE = "rule"
    OPEN = "open"
    CLOSE = "close"
