from .denote import holds, covers, denote, satisfies, satisfies_constraint
from .enumerate import (
    ModelSearch,
    EnumerationParams,
    anchor_vars,
    enumerate_models,
    relational_depth,
)
from .interpretation import Model, Assignment, Interpretation
