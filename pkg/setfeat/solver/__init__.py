from .clash import Clash, clashes, detect_clash
from .model import extract_model, check_normal_form
from .search import (
    Consistent,
    SolveStats,
    TraceEntry,
    Inconsistent,
    SolveResult,
    SolverConfig,
    SolverContext,
    ParallelSearch,
    DepthFirstSearch,
    solve,
    prepare,
    default_root,
)
from .context import SolverFlag
from .pipeline import Rule, RulePipeline, RuleApplication
from .simplify import (
    Branch,
    Unchanged,
    Deterministic,
    DeterministicPipeline,
    SimplificationPipeline,
    simplify_step,
)
from .decompose import BasicFormPipeline, DecompositionPipeline, to_basic, decompose
