# Selmer 维数账本
# 假设集合、规则引用表与逐层账本

from .assumptions import SYMBOLIC, AssumptionSet, Mode
from .ledger import (
    EVENTUALLY_STRICT,
    AffineBound,
    H2Kind,
    H2Status,
    LedgerRow,
    TraceEntry,
    build_ledger,
    compare_dimensions,
    first_strict_level,
    global_h1_graded_bound,
    global_h1f_bound,
    h2_status,
    local_h1f_graded,
    local_h1f_total,
    replay_trace,
    stable_strict_level,
    theorem_threshold,
)
from .rules import CITATIONS, RULES

__all__ = [
    'Mode',
    'SYMBOLIC',
    'AssumptionSet',
    'RULES',
    'CITATIONS',
    'EVENTUALLY_STRICT',
    'AffineBound',
    'H2Kind',
    'H2Status',
    'TraceEntry',
    'LedgerRow',
    'local_h1f_graded',
    'local_h1f_total',
    'h2_status',
    'global_h1_graded_bound',
    'global_h1f_bound',
    'compare_dimensions',
    'theorem_threshold',
    'first_strict_level',
    'stable_strict_level',
    'build_ledger',
    'replay_trace',
]
