"""
Selmer 维数账本
局部 / 整体 H^1_f 的维数上界，逐层折叠并记录每一步引用的规则
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import sympy
from sympy import Expr, Max, Rational, Symbol, sympify

from lie.exceptions import DomainError, FastLieError
from lie.galois import minus_eigenspace_dimension
from lie.wquotient import w_graded_dimension
from .assumptions import AssumptionSet, Mode
from .rules import RULES, citation, kind

logger = logging.getLogger(__name__)

Value = Union[int, Expr]

EVENTUALLY_STRICT = "strict for all sufficiently large n"


def _normalize(value) -> Value:
    value = sympify(value)
    if value.is_Integer:
        return int(value)
    return value


def h2_symbol(n: int) -> Symbol:
    """例外层 n 上未知的 H^2 维数"""
    return Symbol(f"C_{n}", integer=True, nonnegative=True)


def _strictly_less(lhs: Value, rhs: Value) -> Optional[bool]:
    """lhs < rhs；含未知常数且无法判定时返回 None"""
    relation = sympy.Lt(lhs, rhs)
    if relation == sympy.true:
        return True
    if relation == sympy.false:
        return False
    return None


@dataclass(frozen=True)
class AffineBound:
    """slope·n + intercept，intercept 可以含未知的非负常数"""
    slope: Expr
    intercept: Expr

    def __post_init__(self):
        slope = sympify(self.slope)
        if not isinstance(slope, Rational):
            raise DomainError(f"斜率必须是有理数: {self.slope}")
        object.__setattr__(self, "slope", slope)
        object.__setattr__(self, "intercept", sympify(self.intercept))

    @property
    def symbolic_constant(self) -> bool:
        return bool(self.intercept.free_symbols)

    @property
    def evaluable(self) -> bool:
        return not self.symbolic_constant

    def at(self, n: int) -> Value:
        return _normalize(self.slope * n + self.intercept)

    def eventually_less_than(self, other: "AffineBound") -> Optional[bool]:
        """n 充分大时 self < other 是否成立；斜率相同且常数未知时无法判定"""
        if self.slope != other.slope:
            return bool(self.slope < other.slope)
        return _strictly_less(self.intercept, other.intercept)

    def __str__(self):
        return str(self.slope * Symbol("n") + self.intercept)


def local_bound() -> AffineBound:
    """dim H^1_f(Γ_p, W_n) = 2n - 2"""
    return AffineBound(2, -2)


class H2Kind(str, Enum):
    VANISHES = "VANISHES"
    CONDITIONAL = "CONDITIONAL"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class TraceEntry:
    """
    账本中的一步推理

    local_delta / global_delta 为这一步对局部维数 / 整体上界的贡献，
    重放 trace 时逐项相加即可重算该行的数值
    """
    rule: str
    citation: str
    level: int
    local_delta: int = 0
    global_delta: Value = 0

    @classmethod
    def of(cls, rule: str, level: int, local_delta: int = 0, global_delta: Value = 0) -> "TraceEntry":
        return cls(rule, citation(rule), level, local_delta, _normalize(global_delta))


@dataclass(frozen=True)
class H2Status:
    kind: H2Kind
    level: int
    k: int
    value: Value
    trace: Tuple[TraceEntry, ...]

    def __str__(self):
        if self.kind is H2Kind.CONDITIONAL:
            return f"CONDITIONAL({self.k})"
        return self.kind.value


@dataclass(frozen=True)
class LedgerRow:
    n: int
    local_dim: int
    global_bound_paper: Optional[AffineBound]
    global_bound_derived: AffineBound
    h2_status: Optional[H2Status]
    trace: Tuple[TraceEntry, ...]

    @property
    def paper_value(self) -> Optional[Value]:
        if self.global_bound_paper is None:
            return None
        return self.global_bound_paper.at(self.n)

    @property
    def derived_value(self) -> Value:
        return self.global_bound_derived.at(self.n)


@dataclass(frozen=True)
class GlobalBounds:
    n: int
    paper: Optional[AffineBound]
    derived: AffineBound

    @property
    def paper_value(self) -> Optional[Value]:
        return None if self.paper is None else self.paper.at(self.n)

    @property
    def derived_value(self) -> Value:
        return self.derived.at(self.n)


@dataclass(frozen=True)
class Threshold:
    paper: int
    derived: int


@dataclass(frozen=True)
class Verdict:
    n: int
    local: int
    paper_bound: Optional[int]
    derived_bound: Value
    strict_paper: Optional[bool]
    strict_derived: Optional[bool]
    eventual: str
    crossing_level: Optional[int]
    crossing_expression: Optional[str]


def _require_level(n: int, minimum: int, name: str):
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{name}: n 必须是整数，收到 {n!r}")
    if n < minimum:
        raise DomainError(f"{name} 要求 n >= {minimum}，收到 {n}")


def _require_parameters(r: int, s: int):
    if r < 0:
        raise DomainError(f"r 必须非负，收到 {r}")
    if s < 1:
        raise DomainError(f"s 必须 >= 1（S 含无穷素位），收到 {s}")


def local_h1f_graded(n: int) -> int:
    """
    dim H^1_f(Γ_p, W^{n+1}\\W^n)，n >= 3

    Hodge 过滤严格为负，所有类都是晶体的；局部 H^0 = H^2 = 0，
    由局部 Euler 示性数得 dim H^1 等于分次块的维数
    """
    if n == 2:
        raise DomainError("n=2 只有 W_2 的局部总维数 2，没有分次块的局部值")
    _require_level(n, 3, "local_h1f_graded")
    return w_graded_dimension(n)


def local_h1f_total(n: int) -> int:
    """dim H^1_f(Γ_p, W_n) = 2n - 2，由正合序列逐层累加"""
    _require_level(n, 2, "local_h1f_total")
    total = 2
    for level in range(3, n + 1):
        total += local_h1f_graded(level)
    if total != 2 * n - 2:
        raise FastLieError(f"局部维数累加 {total} 与闭式 2n-2 = {2 * n - 2} 不符")
    return total


def paper_bound_applies(assumptions: AssumptionSet) -> bool:
    return not assumptions.exceptional and not assumptions.chi_bar_exceptional


def h2_status(n: int, assumptions: AssumptionSet) -> H2Status:
    """
    H^2(Γ_T, W^{n+1}\\W^n) 的状态

    局部对偶 -> Poitou-Tate -> 膨胀限制 -> 非零性，k = 2 - n 不在例外集时为零
    """
    _require_level(n, 3, "h2_status")
    k = 2 - n
    trace = [
        TraceEntry.of("local_duality", n),
        TraceEntry.of("poitou_tate", n),
        TraceEntry.of("inflation_restriction", n),
    ]
    if not assumptions.exceptional_branches(k):
        rule = "nonvanishing_all" if assumptions.mode is Mode.ALL_NONVANISHING else "nonvanishing_eventual"
        trace.append(TraceEntry.of(rule, n))
        return H2Status(H2Kind.VANISHES, n, k, 0, tuple(trace))

    cap = assumptions.h2_cap
    value = cap if isinstance(cap, int) else h2_symbol(n)
    kind = H2Kind.UNKNOWN if cap is None else H2Kind.CONDITIONAL
    trace.append(TraceEntry.of("exceptional_level", n, global_delta=value))
    logger.info("n=%d 为例外层 (k=%d)，H^2 上界 %s", n, k, value)
    return H2Status(kind, n, k, _normalize(value), tuple(trace))


def global_h1_graded_bound(n: int, assumptions: AssumptionSet) -> Value:
    """dim H^1(Γ_T, W^{n+1}\\W^n) = dim H^2 + dim (·)^-"""
    status = h2_status(n, assumptions)
    return _normalize(status.value + minus_eigenspace_dimension(n))


def _paper_bound(n: int, r: int, s: int, assumptions: AssumptionSet) -> Optional[AffineBound]:
    if not paper_bound_applies(assumptions):
        return None
    if n == 2:
        return AffineBound(0, r + s - 1)
    return AffineBound(1, r + s - 2)


def global_h1f_bound(n: int, r: int, s: int, assumptions: AssumptionSet) -> GlobalBounds:
    """
    dim H^1_f(Γ_T, W_n) 的两个上界

    Args:
        n: 层数，>= 2
        r: dim H^1_f(Γ, V_p(E))
        s: |S|
        assumptions: 非零性假设

    Returns:
        GlobalBounds；paper 为 r+s+n-2（仅在没有例外集时给出），
        derived 为 (r+s-1) + Σ_{i=3..n} (h^2_i + 1)
    """
    _require_level(n, 2, "global_h1f_bound")
    _require_parameters(r, s)
    intercept = sympify(r + s - 3)
    for level in range(3, n + 1):
        intercept += h2_status(level, assumptions).value
    return GlobalBounds(n, _paper_bound(n, r, s, assumptions), AffineBound(1, intercept))


def theorem_threshold(r: int, s: int) -> Threshold:
    """paper 阈值 r+s+1；账本推出的更紧阈值 r+s（层数至少为 2）"""
    _require_parameters(r, s)
    return Threshold(paper=r + s + 1, derived=max(r + s, 2))


def _stable_bound(r: int, s: int, assumptions: AssumptionSet) -> Value:
    """超过所有例外层且 n + K < 2n - 2 的起点，K 为所有例外层 H^2 之和加 r+s-3"""
    levels = assumptions.exceptional_levels()
    constant = sympify(r + s - 3)
    for level in levels:
        constant += h2_status(level, assumptions).value
    return _normalize(Max(max(levels, default=2), constant + 3))


def _derived_values(r: int, s: int, assumptions: AssumptionSet, upto: int) -> Iterator[Tuple[int, Value]]:
    value = sympify(r + s - 1)
    yield 2, _normalize(value)
    for level in range(3, upto + 1):
        value += global_h1_graded_bound(level, assumptions)
        yield level, _normalize(value)


def first_strict_level(r: int, s: int, assumptions: AssumptionSet, bound: str = "derived") -> Optional[int]:
    """
    最小的 n >= 2 使上界严格小于 2n-2

    bound 为 "paper" 时使用 r+s+n-2；未知常数参与时无法确定，返回 None
    """
    _require_parameters(r, s)
    if bound == "paper":
        if not paper_bound_applies(assumptions):
            return None
        return next(n for n in range(2, r + s + 2) if r + s + n - 2 < 2 * n - 2)
    if bound != "derived":
        raise DomainError(f"未知的上界类型: {bound!r}")
    limit = _stable_bound(r, s, assumptions)
    if not isinstance(limit, int):
        return None
    for n, value in _derived_values(r, s, assumptions, limit):
        if value < 2 * n - 2:
            return n
    raise FastLieError(f"在 n <= {limit} 内没有找到严格层")


def stable_strict_level(r: int, s: int, assumptions: AssumptionSet) -> Value:
    """
    最小的 n0 使所有 n >= n0 都有 derived(n) < 2n-2

    未知常数参与时返回上界表达式 Max(...)
    """
    _require_parameters(r, s)
    limit = _stable_bound(r, s, assumptions)
    if not isinstance(limit, int):
        return limit
    values = dict(_derived_values(r, s, assumptions, limit))
    n0 = limit
    while n0 - 1 >= 2 and values[n0 - 1] < 2 * (n0 - 1) - 2:
        n0 -= 1
    return n0


def compare_dimensions(n: int, r: int, s: int, assumptions: AssumptionSet) -> Verdict:
    """
    局部维数 2n-2 与两个整体上界比较

    strict_paper 使用 r+s+n-2（对每个 n >= 2），所以恰在 n >= r+s+1 时成立
    """
    _require_level(n, 2, "compare_dimensions")
    bounds = global_h1f_bound(n, r, s, assumptions)
    local = local_h1f_total(n)
    paper = r + s + n - 2 if bounds.paper is not None else None
    derived = bounds.derived_value
    crossing = stable_strict_level(r, s, assumptions)
    symbolic = not isinstance(crossing, int)
    return Verdict(
        n=n,
        local=local,
        paper_bound=paper,
        derived_bound=derived,
        strict_paper=None if paper is None else paper < local,
        strict_derived=_strictly_less(derived, local),
        eventual=EVENTUALLY_STRICT if bounds.derived.eventually_less_than(local_bound()) else "undecided",
        crossing_level=None if symbolic else first_strict_level(r, s, assumptions),
        crossing_expression=str(crossing) if symbolic else None,
    )


def _base_row(r: int, s: int, assumptions: AssumptionSet) -> LedgerRow:
    trace = (
        TraceEntry.of("local_base", 2, local_delta=2),
        TraceEntry.of("units_base", 2, global_delta=r + s - 1),
    )
    return LedgerRow(2, 2, _paper_bound(2, r, s, assumptions), AffineBound(1, r + s - 3), None, trace)


def _next_row(prev: LedgerRow, r: int, s: int, assumptions: AssumptionSet) -> LedgerRow:
    n = prev.n + 1
    graded = local_h1f_graded(n)
    status = h2_status(n, assumptions)
    trace = (
        TraceEntry.of("exact_recursion", n, local_delta=prev.local_dim, global_delta=prev.derived_value),
        TraceEntry.of("hodge_negative", n),
        TraceEntry.of("local_surjective", n),
        TraceEntry.of("local_euler", n, local_delta=graded),
        *status.trace,
        TraceEntry.of("sigma_minus", n, global_delta=minus_eigenspace_dimension(n)),
        TraceEntry.of("euler_characteristic", n),
    )
    local_dim = prev.local_dim + graded
    if local_dim != 2 * n - 2:
        raise FastLieError(f"n={n}: 局部维数 {local_dim} 与 2n-2 不符")
    derived = AffineBound(1, prev.global_bound_derived.intercept + status.value)
    return LedgerRow(n, local_dim, _paper_bound(n, r, s, assumptions), derived, status, trace)


def build_ledger(r: int, s: int, assumptions: AssumptionSet, max_level: int) -> List[LedgerRow]:
    """
    逐层折叠生成账本，n = 2..max_level

    Args:
        r: dim H^1_f(Γ, V_p(E))
        s: |S|
        assumptions: 非零性假设
        max_level: 最高层

    Returns:
        List[LedgerRow]
    """
    _require_parameters(r, s)
    _require_level(max_level, 2, "build_ledger")
    rows = [_base_row(r, s, assumptions)]
    while rows[-1].n < max_level:
        rows.append(_next_row(rows[-1], r, s, assumptions))
    logger.info("账本完成: r=%d, s=%d, 共 %d 行", r, s, len(rows))
    return rows


def replay_trace(trace: Union[LedgerRow, Sequence[TraceEntry]]) -> Tuple[int, Value]:
    """重放 trace，返回 (局部维数, 整体上界)"""
    entries = trace.trace if isinstance(trace, LedgerRow) else trace
    if not entries:
        raise FastLieError("trace 为空")
    local, derived = 0, sympify(0)
    for entry in entries:
        if entry.rule not in RULES or entry.citation != citation(entry.rule):
            raise FastLieError(f"未登记的引用: {entry.rule}: {entry.citation}")
        if entry.local_delta and kind(entry.rule) not in ("local", "carry"):
            raise FastLieError(f"规则 {entry.rule} 不能改变局部维数")
        local += entry.local_delta
        derived += entry.global_delta
    return local, _normalize(derived)
