"""
非零性假设集合
配置采用模板 + 深度合并 + glom 路径读取的方式
"""

import copy
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, Optional, Tuple, Union

from glom import glom

from lie.exceptions import DomainError

logger = logging.getLogger(__name__)


class Mode(str, Enum):
    """假设模式；取值即命令行参数"""
    ALL_NONVANISHING = "theorem-0-2"
    FINITE_ZEROS = "finite-zeros"


class Symbolic(Enum):
    SYMBOLIC = "symbolic"


SYMBOLIC = Symbolic.SYMBOLIC

H2Cap = Union[int, Symbolic, None]

ASSUMPTION_TEMPLATE = {
    "mode": Mode.ALL_NONVANISHING.value,
    "exceptional": {
        "chi": [],
        # None 表示与 chi 对称
        "chi_bar": None,
    },
    "h2_cap": SYMBOLIC.value,
}


def deep_update(d: Dict[str, Any], u: Dict[str, Any]) -> Dict[str, Any]:
    """
    递归合并字典，返回新副本，不修改原始输入
    """
    result = copy.deepcopy(d)
    for k, v in u.items():
        if isinstance(v, dict) and isinstance(result.get(k), dict):
            result[k] = deep_update(result[k], v)
        else:
            result[k] = copy.deepcopy(v)
    return result


def parse_h2_cap(value: Any) -> H2Cap:
    """'symbolic' / None / 非负整数"""
    if value is None or isinstance(value, Symbolic):
        return value
    if isinstance(value, str):
        if value.strip().lower() == SYMBOLIC.value:
            return SYMBOLIC
        value = value.strip()
    try:
        cap = int(value)
    except (TypeError, ValueError):
        raise DomainError(f"h2_cap 必须是非负整数或 'symbolic': {value!r}")
    if cap < 0:
        raise DomainError(f"h2_cap 必须非负: {cap}")
    return cap


def _exceptional(values: Optional[Iterable[int]]) -> Optional[FrozenSet[int]]:
    if values is None:
        return None
    result = frozenset(int(k) for k in values)
    bad = sorted(k for k in result if k >= 0)
    if bad:
        raise DomainError(f"例外集只能包含负整数: {bad}")
    return result


@dataclass(frozen=True)
class AssumptionSet:
    """
    L 值非零性假设

    ALL_NONVANISHING: 对每个 k < 0 都有 χ^k(𝓛) ≠ 0 与 χ̄^k(𝓛̄) ≠ 0
    FINITE_ZEROS:     只在有限例外集上可能为零，例外层的 H^2 由 h2_cap 控制
    """
    mode: Mode = Mode.ALL_NONVANISHING
    exceptional: FrozenSet[int] = frozenset()
    exceptional_bar: Optional[FrozenSet[int]] = None
    h2_cap: H2Cap = SYMBOLIC

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "exceptional", _exceptional(self.exceptional))
        object.__setattr__(self, "exceptional_bar", _exceptional(self.exceptional_bar))
        object.__setattr__(self, "h2_cap", parse_h2_cap(self.h2_cap))
        if self.mode is Mode.ALL_NONVANISHING and (self.exceptional or self.exceptional_bar):
            raise DomainError("theorem-0-2 模式不允许例外集")

    @classmethod
    def all_nonvanishing(cls) -> "AssumptionSet":
        return cls(Mode.ALL_NONVANISHING)

    @classmethod
    def finite_zeros(cls, exceptional: Iterable[int] = (), h2_cap: H2Cap = SYMBOLIC,
                     exceptional_bar: Optional[Iterable[int]] = None) -> "AssumptionSet":
        return cls(Mode.FINITE_ZEROS, frozenset(exceptional),
                   None if exceptional_bar is None else frozenset(exceptional_bar), h2_cap)

    @classmethod
    def from_config(cls, source_config: Dict[str, Any]) -> "AssumptionSet":
        """
        从配置字典创建

        Args:
            source_config: 形如 {"mode": "finite-zeros", "exceptional": {"chi": [-1]}, "h2_cap": 2}；
                exceptional 也可以直接写成列表

        Returns:
            AssumptionSet
        """
        cfg = dict(source_config)
        if isinstance(cfg.get("exceptional"), (list, tuple, set, frozenset)):
            cfg["exceptional"] = {"chi": list(cfg["exceptional"])}
        cfg = deep_update(ASSUMPTION_TEMPLATE, cfg)
        try:
            mode = Mode(glom(cfg, "mode"))
        except ValueError:
            raise DomainError(f"未知的模式: {glom(cfg, 'mode')!r}")
        return cls(
            mode=mode,
            exceptional=frozenset(glom(cfg, "exceptional.chi", default=[]) or []),
            exceptional_bar=glom(cfg, "exceptional.chi_bar", default=None),
            h2_cap=glom(cfg, "h2_cap", default=SYMBOLIC.value),
        )

    @property
    def symmetric(self) -> bool:
        return self.exceptional_bar is None

    @property
    def chi_bar_exceptional(self) -> FrozenSet[int]:
        return self.exceptional if self.symmetric else self.exceptional_bar

    def exceptional_branches(self, k: int) -> Tuple[str, ...]:
        """k 在哪些分支的例外集中（'chi' / 'chi_bar'）"""
        branches = []
        if k in self.exceptional:
            branches.append("chi")
        if k in self.chi_bar_exceptional:
            branches.append("chi_bar")
        return tuple(branches)

    def exceptional_levels(self) -> Tuple[int, ...]:
        """例外集对应的层 n = 2 - k"""
        return tuple(sorted({2 - k for k in self.exceptional | self.chi_bar_exceptional}))

    def describe(self) -> Dict[str, Any]:
        cap = self.h2_cap.value if isinstance(self.h2_cap, Symbolic) else self.h2_cap
        return {
            "mode": self.mode.value,
            "exceptional": sorted(self.exceptional),
            "exceptional_bar": None if self.symmetric else sorted(self.exceptional_bar),
            "h2_cap": cap,
        }
