"""
双次数过滤 L_{>=n,>=m} 与商 W = L/L_{>=2,>=2}
W 的元素用标准代表元表示：删掉所有双次数 >= (2,2) 的项
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import List, NamedTuple, Optional, Tuple, Union

import config
from .exceptions import DomainError, FastLieError
from .freelie import (
    Generator,
    LieElement,
    LyndonWord,
    ad_power,
    bracket,
    is_lyndon,
    lyndon_basis,
    word,
)

logger = logging.getLogger(__name__)


class Bidegree(NamedTuple):
    """(E 的个数, F 的个数)"""
    i: int
    j: int

    @classmethod
    def of(cls, w: LyndonWord) -> "Bidegree":
        return cls(*w.bidegree)

    def dominates(self, n: int, m: int) -> bool:
        """偏序 (i,j) >= (n,m)"""
        return self.i >= n and self.j >= m

    @property
    def total(self) -> int:
        return self.i + self.j


@dataclass(frozen=True)
class FiltrationIdeal:
    """李理想 L_{>=n,>=m}"""
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise DomainError("过滤阈值必须非负")

    def __contains__(self, x: LieElement) -> bool:
        return all(Bidegree.of(w).dominates(self.n, self.m) for w in x.terms)

    def basis_words(self, max_degree: int) -> List[LyndonWord]:
        return [
            w
            for d in range(1, max_degree + 1)
            for w in lyndon_basis(d)
            if Bidegree.of(w).dominates(self.n, self.m)
        ]

    def closed_under_bracket(self, max_degree: int) -> bool:
        """在次数 <= max_degree 的齐次生成元上检验理想性质"""
        limit = 2 * max_degree
        members = self.basis_words(max_degree)
        for d in range(1, max_degree + 1):
            for x in lyndon_basis(d):
                for y in members:
                    product_ = bracket(LieElement.basis(x, limit), LieElement.basis(y, limit))
                    if product_ not in self:
                        logger.warning("理想性质失败: [%s, %s] 不在 L_{>=%d,>=%d}", x, y, self.n, self.m)
                        return False
        return True


W_IDEAL = FiltrationIdeal(2, 2)


def in_ideal(x: LieElement, n: int, m: int) -> bool:
    """x 的每一项双次数都 >= (n, m)；零元素属于所有理想"""
    return x in FiltrationIdeal(n, m)


class WElement:
    """W 中的元素，存储标准代表元"""

    __slots__ = ("representative",)

    def __init__(self, x: LieElement):
        self.representative = LieElement(
            {w: c for w, c in x.items() if not Bidegree.of(w).dominates(2, 2)},
            x.truncation_degree,
        )

    @property
    def truncation_degree(self) -> int:
        return self.representative.truncation_degree

    def is_zero(self) -> bool:
        return self.representative.is_zero()

    def bracket(self, other: "WElement") -> "WElement":
        return WElement(bracket(self.representative, other.representative))

    def __add__(self, other: "WElement") -> "WElement":
        return WElement(self.representative + other.representative)

    def __sub__(self, other: "WElement") -> "WElement":
        return WElement(self.representative - other.representative)

    def __neg__(self) -> "WElement":
        return WElement(-self.representative)

    def __mul__(self, scale) -> "WElement":
        return WElement(self.representative * scale)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, WElement):
            return NotImplemented
        return self.representative == other.representative

    __hash__ = None

    def __repr__(self):
        return f"WElement({self.representative.pretty()}, D={self.truncation_degree})"


def project_to_w(x: LieElement) -> WElement:
    """投影 L -> W，删除双次数 >= (2,2) 的项"""
    return WElement(x)


def _complement_candidates(n: int) -> List[str]:
    """长度为 n、至多含一个 E 或至多含一个 F 的全部词"""
    if n == 1:
        return list("EF")
    words = set()
    for pos, (rare, common) in product(range(n), [("E", "F"), ("F", "E")]):
        words.add(common * pos + rare + common * (n - pos - 1))
    words.update({"E" * n, "F" * n})
    return sorted(words)


def w_graded_basis(n: int) -> Tuple[LyndonWord, ...]:
    """
    W 的 n 次分次块的基：双次数不 >= (2,2) 的 n 次 Lyndon 词

    只需在补集的候选词中检验 Lyndon 性质，因此任意 n 都很便宜
    """
    if n < 1:
        raise DomainError("w_graded_basis 要求 n >= 1")
    return tuple(
        word(letters)
        for letters in _complement_candidates(n)
        if is_lyndon(letters) and not Bidegree(letters.count("E"), letters.count("F")).dominates(2, 2)
    )


def w_graded_dimension(n: int) -> int:
    """W^{n+1}\\W^n 的维数：n=1 为 2，n=2 为 1，n>=3 为 2"""
    if n < 1:
        raise DomainError("w_graded_dimension 要求 n >= 1")
    if n > config.W_ENUMERATION_LIMIT:
        return 2
    return len(w_graded_basis(n))


def w_nilpotent_dimension(n: int) -> int:
    """W_n 的维数，对分次块求和"""
    if n < 1:
        raise DomainError("w_nilpotent_dimension 要求 n >= 1")
    return sum(w_graded_dimension(k) for k in range(1, n + 1))


@dataclass(frozen=True)
class GradedGenerator:
    """拉直后的 ad^{n-2}(g)([e,f]) 及其对应的基词和符号"""
    generator: Generator
    level: int
    element: LieElement
    basis_word: LyndonWord
    sign: int

    @property
    def expression(self) -> str:
        return f"ad^{self.level - 2}({self.generator.symbol})([e,f])"


def graded_generators(n: int) -> List[GradedGenerator]:
    """
    计算 ad^{n-2}(e)([e,f]) 与 ad^{n-2}(f)([e,f]) 在 Lyndon 基下的展开
    n = 2 时两者都等于 [e,f]，只返回一个
    """
    if n < 2:
        raise DomainError("graded_generators 要求 n >= 2")
    ef = LieElement.basis("EF", n)
    gens = [Generator.E] if n == 2 else [Generator.E, Generator.F]
    result = []
    for g in gens:
        element = ad_power(g, n - 2, ef)
        if len(element.terms) != 1:
            raise FastLieError(f"ad^{n - 2}({g.symbol})([e,f]) 不是单个基词的倍数: {element.pretty()}")
        (w, c), = element.items()
        if abs(c) != 1:
            raise FastLieError(f"ad^{n - 2}({g.symbol})([e,f]) 的系数不是 ±1: {c}")
        result.append(GradedGenerator(g, n, element, w, int(c)))
    return result


def w_graded_note(n: int) -> Optional[str]:
    """报告中的说明：二次块按维数 1 处理"""
    if n == 2:
        return "n=2: 两个所列生成元都等于 [e,f]，二次块维数为 1（'n>=2' 的双生成元描述在此退化）"
    return None
