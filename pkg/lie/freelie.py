"""
两个生成元 e < f 上的自由李代数
提供 Lyndon 基枚举、括号运算、括号表达式改写到基以及维数公式
所有系数均为精确有理数，运算在 L/L^{D+1} 中进行
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import pyparsing as pp
from sympy import divisors, mobius

from .exceptions import DegreeOverflowError, DomainError, TruncationMismatchError

logger = logging.getLogger(__name__)

ALPHABET = "EF"


class Generator(str, Enum):
    """生成元，字母表顺序固定为 E < F"""
    E = "E"
    F = "F"

    @property
    def symbol(self) -> str:
        return self.value.lower()


class Marker(Enum):
    """零元素的次数标记"""
    ZERO = "zero"


ZERO = Marker.ZERO


def is_lyndon(letters: str) -> bool:
    """判断词是否严格小于其所有真后缀"""
    if not letters:
        return False
    return all(letters < letters[i:] for i in range(1, len(letters)))


@dataclass(frozen=True, order=True)
class LyndonWord:
    """Lyndon 词，按标准分解括号化后即为 Hall 族基元素"""
    letters: str

    def __post_init__(self):
        if not self.letters or set(self.letters) - set(ALPHABET):
            raise DomainError(f"非法的词: {self.letters!r}")
        if not is_lyndon(self.letters):
            raise DomainError(f"{self.letters} 不是 Lyndon 词")

    @property
    def degree(self) -> int:
        return len(self.letters)

    @property
    def bidegree(self) -> Tuple[int, int]:
        """(E 的个数, F 的个数)"""
        return self.letters.count("E"), self.letters.count("F")

    def standard_factorization(self) -> Tuple["LyndonWord", "LyndonWord"]:
        """
        标准分解 w = uv，v 为最长的 Lyndon 真后缀

        Returns:
            (u, v)，单字母词没有标准分解
        """
        if self.degree == 1:
            raise DomainError(f"单字母词 {self.letters} 没有标准分解")
        return _standard_factorization(self.letters)

    def bracketing(self) -> str:
        """标准括号化的文本形式，例如 EEF -> [e,[e,f]]"""
        if self.degree == 1:
            return self.letters.lower()
        u, v = self.standard_factorization()
        return f"[{u.bracketing()},{v.bracketing()}]"

    def __str__(self):
        return self.letters


@lru_cache(maxsize=None)
def word(letters: str) -> LyndonWord:
    """带缓存的 Lyndon 词构造"""
    if isinstance(letters, Generator):
        letters = letters.value
    return LyndonWord(letters)


@lru_cache(maxsize=None)
def _standard_factorization(letters: str) -> Tuple[LyndonWord, LyndonWord]:
    for i in range(1, len(letters)):
        if is_lyndon(letters[i:]):
            return word(letters[:i]), word(letters[i:])
    raise DomainError(f"{letters} 没有标准分解")


def lyndon_words_up_to(n: int) -> Iterator[LyndonWord]:
    """Duval 算法，按字典序生成长度不超过 n 的全部 Lyndon 词"""
    if n < 1:
        raise DomainError("长度必须 >= 1")
    w = [-1]
    while w:
        w[-1] += 1
        yield word("".join(ALPHABET[i] for i in w))
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == len(ALPHABET) - 1:
            w.pop()


@lru_cache(maxsize=None)
def lyndon_basis(degree: int) -> Tuple[LyndonWord, ...]:
    """
    给定长度的全部 Lyndon 词，字典序

    Args:
        degree: 词长 >= 1

    Returns:
        Lyndon 词元组，个数等于 witt_dimension(degree)
    """
    if degree < 1:
        raise DomainError("degree 必须 >= 1")
    basis = tuple(w for w in lyndon_words_up_to(degree) if w.degree == degree)
    logger.debug("枚举 %d 次 Lyndon 基: %d 个", degree, len(basis))
    return basis


def bigraded_basis(i: int, j: int) -> Tuple[LyndonWord, ...]:
    """双次数为 (i, j) 的 Lyndon 词"""
    if i < 0 or j < 0 or i + j < 1:
        raise DomainError(f"非法的双次数 ({i}, {j})")
    return tuple(w for w in lyndon_basis(i + j) if w.bidegree == (i, j))


def witt_dimension(n: int) -> int:
    """Witt 公式：两个生成元自由李代数 n 次分量的维数"""
    if n < 1:
        raise DomainError("witt_dimension 要求 n >= 1")
    total = sum(int(mobius(d)) * 2 ** (n // d) for d in divisors(n))
    return total // n


def bigraded_dimension(i: int, j: int) -> int:
    """双变量项链公式：L_{i,j} 的维数"""
    if i < 0 or j < 0:
        raise DomainError("双次数必须非负")
    if i + j < 1:
        raise DomainError("bigraded_dimension 不接受 (0, 0)")
    n = i + j
    total = sum(int(mobius(d)) * comb(n // d, i // d) for d in divisors(gcd(i, j)))
    return total // n


class LieElement:
    """
    L/L^{D+1} 中的元素
    存储 Lyndon 词到非零有理系数的映射，次数超过 D 的项在构造时静默丢弃
    """

    __slots__ = ("_terms", "truncation_degree")

    def __init__(self, terms: Optional[Mapping[LyndonWord, object]], truncation_degree: int):
        if truncation_degree < 1:
            raise DomainError("截断次数必须为正整数")
        self.truncation_degree = truncation_degree
        clean: Dict[LyndonWord, Fraction] = {}
        for w, c in (terms or {}).items():
            if not isinstance(w, LyndonWord):
                w = word(w)
            if w.degree > truncation_degree:
                continue
            c = Fraction(c)
            if c:
                clean[w] = c
        self._terms = MappingProxyType(clean)

    @classmethod
    def zero(cls, truncation_degree: int) -> "LieElement":
        return cls({}, truncation_degree)

    @classmethod
    def generator(cls, g: Union[Generator, str], truncation_degree: int) -> "LieElement":
        g = g if isinstance(g, Generator) else Generator(g.upper())
        return cls({word(g.value): 1}, truncation_degree)

    @classmethod
    def basis(cls, w: Union[LyndonWord, str], truncation_degree: int) -> "LieElement":
        return cls({w: 1}, truncation_degree)

    @property
    def terms(self) -> Mapping[LyndonWord, Fraction]:
        return self._terms

    def items(self):
        return self._terms.items()

    def coefficient(self, w: Union[LyndonWord, str]) -> Fraction:
        key = w if isinstance(w, LyndonWord) else word(w)
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> Union[int, Marker]:
        """最高次数；零元素返回 ZERO 标记"""
        if not self._terms:
            return ZERO
        return max(w.degree for w in self._terms)

    @property
    def min_degree(self) -> Union[int, Marker]:
        if not self._terms:
            return ZERO
        return min(w.degree for w in self._terms)

    def is_homogeneous(self) -> bool:
        return len({w.degree for w in self._terms}) <= 1

    def homogeneous_components(self) -> Dict[int, "LieElement"]:
        parts: Dict[int, Dict[LyndonWord, Fraction]] = {}
        for w, c in self._terms.items():
            parts.setdefault(w.degree, {})[w] = c
        return {d: LieElement(t, self.truncation_degree) for d, t in sorted(parts.items())}

    def sorted_terms(self) -> List[Tuple[LyndonWord, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0].degree, kv[0].letters))

    def _check_compatible(self, other: "LieElement"):
        if not isinstance(other, LieElement):
            raise TypeError(f"不支持的运算对象: {type(other).__name__}")
        if other.truncation_degree != self.truncation_degree:
            raise TruncationMismatchError(
                f"截断次数不一致: {self.truncation_degree} != {other.truncation_degree}"
            )

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check_compatible(other)
        acc = dict(self._terms)
        for w, c in other.items():
            acc[w] = acc.get(w, 0) + c
        return LieElement(acc, self.truncation_degree)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __neg__(self) -> "LieElement":
        return LieElement({w: -c for w, c in self.items()}, self.truncation_degree)

    def __mul__(self, scale) -> "LieElement":
        scale = Fraction(scale)
        return LieElement({w: scale * c for w, c in self.items()}, self.truncation_degree)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.truncation_degree == other.truncation_degree and dict(self._terms) == dict(other._terms)

    __hash__ = None

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {abs(c)}*{w}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"LieElement({self.pretty()}, D={self.truncation_degree})"


@lru_cache(maxsize=None)
def bracket_words(u: LyndonWord, v: LyndonWord) -> Tuple[Tuple[LyndonWord, int], ...]:
    """
    两个 Lyndon 基元素 [P(u), P(v)] 在 Lyndon 基下的展开（结构常数）

    u < v 且 (u 为单字母 或 u 的右因子 >= v) 时 uv 本身就是基元素，
    否则对 u = [a, b] 用 Jacobi 恒等式 [[a,b],v] = [a,[b,v]] + [[a,v],b] 递归拉直
    """
    if u == v:
        return ()
    if u > v:
        return tuple((w, -c) for w, c in bracket_words(v, u))
    if u.degree == 1 or u.standard_factorization()[1] >= v:
        return ((word(u.letters + v.letters), 1),)
    a, b = u.standard_factorization()
    acc: Dict[LyndonWord, int] = {}
    for x, c in bracket_words(b, v):
        for w, d in bracket_words(a, x):
            acc[w] = acc.get(w, 0) + c * d
    for x, c in bracket_words(a, v):
        for w, d in bracket_words(x, b):
            acc[w] = acc.get(w, 0) + c * d
    return tuple(sorted((w, c) for w, c in acc.items() if c))


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """李括号，双线性、反对称，结果截断在 D"""
    x._check_compatible(y)
    limit = x.truncation_degree
    acc: Dict[LyndonWord, Fraction] = {}
    for u, a in x.items():
        for v, b in y.items():
            if u.degree + v.degree > limit:
                continue
            for w, c in bracket_words(u, v):
                acc[w] = acc.get(w, 0) + a * b * c
    return LieElement(acc, limit)


def ad_power(g: Union[Generator, str], k: int, target: LieElement) -> LieElement:
    """
    计算 ad^k(g)(target)，即连续 k 次左乘括号 [g, .]

    Args:
        g: 生成元
        k: 次数 >= 0
        target: 被作用的元素

    Returns:
        ad^k(g)(target)
    """
    if k < 0:
        raise DomainError("k 必须 >= 0")
    if target.is_zero():
        return target
    limit = target.truncation_degree
    if k + target.degree > limit:
        raise DegreeOverflowError(f"ad^{k} 作用后次数 {k + target.degree} 超过截断次数 {limit}")
    gen = LieElement.generator(g, limit)
    result = target
    for _ in range(k):
        result = bracket(gen, result)
    return result


@dataclass(frozen=True)
class BracketTree:
    """括号树：叶子为生成元，内部节点为有序对 (left, right)"""
    left: Union[Generator, "BracketTree"]
    right: Union[Generator, "BracketTree"]

    @property
    def degree(self) -> int:
        return tree_degree(self.left) + tree_degree(self.right)

    def __str__(self):
        return f"[{tree_text(self.left)},{tree_text(self.right)}]"


Tree = Union[Generator, BracketTree]
Expression = Sequence[Tuple[object, Tree]]


def tree_degree(tree: Tree) -> int:
    if isinstance(tree, Generator):
        return 1
    return tree.degree


def tree_text(tree: Tree) -> str:
    if isinstance(tree, Generator):
        return tree.symbol
    return str(tree)


_LBRACK, _RBRACK, _COMMA = map(pp.Suppress, "[],")
_TREE = pp.Forward()
_LETTER = pp.one_of("e f E F").set_parse_action(lambda t: Generator(t[0].upper()))
_PAIR = (_LBRACK + _TREE + _COMMA + _TREE + _RBRACK).set_parse_action(lambda t: BracketTree(t[0], t[1]))
_TREE <<= _LETTER | _PAIR
_SIGN = pp.Optional(pp.one_of("+ -"), default="+")
_COEFF = pp.Optional(pp.Regex(r"\d+(?:/\d+)?\s*\*?"), default="1")
_EXPRESSION = pp.OneOrMore(pp.Group(_SIGN + _COEFF + _TREE))


def parse_bracket(text: str) -> List[Tuple[Fraction, Tree]]:
    """
    解析括号表达式，例如 "2*[e,[e,f]] - [f,[e,f]]"

    Returns:
        (系数, 括号树) 列表
    """
    try:
        groups = _EXPRESSION.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise DomainError(f"无法解析括号表达式 {text!r}: {e}") from e
    expr = []
    for sign, coeff, tree in groups:
        try:
            value = Fraction(coeff.rstrip("* \t"))
        except (ZeroDivisionError, ValueError) as e:
            raise DomainError(f"非法的系数 {coeff!r}: {e}") from e
        expr.append((-value if sign == "-" else value, tree))
    return expr


def _expand_tree(tree: Tree, truncation_degree: int) -> LieElement:
    if isinstance(tree, Generator):
        return LieElement.generator(tree, truncation_degree)
    return bracket(_expand_tree(tree.left, truncation_degree), _expand_tree(tree.right, truncation_degree))


def rewrite_to_basis(expr: Union[str, Tree, Expression], truncation_degree: int) -> LieElement:
    """
    把任意括号表达式改写为 Lyndon 基下的唯一展开

    Args:
        expr: 括号表达式文本、单棵括号树或 (系数, 树) 列表
        truncation_degree: 截断次数 D

    Returns:
        LieElement；单棵输入树的次数超过 D 时抛出 DegreeOverflowError
    """
    if isinstance(expr, str):
        expr = parse_bracket(expr)
    elif isinstance(expr, (Generator, BracketTree)):
        expr = [(1, expr)]
    result = LieElement.zero(truncation_degree)
    for coeff, tree in expr:
        if tree_degree(tree) > truncation_degree:
            raise DegreeOverflowError(
                f"括号树 {tree_text(tree)} 的次数 {tree_degree(tree)} 超过截断次数 {truncation_degree}"
            )
        result = result + Fraction(coeff) * _expand_tree(tree, truncation_degree)
    return result
