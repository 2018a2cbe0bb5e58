"""
Galois 作用的符号记账
特征标签 χ^a χ̄^b、N 在 L 上作用的首项同余检验、σ 在 W 分次块上的对合
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Tuple

from sympy import Matrix, Rational, eye

import config
from .exceptions import DomainError, TruncationMismatchError
from .freelie import Generator, LieElement, LyndonWord, bracket, lyndon_basis
from .wquotient import Bidegree, FiltrationIdeal, project_to_w, w_graded_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CharacterLabel:
    """χ^a χ̄^b；Tate 扭 Q_p(1) 对应 (1,1)"""
    a: int
    b: int

    def twist(self, k: int) -> "CharacterLabel":
        return CharacterLabel(self.a + k, self.b + k)

    def dual(self) -> "CharacterLabel":
        return CharacterLabel(-self.a, -self.b)

    def sigma(self) -> "CharacterLabel":
        return CharacterLabel(self.b, self.a)

    def dual_twist(self) -> "CharacterLabel":
        """(·)*(1)：(a,b) -> (1-a, 1-b)"""
        return self.dual().twist(1)

    def as_tuple(self) -> Tuple[int, int]:
        return self.a, self.b

    def __str__(self):
        return f"χ^{self.a} χ̄^{self.b}"


CYCLOTOMIC = CharacterLabel(1, 1)


@dataclass(frozen=True)
class GradedModuleLabel:
    """W^{n+1}\\W^n 携带的特征以及 σ 是否交换两个因子"""
    level: int
    characters: Tuple[CharacterLabel, ...]
    sigma_swaps: bool

    @property
    def minus_eigenspace_dimension(self) -> int:
        # 带符号的交换在两个因子上恰有一个 -1 特征向量；Q_p(1) 上 σ 作用为 -1
        if self.sigma_swaps:
            return len(self.characters) // 2
        return sum(1 for ch in self.characters if ch == CYCLOTOMIC)


def character_of_word(w: LyndonWord) -> CharacterLabel:
    """双次数 (i,j) 的基词上首项作用的特征 χ^i χ̄^j"""
    return CharacterLabel(*w.bidegree)


def character_of_graded_piece(n: int) -> GradedModuleLabel:
    if n < 2:
        raise DomainError("character_of_graded_piece 要求 n >= 2")
    if n == 2:
        return GradedModuleLabel(2, (CYCLOTOMIC,), sigma_swaps=False)
    chi = CharacterLabel(n - 2, 0).twist(1)
    return GradedModuleLabel(n, (chi, chi.sigma()), sigma_swaps=True)


def dual_twist(label: CharacterLabel) -> CharacterLabel:
    return label.dual_twist()


class _Extension:
    """把生成元的像按标准括号化延拓为李代数自同态，基词的像带缓存"""

    def __init__(self, images: Mapping[str, LieElement]):
        self._cache: Dict[LyndonWord, LieElement] = {}
        self._images = images

    def image(self, w: LyndonWord) -> LieElement:
        if w not in self._cache:
            if w.degree == 1:
                self._cache[w] = self._images[w.letters]
            else:
                u, v = w.standard_factorization()
                self._cache[w] = bracket(self.image(u), self.image(v))
        return self._cache[w]

    def __call__(self, x: LieElement) -> LieElement:
        result = LieElement.zero(x.truncation_degree)
        for w, c in x.items():
            result = result + c * self.image(w)
        return result


def _apply_endomorphism(images: Mapping[str, LieElement], x: LieElement) -> LieElement:
    return _Extension(images)(x)


@dataclass(frozen=True, eq=False)
class LieAutomorphism:
    """e -> c·e + z, f -> cbar·f + z'，其中 z, z' ∈ L^2"""
    c: Fraction
    cbar: Fraction
    z: LieElement
    zprime: LieElement
    truncation_degree: int

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "cbar", Fraction(self.cbar))
        if not self.c or not self.cbar:
            raise DomainError("c 与 cbar 必须非零")
        for name in ("z", "zprime"):
            pert = getattr(self, name)
            if pert.truncation_degree != self.truncation_degree:
                raise TruncationMismatchError(f"{name} 的截断次数与自同构不一致")
            if not pert.is_zero() and pert.min_degree < 2:
                raise DomainError(f"{name} 必须位于 L^2 中")

    @classmethod
    def diagonal(cls, c, cbar, truncation_degree: int) -> "LieAutomorphism":
        zero = LieElement.zero(truncation_degree)
        return cls(c, cbar, zero, zero, truncation_degree)

    def images(self) -> Dict[str, LieElement]:
        D = self.truncation_degree
        return {
            "E": self.c * LieElement.generator(Generator.E, D) + self.z,
            "F": self.cbar * LieElement.generator(Generator.F, D) + self.zprime,
        }

    def is_diagonal(self) -> bool:
        return self.z.is_zero() and self.zprime.is_zero()

    def compose(self, first: "LieAutomorphism") -> "LieAutomorphism":
        """self ∘ first，标量相乘"""
        if first.truncation_degree != self.truncation_degree:
            raise TruncationMismatchError("复合的两个自同构截断次数不一致")
        return LieAutomorphism(
            c=self.c * first.c,
            cbar=self.cbar * first.cbar,
            z=first.c * self.z + apply_automorphism(self, first.z),
            zprime=first.cbar * self.zprime + apply_automorphism(self, first.zprime),
            truncation_degree=self.truncation_degree,
        )

    @classmethod
    def sample(cls, rng: random.Random, truncation_degree: int, diagonal: bool = False,
               perturbation_degree: int = 4) -> "LieAutomorphism":
        """
        随机采样一个自同构

        Args:
            rng: 随机数发生器（调用方负责播种）
            truncation_degree: 截断次数 D
            diagonal: 为 True 时 z = z' = 0
            perturbation_degree: 扰动项的最高次数

        Returns:
            LieAutomorphism
        """
        def scalar() -> Fraction:
            return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))

        def perturbation() -> LieElement:
            terms: Dict[LyndonWord, int] = {}
            for d in range(2, min(truncation_degree, perturbation_degree) + 1):
                for w in rng.sample(lyndon_basis(d), k=min(2, len(lyndon_basis(d)))):
                    terms[w] = rng.randint(-2, 2)
            return LieElement(terms, truncation_degree)

        c, cbar = scalar(), scalar()
        if diagonal:
            return cls.diagonal(c, cbar, truncation_degree)
        return cls(c, cbar, perturbation(), perturbation(), truncation_degree)

    def describe(self) -> Dict[str, str]:
        return {
            "c": str(self.c),
            "cbar": str(self.cbar),
            "z": self.z.pretty(),
            "zprime": self.zprime.pretty(),
            "truncation_degree": str(self.truncation_degree),
        }


def apply_automorphism(phi: LieAutomorphism, x: LieElement) -> LieElement:
    """自同构在 x 上的作用（与括号相容的唯一延拓）"""
    if phi.truncation_degree != x.truncation_degree:
        raise TruncationMismatchError(
            f"截断次数不一致: {phi.truncation_degree} != {x.truncation_degree}"
        )
    return _apply_endomorphism(phi.images(), x)


@dataclass
class LeadingTermReport:
    """单个基词的首项同余检验结果"""
    word: LyndonWord
    bidegree: Bidegree
    remainder: LieElement
    guaranteed: bool
    literal: bool
    stable: bool
    literal_witnesses: List[LyndonWord] = field(default_factory=list)


def check_leading_term(phi: LieAutomorphism, max_degree: int) -> List[LeadingTermReport]:
    """
    对每个次数 <= max_degree 的基词 l 检验 phi(l) - c^i cbar^j l

    guaranteed: 余项每一项总次数 > i+j 且双次数 >= (i,j)，对所有扰动成立
    literal:    余项位于 L_{>=i+1,>=j+1}，只记录不断言
    """
    if max_degree < 1:
        raise DomainError("max_degree 必须 >= 1")
    if max_degree > phi.truncation_degree - 1:
        raise DomainError(
            f"max_degree={max_degree} 需要不超过截断次数减一 ({phi.truncation_degree - 1})"
        )
    D = phi.truncation_degree
    extension = _Extension(phi.images())
    reports = []
    for d in range(1, max_degree + 1):
        for w in lyndon_basis(d):
            i, j = w.bidegree
            basis_element = LieElement.basis(w, D)
            image = extension(basis_element)
            remainder = image - (phi.c ** i) * (phi.cbar ** j) * basis_element
            guaranteed = all(
                t.degree > i + j and Bidegree.of(t).dominates(i, j) for t in remainder.terms
            )
            witnesses = sorted(t for t in remainder.terms if not Bidegree.of(t).dominates(i + 1, j + 1))
            reports.append(
                LeadingTermReport(
                    word=w,
                    bidegree=Bidegree(i, j),
                    remainder=remainder,
                    guaranteed=guaranteed,
                    literal=not witnesses,
                    stable=image in FiltrationIdeal(i, j),
                    literal_witnesses=witnesses,
                )
            )
            if not guaranteed:
                logger.error("首项同余失败: l=%s, 余项=%s", w, remainder.pretty())
    return reports


def sigma_involution(x: LieElement) -> LieElement:
    """生成元交换 e <-> f 的李对合"""
    D = x.truncation_degree
    return _apply_endomorphism(
        {"E": LieElement.generator(Generator.F, D), "F": LieElement.generator(Generator.E, D)},
        x,
    )


def _to_rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def sigma_matrix(n: int) -> Matrix:
    """project∘sigma 在 w_graded_basis(n) 上的矩阵（列为基元素的像）"""
    if n < 1:
        raise DomainError("sigma_matrix 要求 n >= 1")
    basis = w_graded_basis(n)
    columns = []
    for b in basis:
        image = project_to_w(sigma_involution(LieElement.basis(b, n))).representative
        columns.append([_to_rational(image.coefficient(w)) for w in basis])
    return Matrix(columns).T


@lru_cache(maxsize=None)
def minus_eigenspace_dimension(n: int) -> int:
    """dim (W^{n+1}\\W^n)^-，n 较小时对角化计算，超过枚举上限用闭式 1"""
    if n < 2:
        raise DomainError("minus_eigenspace_dimension 要求 n >= 2")
    if n > config.ENUMERATION_LIMIT:
        return 1
    m = sigma_matrix(n)
    return len((m + eye(m.rows)).nullspace())


def sample_automorphisms(seed: int, count: int, truncation_degree: int,
                         diagonal: bool = False) -> List[LieAutomorphism]:
    """按试验序号独立播种，分片并发时结果可复现"""
    return [
        LieAutomorphism.sample(random.Random(f"{seed}:{index}"), truncation_degree, diagonal=diagonal)
        for index in range(count)
    ]

