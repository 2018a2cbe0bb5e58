"""
独立校验：把括号展开到自由结合代数，[A,B] = AB - BA
自由李代数嵌入其包络代数，因此两个李元素相等当且仅当展开式相等
"""

from fractions import Fraction
from typing import Dict, Iterable, List

from hypothesis import strategies as st
from sympy import Matrix, Rational

from lie.freelie import BracketTree, Generator, LieElement, LyndonWord, lyndon_basis

Poly = Dict[str, Fraction]


def _clean(p: Poly) -> Poly:
    return {k: v for k, v in p.items() if v}


def _mul(p: Poly, q: Poly) -> Poly:
    result: Poly = {}
    for a, x in p.items():
        for b, y in q.items():
            result[a + b] = result.get(a + b, 0) + x * y
    return _clean(result)


def _add(p: Poly, q: Poly, scale=1) -> Poly:
    result = dict(p)
    for k, v in q.items():
        result[k] = result.get(k, 0) + scale * v
    return _clean(result)


def commutator(p: Poly, q: Poly) -> Poly:
    return _add(_mul(p, q), _mul(q, p), -1)


def expand_tree(tree) -> Poly:
    if isinstance(tree, Generator):
        return {tree.value: Fraction(1)}
    return commutator(expand_tree(tree.left), expand_tree(tree.right))


def expand_word(w: LyndonWord) -> Poly:
    if w.degree == 1:
        return {w.letters: Fraction(1)}
    u, v = w.standard_factorization()
    return commutator(expand_word(u), expand_word(v))


def expand_element(x: LieElement) -> Poly:
    result: Poly = {}
    for w, c in x.items():
        result = _add(result, expand_word(w), c)
    return result


def rank(polys: Iterable[Poly]) -> int:
    polys = list(polys)
    monomials = sorted({m for p in polys for m in p})
    if not monomials:
        return 0
    rows = [[Rational(str(p.get(m, 0))) for m in monomials] for p in polys]
    return Matrix(rows).rank()


def words_up_to(degree: int) -> List[LyndonWord]:
    return [w for d in range(1, degree + 1) for w in lyndon_basis(d)]


def elements(max_degree: int, truncation_degree: int, max_terms: int = 4):
    """系数为小整数的随机李元素"""
    return st.dictionaries(
        st.sampled_from(words_up_to(max_degree)), st.integers(-3, 3), max_size=max_terms
    ).map(lambda terms: LieElement(terms, truncation_degree))


def random_element(rng, max_degree: int, truncation_degree: int, max_terms: int = 4) -> LieElement:
    """seeded 循环用的随机李元素"""
    pool = words_up_to(max_degree)
    terms = {rng.choice(pool): rng.randint(-3, 3) for _ in range(rng.randint(1, max_terms))}
    return LieElement(terms, truncation_degree)


generators = st.sampled_from([Generator.E, Generator.F])

trees = st.recursive(generators, lambda children: st.builds(BracketTree, children, children), max_leaves=6)
